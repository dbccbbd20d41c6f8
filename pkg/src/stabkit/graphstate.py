"""Graph states, local complementation and Pauli-measurement rewrites.

A :class:`GraphState` represents the vector::

    (F_0 B_0) (x) (F_1 B_1) (x) ... |G>

where ``|G>`` is the graph state of ``graph``, ``B_v`` a Pauli byproduct and
``F_v`` a single-qubit Clifford frame. Measuring a vertex rewrites the graph
with local complementations, pushes the corresponding H/S corrections into the
frame and the sign bookkeeping of the outcome into the byproducts. The measured
vertex stays in the graph as an isolated qubit whose frame maps ``|+>`` onto
the observed eigenstate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .pauli import PauliString, conjugate_clifford
from .statevec import StateVector, gate_matrix
from .tableau import Tableau

_LETTERS = "IXZY"


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        for v, mask in enumerate(self.adj):
            if mask >> self.n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def parse(cls, text: str) -> Graph:
        """First non-comment line ``n``, then one ``u v`` edge per line."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty graph file")
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls.from_edges(n, edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for |V|={self.n}")

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        comps = []
        while left:
            start = left & -left
            seen = frontier = start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= nxt
            comps.append(list(_bits(seen)))
            left &= ~seen
        return comps

    def local_complement(self, v: int) -> Graph:
        """Toggle every edge inside the neighbourhood of ``v``."""
        self._check_vertex(v)
        nv = self.adj[v]
        adj = list(self.adj)
        for u in _bits(nv):
            adj[u] ^= nv & ~(1 << u)
        return Graph(self.n, tuple(adj))

    def isolate(self, v: int) -> Graph:
        """Delete every edge incident to ``v``."""
        self._check_vertex(v)
        adj = list(self.adj)
        for u in _bits(adj[v]):
            adj[u] &= ~(1 << v)
        adj[v] = 0
        return Graph(self.n, tuple(adj))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def stabilizer_generators(g: Graph) -> Tableau:
    """``K_i = X_i prod_{j in N_i} Z_j`` for every vertex."""
    return Tableau(g.n, tuple(PauliString(g.n, 1 << i, g.adj[i]) for i in range(g.n)))


def build_state(g: Graph, max_qubits: int | None = None) -> StateVector:
    """Dense graph state: CZ on every edge applied to ``|+>^n``."""
    kwargs = {} if max_qubits is None else {"max_qubits": max_qubits}
    psi = StateVector.plus(g.n, **kwargs)
    amps = psi.amplitudes.copy()
    idx = np.arange(1 << g.n, dtype=np.int64)
    for u, v in g.edges():
        both = ((idx >> u) & (idx >> v) & 1).astype(bool)
        amps[both] *= -1
    return StateVector(amps, g.n, normalized=True, **kwargs)


# ---------------------------------------------------------------------------
# single-qubit Cliffords


@dataclass(frozen=True)
class OneQubitClifford:
    """Conjugation action ``P -> U P U^dagger`` on X and Z (global phase dropped)."""

    x_image: PauliString
    z_image: PauliString

    def conjugate(self, p: PauliString) -> PauliString:
        """Image of a one-qubit Pauli."""
        xb, zb = p.x & 1, p.z & 1
        out = PauliString.identity(1)
        if xb:
            out = self.x_image
        if zb:
            out = out * self.z_image
        # Y = i X Z
        extra = 1 if (xb and zb) else 0
        return PauliString(1, out.x, out.z, out.phase + p.phase + extra)

    def after(self, other: OneQubitClifford) -> OneQubitClifford:
        """The Clifford ``self * other`` (``other`` acts first)."""
        return OneQubitClifford(self.conjugate(other.x_image), self.conjugate(other.z_image))

    def inverse(self) -> OneQubitClifford:
        for cand in _clifford_table():
            if cand.after(self).is_identity:
                return cand
        raise AssertionError("Clifford table incomplete")  # pragma: no cover

    @property
    def is_identity(self) -> bool:
        return self == IDENTITY

    @property
    def word(self) -> str:
        """Shortest gate word over {H, S}, rightmost gate applied first."""
        return _clifford_table()[self][0] or "I"

    def matrix(self) -> np.ndarray:
        return _clifford_table()[self][1].copy()

    @classmethod
    def from_gate(cls, gate: str) -> OneQubitClifford:
        one = lambda s: PauliString.from_label(s)  # noqa: E731
        return cls(conjugate_clifford(one("X"), gate, 0), conjugate_clifford(one("Z"), gate, 0))

    @classmethod
    def pauli(cls, letter: str) -> OneQubitClifford:
        return cls.from_gate(letter)

    def __str__(self) -> str:
        return self.word


IDENTITY = OneQubitClifford(PauliString.from_label("X"), PauliString.from_label("Z"))


@lru_cache(maxsize=None)
def _clifford_table() -> dict[OneQubitClifford, tuple[str, np.ndarray]]:
    """All 24 elements by breadth-first search over words in H and S."""
    table = {IDENTITY: ("", np.eye(2, dtype=complex))}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for c in frontier:
            word, mat = table[c]
            for g in ("H", "S"):
                new = OneQubitClifford.from_gate(g).after(c)
                if new not in table:
                    table[new] = (g + word, gate_matrix(g) @ mat)
                    nxt.append(new)
        frontier = nxt
    assert len(table) == 24
    return table


def single_qubit_cliffords() -> list[OneQubitClifford]:
    return list(_clifford_table())


@dataclass(frozen=True)
class LocalClifford:
    """One single-qubit Clifford per vertex."""

    gates: tuple[OneQubitClifford, ...]

    @classmethod
    def identity(cls, n: int) -> LocalClifford:
        return cls((IDENTITY,) * n)

    def __getitem__(self, v: int) -> OneQubitClifford:
        return self.gates[v]

    def __len__(self) -> int:
        return len(self.gates)

    def replace(self, updates: dict[int, OneQubitClifford]) -> LocalClifford:
        gates = list(self.gates)
        for v, c in updates.items():
            gates[v] = c
        return LocalClifford(tuple(gates))

    def conjugate(self, p: PauliString) -> PauliString:
        """Image of an n-qubit Pauli under the tensor product."""
        out = PauliString(p.n, 0, 0, p.phase)
        for q in range(p.n):
            letter = p.letter(q)
            if letter == "I":
                continue
            img = self.gates[q].conjugate(PauliString.from_label(letter))
            out = PauliString(p.n, out.x | (img.x << q), out.z | (img.z << q),
                              out.phase + img.phase)
        return out


# ---------------------------------------------------------------------------
# graph states with frames


def _pauli_letter_product(a: str, b: str) -> str:
    ia, ib = _LETTERS.index(a), _LETTERS.index(b)
    return _LETTERS[ia ^ ib]


@dataclass(frozen=True)
class GraphState:
    graph: Graph
    frame: LocalClifford
    byproduct: str
    measured: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_graph(cls, g: Graph) -> GraphState:
        return cls(g, LocalClifford.identity(g.n), "I" * g.n, frozenset())

    @property
    def n(self) -> int:
        return self.graph.n

    def to_statevector(self, max_qubits: int | None = None) -> StateVector:
        """Dense vector with byproducts, then frames, applied to ``|G>``."""
        psi = build_state(self.graph, max_qubits)
        for v in range(self.n):
            if self.byproduct[v] != "I":
                psi = psi.apply_gate(self.byproduct[v], v)
            if not self.frame[v].is_identity:
                psi = psi.apply_matrix(self.frame[v].matrix(), v)
        return psi

    def stabilizer_tableau(self) -> Tableau:
        """Signed stabilizer group of the represented state."""
        tab = stabilizer_generators(self.graph)
        for v, letter in enumerate(self.byproduct):
            if letter != "I":
                tab = tab.apply_clifford(letter, v)
        return Tableau(self.n, tuple(self.frame.conjugate(g) for g in tab.generators))


def _graph_rule(g: Graph, v: int, basis: str, h: int | None):
    """Graph rewrite and '+'-branch local corrections for measuring ``basis`` at ``v``.

    Returns ``(new_graph, corrections)`` where ``corrections`` maps vertices
    to Cliffords; remaining sign differences are Paulis fixed afterwards.
    """
    nbrs = g.neighbors(v)
    if basis == "Z":
        return g.isolate(v), {}
    if basis == "Y":
        s_gate = OneQubitClifford.from_gate("S")
        return g.local_complement(v).isolate(v), {b: s_gate for b in nbrs}
    if not nbrs:
        return g, {}
    if h is None:
        h = nbrs[0]
    elif h not in nbrs:
        raise ValueError(f"special neighbour {h} is not adjacent to {v}")
    new = g.local_complement(h).local_complement(v).isolate(v).local_complement(h)
    return new, {h: OneQubitClifford.from_gate("H")}


# maps |+> (stabilizer X) onto a +1 eigenstate of the measured basis, up to sign
_EIGEN_PREP = {"X": "I", "Y": "S", "Z": "H"}


def measure_graph(gs: GraphState, v: int, basis: str, outcome: int | str,
                  h: int | None = None) -> GraphState:
    """Measure ``basis`` in {X, Y, Z} at vertex ``v`` with a given outcome.

    ``outcome`` is +1/-1 (or '+'/'-'). For X measurements ``h`` picks the
    special neighbour (default: lowest index). Asking for an outcome of
    probability zero raises ``ValueError``.
    """
    basis = basis.upper()
    if basis not in ("X", "Y", "Z"):
        raise ValueError(f"basis must be X, Y or Z, got {basis!r}")
    if outcome in ("+", "-"):
        outcome = 1 if outcome == "+" else -1
    if outcome not in (1, -1):
        raise ValueError("outcome must be +1 or -1")
    gs.graph._check_vertex(v)
    if v in gs.measured:
        raise ValueError(f"vertex {v} was already measured")
    n = gs.n

    # pull the observable back through frame and byproduct
    sigma = PauliString.from_label(basis)
    pulled = gs.frame[v].inverse().conjugate(sigma)
    tau = pulled.letter(0)
    eff = outcome * pulled.sign
    byp = gs.byproduct[v]
    if byp not in ("I", tau):
        eff = -eff

    new_graph, corr = _graph_rule(gs.graph, v, tau, h)
    prep = OneQubitClifford.from_gate(_EIGEN_PREP[tau])
    local = LocalClifford.identity(n).replace({**corr, v: prep})

    target_obs = PauliString.single(n, v, tau)
    _, target = stabilizer_generators(gs.graph).measure_pauli(target_obs, outcome=eff)

    flips = []
    for gen in stabilizer_generators(new_graph).generators:
        cand = local.conjugate(gen)
        elem = target.decompose(cand)
        if elem is None:  # pragma: no cover - would mean a wrong rewrite rule
            raise AssertionError(f"rewrite rule failed for basis {tau} at vertex {v}")
        flips.append(elem.phase != cand.phase)

    frame = list(gs.frame.gates)
    byproduct = list(gs.byproduct)
    for w in range(n):
        z_fix = "Z" if flips[w] else "I"
        if w == v:
            frame[w] = (gs.frame[w].after(OneQubitClifford.pauli(byp))
                        .after(prep).after(OneQubitClifford.pauli(z_fix)))
            byproduct[w] = "I"
            continue
        c = local[w]
        b = byproduct[w]
        if b != "I" and not c.is_identity:
            b = c.inverse().conjugate(PauliString.from_label(b)).letter(0)
        byproduct[w] = _pauli_letter_product(b, z_fix)
        if not c.is_identity:
            frame[w] = frame[w].after(c)
    return GraphState(new_graph, LocalClifford(tuple(frame)), "".join(byproduct),
                      gs.measured | {v})


def local_complement(g: Graph, v: int) -> Graph:
    return g.local_complement(v)
