"""Classical spin models on hypergraphs, their graph-state overlaps and duals.

Spins take values ``s_i in {0, 1}`` and a term ``a`` over sites ``S_a``
contributes ``J_a * (XOR of s_i over S_a)`` to the energy::

    Z(beta) = sum_s exp(-beta * sum_a J_a * parity_a(s))

Couplings and beta may be complex.

Overlap form. Let ``G`` be the mediated graph (site vertices plus one vertex
per multi-body term, joined to its member sites) and put H on every term
vertex. Then::

    Z = 2^{n_1/2} * <b| H_terms |G>

with unconjugated product bra ``b = prod (1, exp(-beta J))`` over sites
(their summed field) and terms.

Duality. ``<J| H = f <J~|`` with ``f = (1 + e^{-beta J}) / sqrt(2)`` and
``e^{-beta J~} = tanh(beta J / 2)``. Applying this to every vertex swaps the
bipartition, so::

    Z = 2^{(n_1 - n~_1)/2} * prod_v f_v * Z~

where ``n~_1`` is the number of multi-body terms (the dual sites) and the
product runs over all sites and multi-body terms.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from typing import Sequence

import networkx as nx
import numpy as np

from ._accel import njit
from .graphstate import Graph, build_state
from .statevec import MAX_QUBITS, StateVector, gate_matrix, overlap

DIRECT_MAX_SITES = 24


@dataclass(frozen=True)
class Term:
    spins: tuple[int, ...]
    J: complex

    @property
    def arity(self) -> int:
        return len(self.spins)


@dataclass(frozen=True)
class SpinModel:
    n_sites: int
    terms: tuple[Term, ...]
    beta: complex = 1.0

    def __post_init__(self):
        terms = []
        for t in self.terms:
            if not isinstance(t, Term):
                spins, J = t
                t = Term(tuple(int(s) for s in spins), complex(J))
            if not t.spins:
                raise ValueError("term with no sites")
            if len(set(t.spins)) != len(t.spins):
                raise ValueError(f"term {t.spins} repeats a site")
            for s in t.spins:
                if not 0 <= s < self.n_sites:
                    raise ValueError(f"site {s} out of range for {self.n_sites} sites")
            terms.append(t)
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "beta", complex(self.beta))

    @property
    def fields(self) -> np.ndarray:
        """Summed arity-1 coupling on each site (0 where there is none)."""
        h = np.zeros(self.n_sites, dtype=complex)
        for t in self.terms:
            if t.arity == 1:
                h[t.spins[0]] += t.J
        return h

    @property
    def multi_terms(self) -> list[Term]:
        return [t for t in self.terms if t.arity > 1]

    def has_field(self, site: int) -> bool:
        return any(t.arity == 1 and t.spins[0] == site for t in self.terms)

    def energy(self, config) -> complex:
        s = np.asarray(config, dtype=np.int64)
        return sum(t.J * (int(s[list(t.spins)].sum()) & 1) for t in self.terms)

    # -- serialization ------------------------------------------------

    def to_dict(self, prefactor: complex | None = None) -> dict:
        out = {
            "sites": self.n_sites,
            "beta": _encode(self.beta),
            "terms": [{"spins": list(t.spins), "J": _encode(t.J)} for t in self.terms],
        }
        if prefactor is not None:
            out["prefactor"] = _encode(prefactor)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> SpinModel:
        try:
            n = int(data["sites"])
            beta = _decode(data.get("beta", 1.0))
            terms = tuple(Term(tuple(int(s) for s in t["spins"]), _decode(t["J"]))
                          for t in data["terms"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed spin-model description: {exc}") from None
        return cls(n, terms, beta)


def _encode(z: complex):
    z = complex(z)
    return z.real if z.imag == 0 else {"re": z.real, "im": z.imag}


def _decode(v) -> complex:
    if isinstance(v, dict):
        return complex(float(v.get("re", 0.0)), float(v.get("im", 0.0)))
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"expected a number or {{re, im}}, got {v!r}")
    return complex(v)


def load_model(path) -> tuple[SpinModel, complex | None]:
    with open(path) as fh:
        data = json.load(fh)
    pref = _decode(data["prefactor"]) if "prefactor" in data else None
    return SpinModel.from_dict(data), pref


def dump_model(model: SpinModel, prefactor: complex | None = None) -> str:
    return json.dumps(model.to_dict(prefactor), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# direct enumeration


@njit
def _partition_kernel(n, masks, weights):
    total = 0j
    for s in range(1 << n):
        acc = 0j
        for k in range(masks.shape[0]):
            v = s & masks[k]
            par = 0
            while v:
                v &= v - 1
                par ^= 1
            if par:
                acc += weights[k]
        total += np.exp(acc)
    return total


def _term_arrays(m: SpinModel):
    masks = np.array([sum(1 << s for s in t.spins) for t in m.terms], dtype=np.int64)
    weights = np.array([-m.beta * t.J for t in m.terms], dtype=np.complex128)
    return masks, weights


def partition_direct(m: SpinModel) -> complex:
    """Exact sum over all ``2^n_1`` configurations."""
    if m.n_sites > DIRECT_MAX_SITES:
        raise ValueError(f"direct enumeration limited to {DIRECT_MAX_SITES} sites, "
                         f"got {m.n_sites}")
    masks, weights = _term_arrays(m)
    if masks.size == 0:
        return complex(2 ** m.n_sites)
    return complex(_partition_kernel(m.n_sites, masks, weights))


# ---------------------------------------------------------------------------
# mediated graph and overlap


@dataclass(frozen=True)
class MediatedGraph:
    """Bipartite graph: vertices ``0..n_sites-1`` are sites, the rest are the
    multi-body terms in model order."""

    graph: Graph
    n_sites: int
    terms: tuple[Term, ...]

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def term_vertex(self, k: int) -> int:
        return self.n_sites + k

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for v in range(self.graph.n):
            g.add_node(v, kind="site" if v < self.n_sites else "term")
        g.add_edges_from(self.graph.edges())
        return g


def mediated_graph(m: SpinModel) -> MediatedGraph:
    """Site vertices joined to one vertex per term of arity >= 2; fields stay on sites."""
    multi = tuple(m.multi_terms)
    edges = [(s, m.n_sites + k) for k, t in enumerate(multi) for s in t.spins]
    return MediatedGraph(Graph.from_edges(m.n_sites + len(multi), edges), m.n_sites, multi)


def _bra_factor(beta: complex, J: complex) -> np.ndarray:
    return np.array([1.0, cmath.exp(-beta * J)], dtype=complex)


def partition_via_overlap(m: SpinModel, max_qubits: int = MAX_QUBITS) -> complex:
    """``2^{n_1/2} <b| H_terms |G>`` evaluated on dense state vectors."""
    med = mediated_graph(m)
    n = med.graph.n
    if n > max_qubits:
        raise ValueError(f"mediated graph has {n} vertices, state-vector cap is {max_qubits}")
    psi = build_state(med.graph, max_qubits=max_qubits)
    H = gate_matrix("H")
    for k in range(med.n_terms):
        psi = psi.apply_matrix(H, med.term_vertex(k))
    fields = m.fields
    factors = [_bra_factor(m.beta, fields[i]) for i in range(m.n_sites)]
    factors += [_bra_factor(m.beta, t.J) for t in med.terms]
    # overlap() conjugates its first argument; the bra coefficients enter as written
    bra = StateVector.product([np.conj(f) for f in factors]) if n else StateVector(np.ones(1), 0)
    return 2.0 ** (m.n_sites / 2) * overlap(bra, psi)


# ---------------------------------------------------------------------------
# duality


def dual_coupling(beta: complex, J: complex) -> complex:
    """``J~`` with ``exp(-beta J~) = tanh(beta J / 2)`` (principal logarithm)."""
    t = cmath.tanh(beta * J / 2)
    if t == 0 or not cmath.isfinite(t):
        raise ValueError(f"tanh(beta*J/2) = {t} for J = {J}; the dual coupling is undefined")
    return -cmath.log(t) / beta


def hadamard_factor(beta: complex, J: complex) -> complex:
    return (1 + cmath.exp(-beta * J)) / math.sqrt(2)


def dualize(m: SpinModel) -> tuple[SpinModel, complex]:
    """Dual model and prefactor with ``Z(m) = prefactor * Z(dual)``.

    Dual sites are the multi-body terms (field ``J~_a``); each original site
    becomes a term over its incident multi-body terms with coupling ``J~_i``.
    A site in exactly one term turns into an extra field on that dual site;
    a site in none contributes only its factor ``f``.
    """
    if m.beta == 0:
        raise ValueError("duality needs beta != 0")
    missing = [i for i in range(m.n_sites) if not m.has_field(i)]
    if missing:
        raise ValueError(f"sites {missing} carry no field term; every site needs one")
    multi = m.multi_terms
    fields = m.fields
    prefactor = complex(2.0 ** ((m.n_sites - len(multi)) / 2))
    dual_terms: list[Term] = []
    for k, t in enumerate(multi):
        try:
            dual_terms.append(Term((k,), dual_coupling(m.beta, t.J)))
        except ValueError as exc:
            raise ValueError(f"term {t.spins}: {exc}") from None
        prefactor *= hadamard_factor(m.beta, t.J)
    incident: list[list[int]] = [[] for _ in range(m.n_sites)]
    for k, t in enumerate(multi):
        for s in t.spins:
            incident[s].append(k)
    for i in range(m.n_sites):
        prefactor *= hadamard_factor(m.beta, fields[i])
        if not incident[i]:
            continue
        try:
            Jd = dual_coupling(m.beta, fields[i])
        except ValueError as exc:
            raise ValueError(f"site {i}: {exc}") from None
        dual_terms.append(Term(tuple(incident[i]), Jd))
    return SpinModel(len(multi), tuple(dual_terms), m.beta), prefactor


def hypergraph_isomorphic(a: SpinModel, b: SpinModel) -> bool:
    """Isomorphism of the multi-body incidence structure (fields ignored)."""
    ga, gb = mediated_graph(a).to_networkx(), mediated_graph(b).to_networkx()
    return nx.is_isomorphic(ga, gb, node_match=lambda x, y: x["kind"] == y["kind"])


# ---------------------------------------------------------------------------
# standard model families


def square_lattice_model(Lx: int, Ly: int, J: complex = 1.0, h: complex = 0.5,
                         beta: complex = 1.0, periodic: bool = False) -> SpinModel:
    """Two-body nearest-neighbour model with a field on every site."""
    site = lambda x, y: (x % Lx) * Ly + (y % Ly)
    terms = [Term((i,), h) for i in range(Lx * Ly)]
    for x in range(Lx):
        for y in range(Ly):
            if periodic or x + 1 < Lx:
                terms.append(Term(tuple(sorted((site(x, y), site(x + 1, y)))), J))
            if periodic or y + 1 < Ly:
                terms.append(Term(tuple(sorted((site(x, y), site(x, y + 1)))), J))
    return SpinModel(Lx * Ly, tuple(terms), beta)


def plaquette_model(L: int, J: complex = 1.0, h: complex = 0.5,
                    beta: complex = 1.0) -> SpinModel:
    """Four-body term on every plaquette of an L x L torus, field on every site."""
    site = lambda x, y: (x % L) * L + (y % L)
    terms = [Term((i,), h) for i in range(L * L)]
    for x in range(L):
        for y in range(L):
            corners = (site(x, y), site(x + 1, y), site(x, y + 1), site(x + 1, y + 1))
            terms.append(Term(tuple(sorted(corners)), J))
    return SpinModel(L * L, tuple(terms), beta)


def random_model(rng, n_sites: int, n_terms: int, max_arity: int = 4,
                 complex_params: bool = False) -> SpinModel:
    terms = []
    for _ in range(n_terms):
        k = int(rng.integers(1, min(max_arity, n_sites) + 1))
        spins = tuple(sorted(int(s) for s in rng.choice(n_sites, size=k, replace=False)))
        J = rng.normal()
        if complex_params:
            J = complex(J, rng.normal())
        terms.append(Term(spins, complex(J)))
    beta = complex(rng.uniform(0.2, 1.5), rng.uniform(-1, 1) if complex_params else 0.0)
    return SpinModel(n_sites, tuple(terms), beta)


def transfer_matrix_ring(n: int, J: complex, beta: complex, h: Sequence[complex] | None = None) -> complex:
    """Periodic chain of two-body XOR couplings, ``Tr prod T``; an independent check."""
    h = [0.0] * n if h is None else list(h)
    Z = np.eye(2, dtype=complex)
    for i in range(n):
        T = np.array([[1.0, cmath.exp(-beta * J)], [cmath.exp(-beta * J), 1.0]], dtype=complex)
        D = np.diag([1.0, cmath.exp(-beta * h[i])])
        Z = Z @ D @ T
    return complex(np.trace(Z))
