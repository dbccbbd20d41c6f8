"""Toric code geometry on an L x L torus.

Vertices and faces are labelled by ``(x, y)`` with coordinates mod L. Edge
``(x, y, o)`` has index ``2*(x*L + y) + o``; ``o = 0`` is the horizontal edge
from vertex ``(x, y)`` to ``(x+1, y)``, ``o = 1`` the vertical edge from
``(x, y)`` to ``(x, y+1)``. Face ``(x, y)`` is the square whose lower-left
corner is vertex ``(x, y)``.

Z errors live on edges and flip the X-type vertex stabilizers at their
endpoints. X errors flip face stabilizers; they are handled through the dual
lattice, where faces become vertices (see :func:`to_dual`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .pauli import PauliString
from .tableau import Tableau

HORIZONTAL, VERTICAL = 0, 1


class Homology(Enum):
    TRIVIAL = 0
    H = 1
    V = 2
    HV = 3

    @property
    def label(self) -> str:
        return {0: "trivial", 1: "h", 2: "v", 3: "hv"}[self.value]


@dataclass(frozen=True)
class ToricLattice:
    L: int

    def __post_init__(self):
        if self.L < 2:
            raise ValueError("toric lattice needs L >= 2")

    @property
    def n_edges(self) -> int:
        return 2 * self.L * self.L

    @property
    def n_vertices(self) -> int:
        return self.L * self.L

    n_faces = n_vertices

    def edge(self, x: int, y: int, o: int) -> int:
        L = self.L
        return 2 * ((x % L) * L + (y % L)) + o

    def edge_coords(self, e: int) -> tuple[int, int, int]:
        site, o = divmod(e, 2)
        x, y = divmod(site, self.L)
        return x, y, o

    def vertex(self, x: int, y: int) -> int:
        return (x % self.L) * self.L + (y % self.L)

    def vertex_coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.L)

    face = vertex
    face_coords = vertex_coords

    def edge_vertices(self, e: int) -> tuple[int, int]:
        x, y, o = self.edge_coords(e)
        if o == HORIZONTAL:
            return self.vertex(x, y), self.vertex(x + 1, y)
        return self.vertex(x, y), self.vertex(x, y + 1)

    def edge_faces(self, e: int) -> tuple[int, int]:
        """The two faces sharing edge ``e``."""
        x, y, o = self.edge_coords(e)
        if o == HORIZONTAL:
            return self.face(x, y - 1), self.face(x, y)
        return self.face(x - 1, y), self.face(x, y)

    def vertex_edges(self, v: int) -> tuple[int, int, int, int]:
        x, y = self.vertex_coords(v)
        return (self.edge(x, y, HORIZONTAL), self.edge(x - 1, y, HORIZONTAL),
                self.edge(x, y, VERTICAL), self.edge(x, y - 1, VERTICAL))

    def face_edges(self, f: int) -> tuple[int, int, int, int]:
        x, y = self.face_coords(f)
        return (self.edge(x, y, HORIZONTAL), self.edge(x, y + 1, HORIZONTAL),
                self.edge(x, y, VERTICAL), self.edge(x + 1, y, VERTICAL))

    # -- incidence arrays (cached on first use) ---------------------------

    @property
    def vertex_edge_table(self) -> np.ndarray:
        return _vertex_edge_table(self.L)

    @property
    def face_edge_table(self) -> np.ndarray:
        return _face_edge_table(self.L)

    def distance(self, v1: int, v2: int) -> int:
        """Manhattan distance with wraparound."""
        x1, y1 = self.vertex_coords(v1)
        x2, y2 = self.vertex_coords(v2)
        dx, dy = (x2 - x1) % self.L, (y2 - y1) % self.L
        return min(dx, self.L - dx) + min(dy, self.L - dy)

    # -- cycles and cuts --------------------------------------------------

    def cut_h(self) -> np.ndarray:
        """Horizontal edges crossed by a vertical dual line; odd overlap = winds along x."""
        chain = np.zeros(self.n_edges, dtype=np.uint8)
        chain[[self.edge(0, y, HORIZONTAL) for y in range(self.L)]] = 1
        return chain

    def cut_v(self) -> np.ndarray:
        """Vertical edges crossed by a horizontal dual line; odd overlap = winds along y."""
        chain = np.zeros(self.n_edges, dtype=np.uint8)
        chain[[self.edge(x, 0, VERTICAL) for x in range(self.L)]] = 1
        return chain

    def loop_h(self) -> np.ndarray:
        """Primal cycle winding once along x (support of one Z logical)."""
        chain = np.zeros(self.n_edges, dtype=np.uint8)
        chain[[self.edge(x, 0, HORIZONTAL) for x in range(self.L)]] = 1
        return chain

    def loop_v(self) -> np.ndarray:
        chain = np.zeros(self.n_edges, dtype=np.uint8)
        chain[[self.edge(0, y, VERTICAL) for y in range(self.L)]] = 1
        return chain

    def class_representative(self, cls: Homology) -> np.ndarray:
        chain = np.zeros(self.n_edges, dtype=np.uint8)
        if cls.value & 1:
            chain ^= self.loop_h()
        if cls.value & 2:
            chain ^= self.loop_v()
        return chain


@dataclass
class Syndrome:
    """Flipped checks: vertices for Z errors, faces for X errors."""

    vertices: np.ndarray
    faces: np.ndarray

    @property
    def count(self) -> int:
        return int(self.vertices.size + self.faces.size)

    def is_empty(self) -> bool:
        return self.count == 0


def _as_chain(lat: ToricLattice, chain) -> np.ndarray:
    c = np.asarray(chain, dtype=np.uint8)
    if c.shape != (lat.n_edges,):
        raise ValueError(f"error chain must have {lat.n_edges} entries, got {c.shape}")
    return c


_TABLE_CACHE: dict = {}


def _vertex_edge_table(L: int) -> np.ndarray:
    key = ("v", L)
    if key not in _TABLE_CACHE:
        lat = ToricLattice(L)
        _TABLE_CACHE[key] = np.array([lat.vertex_edges(v) for v in range(L * L)], dtype=np.int64)
    return _TABLE_CACHE[key]


def _face_edge_table(L: int) -> np.ndarray:
    key = ("f", L)
    if key not in _TABLE_CACHE:
        lat = ToricLattice(L)
        _TABLE_CACHE[key] = np.array([lat.face_edges(f) for f in range(L * L)], dtype=np.int64)
    return _TABLE_CACHE[key]


def vertex_parities(lat: ToricLattice, chain) -> np.ndarray:
    """Per-vertex parity of incident chain edges (1 = flipped B_v)."""
    c = _as_chain(lat, chain)
    return np.bitwise_xor.reduce(c[lat.vertex_edge_table], axis=1)


def face_parities(lat: ToricLattice, chain) -> np.ndarray:
    c = _as_chain(lat, chain)
    return np.bitwise_xor.reduce(c[lat.face_edge_table], axis=1)


def syndrome_of(lat: ToricLattice, z_errors=None, x_errors=None) -> Syndrome:
    """Flagged vertices of a Z-error chain and flagged faces of an X-error chain."""
    empty = np.zeros(0, dtype=np.int64)
    verts = empty if z_errors is None else np.flatnonzero(vertex_parities(lat, z_errors))
    faces = empty if x_errors is None else np.flatnonzero(face_parities(lat, x_errors))
    return Syndrome(verts, faces)


def to_dual(lat: ToricLattice, chain) -> np.ndarray:
    """Map an edge chain onto the dual torus (faces become vertices).

    Horizontal edge ``(x, y)`` crosses the dual vertical edge from dual vertex
    ``(x, y-1)``; vertical edge ``(x, y)`` crosses the dual horizontal edge
    from ``(x-1, y)``. The face syndrome of a chain equals the vertex syndrome
    of its dual image.
    """
    c = _as_chain(lat, chain)
    out = np.zeros_like(c)
    for e in np.flatnonzero(c):
        x, y, o = lat.edge_coords(int(e))
        d = lat.edge(x, y - 1, VERTICAL) if o == HORIZONTAL else lat.edge(x - 1, y, HORIZONTAL)
        out[d] = 1
    return out


def from_dual(lat: ToricLattice, chain) -> np.ndarray:
    c = _as_chain(lat, chain)
    out = np.zeros_like(c)
    for d in np.flatnonzero(c):
        x, y, o = lat.edge_coords(int(d))
        e = lat.edge(x, y + 1, HORIZONTAL) if o == VERTICAL else lat.edge(x + 1, y, VERTICAL)
        out[e] = 1
    return out


def homology_class(lat: ToricLattice, cycle) -> Homology:
    """Homology class of a Z-type cycle from its overlap parities with two dual cuts."""
    c = _as_chain(lat, cycle)
    if vertex_parities(lat, c).any():
        raise ValueError("chain has a nonempty boundary; homology needs a cycle")
    h = int(np.bitwise_xor.reduce(c & lat.cut_h()))
    v = int(np.bitwise_xor.reduce(c & lat.cut_v()))
    return Homology(h | (v << 1))


def sample_errors(lat: ToricLattice, p: float, rng) -> np.ndarray:
    """Independent flips on every edge with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"error probability {p} outside [0, 1]")
    return (rng.random(lat.n_edges) < p).astype(np.uint8)


def _pauli_on(lat: ToricLattice, edges, letter: str) -> PauliString:
    mask = 0
    for e in edges:
        mask |= 1 << int(e)
    n = lat.n_edges
    return PauliString(n, mask if letter == "X" else 0, mask if letter == "Z" else 0)


def face_operator(lat: ToricLattice, f: int) -> PauliString:
    """``A_f``: Z on the four edges around face ``f``."""
    return _pauli_on(lat, lat.face_edges(f), "Z")


def vertex_operator(lat: ToricLattice, v: int) -> PauliString:
    """``B_v``: X on the four edges at vertex ``v``."""
    return _pauli_on(lat, lat.vertex_edges(v), "X")


def stabilizer_tableau(lat: ToricLattice, max_qubits: int = 512) -> Tableau:
    """Independent generators: all faces but the last, all vertices but the last."""
    if lat.n_edges > max_qubits:
        raise ValueError(f"{lat.n_edges} qubits exceeds the tableau cap of {max_qubits}")
    faces = [face_operator(lat, f) for f in range(lat.n_faces - 1)]
    verts = [vertex_operator(lat, v) for v in range(lat.n_vertices - 1)]
    return Tableau.from_generators(faces + verts, n=lat.n_edges)


def logical_operators(lat: ToricLattice) -> dict[str, PauliString]:
    """``LZ1, LX1, LZ2, LX2`` with ``LX_i`` anticommuting exactly with ``LZ_i``."""
    return {
        "LZ1": _pauli_on(lat, np.flatnonzero(lat.loop_h()), "Z"),
        "LX1": _pauli_on(lat, np.flatnonzero(lat.cut_h()), "X"),
        "LZ2": _pauli_on(lat, np.flatnonzero(lat.loop_v()), "Z"),
        "LX2": _pauli_on(lat, np.flatnonzero(lat.cut_v()), "X"),
    }


def chain_to_bits(chain) -> int:
    """Pack an edge chain into an int (edge ``e`` is bit ``e``)."""
    out = 0
    for e in np.flatnonzero(np.asarray(chain)):
        out |= 1 << int(e)
    return out
