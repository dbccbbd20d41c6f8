"""n-qubit Pauli products in symplectic binary form.

A :class:`PauliString` stores the X and Z components as Python integers used
as bit vectors (qubit ``j`` is bit ``j``) together with a power of ``i``.
The operator represented is::

    i**phase * sigma_0 (x) sigma_1 (x) ... (x) sigma_{n-1}

where ``sigma_j`` is I, X, Z or Y for ``(x_j, z_j)`` equal to (0, 0), (1, 0),
(0, 1) or (1, 1). With Y stored as a letter in its own right, a string is
hermitian exactly when ``phase`` is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ONE_QUBIT_GATES = frozenset({"I", "X", "Y", "Z", "H", "S", "SDG"})
TWO_QUBIT_GATES = frozenset({"CNOT", "CZ"})
CLIFFORD_GATES = ONE_QUBIT_GATES | TWO_QUBIT_GATES

_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("qubit count must be non-negative")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError(f"bit vectors do not fit in {self.n} qubits")
        object.__setattr__(self, "phase", self.phase % 4)

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliString:
        """Pauli ``letter`` acting on ``qubit`` and identity elsewhere."""
        if not 0 <= qubit < n:
            raise IndexError(f"qubit {qubit} out of range for n={n}")
        xb, zb = _LETTER_BITS[letter.upper()]
        return cls(n, xb << qubit, zb << qubit, 0)

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        """Parse labels such as ``"XZ"``, ``"-YY"``, ``"+iXIZ"``.

        Character ``j`` of the letter part is qubit ``j``.
        """
        s = label.strip()
        phase = 0
        if s.startswith(("+", "-")):
            phase = 0 if s[0] == "+" else 2
            s = s[1:]
        if s.startswith("i"):
            phase += 1
            s = s[1:]
        x = z = 0
        for j, ch in enumerate(s):
            if ch.upper() not in _LETTER_BITS:
                raise ValueError(f"bad Pauli letter {ch!r} in {label!r}")
            xb, zb = _LETTER_BITS[ch.upper()]
            x |= xb << j
            z |= zb << j
        return cls(len(s), x, z, phase)

    @classmethod
    def from_sparse(cls, n: int, ops: dict[int, str], sign: int = 1) -> PauliString:
        """Build from ``{qubit: letter}``; ``sign`` is +1 or -1."""
        x = z = 0
        for q, letter in ops.items():
            if not 0 <= q < n:
                raise IndexError(f"qubit {q} out of range for n={n}")
            xb, zb = _LETTER_BITS[letter.upper()]
            x |= xb << q
            z |= zb << q
        return cls(n, x, z, 0 if sign > 0 else 2)

    # -- inspection -------------------------------------------------------

    def letter(self, qubit: int) -> str:
        return "IXZY"[((self.x >> qubit) & 1) | (((self.z >> qubit) & 1) << 1)]

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for hermitian strings."""
        if not self.is_hermitian:
            raise ValueError(f"{self} is not hermitian")
        return 1 if self.phase == 0 else -1

    @property
    def is_identity_up_to_phase(self) -> bool:
        return self.x == 0 and self.z == 0

    def unsigned(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, 0)

    def __neg__(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, self.phase + 2)

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def __str__(self) -> str:
        return _PHASE_PREFIX[self.phase] + "".join(self.letter(q) for q in range(self.n))

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"

    def commutes(self, other: PauliString) -> bool:
        return commutes(self, other)


def _check_same_size(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n} qubits")


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Group product ``a*b`` with exact quarter-phase."""
    _check_same_size(a, b)
    mask = (1 << a.n) - 1
    xa, za, xb, zb = a.x, a.z, b.x, b.z
    ya, yb = xa & za, xb & zb
    pa_x, pa_z = xa & ~za & mask, za & ~xa & mask
    pb_x, pb_z = xb & ~zb & mask, zb & ~xb & mask
    # cyclic products X.Y, Y.Z, Z.X give +i; the reverse order gives -i
    plus = (pa_x & yb) | (ya & pb_z) | (pa_z & pb_x)
    minus = (ya & pb_x) | (pa_z & yb) | (pa_x & pb_z)
    phase = a.phase + b.phase + plus.bit_count() - minus.bit_count()
    return PauliString(a.n, xa ^ xb, za ^ zb, phase)


def product(strings: Iterable[PauliString], n: int | None = None) -> PauliString:
    """Ordered product of an iterable of strings."""
    out = None
    for p in strings:
        out = p if out is None else multiply(out, p)
    if out is None:
        if n is None:
            raise ValueError("empty product needs n")
        return PauliString.identity(n)
    return out


def symplectic_form(a: PauliString, b: PauliString) -> int:
    _check_same_size(a, b)
    return ((a.x & b.z) ^ (a.z & b.x)).bit_count() & 1


def commutes(a: PauliString, b: PauliString) -> bool:
    return symplectic_form(a, b) == 0


def _flip_if(p: PauliString, cond: int) -> int:
    return p.phase + 2 * (cond & 1)


def conjugate_clifford(p: PauliString, gate: str, targets: Sequence[int] | int) -> PauliString:
    """Return ``U p U^dagger`` for a Clifford gate ``U`` on ``targets``.

    Supported gates: I, X, Y, Z, H, S, SDG, CNOT (control, target) and CZ.
    """
    gate = gate.upper()
    if isinstance(targets, int):
        targets = (targets,)
    targets = tuple(int(t) for t in targets)
    if gate not in CLIFFORD_GATES:
        raise ValueError(f"{gate} is not a supported Clifford gate")
    arity = 2 if gate in TWO_QUBIT_GATES else 1
    if len(targets) != arity:
        raise ValueError(f"{gate} takes {arity} target(s), got {len(targets)}")
    for t in targets:
        if not 0 <= t < p.n:
            raise IndexError(f"qubit {t} out of range for n={p.n}")
    if arity == 2 and targets[0] == targets[1]:
        raise ValueError(f"{gate} needs two distinct qubits")

    x, z = p.x, p.z
    if arity == 1:
        q = targets[0]
        xq, zq = (x >> q) & 1, (z >> q) & 1
        phase = p.phase
        if gate == "I":
            return p
        if gate == "X":
            phase += 2 * zq
        elif gate == "Z":
            phase += 2 * xq
        elif gate == "Y":
            phase += 2 * (xq ^ zq)
        elif gate == "H":
            phase += 2 * (xq & zq)
            x = (x & ~(1 << q)) | (zq << q)
            z = (z & ~(1 << q)) | (xq << q)
        elif gate == "S":
            # X -> Y, Y -> -X
            phase += 2 * (xq & zq)
            z ^= xq << q
        elif gate == "SDG":
            # X -> -Y, Y -> X
            phase += 2 * (xq & (zq ^ 1))
            z ^= xq << q
        return PauliString(p.n, x, z, phase)

    a, b = targets
    if gate == "CZ":
        tmp = conjugate_clifford(p, "H", b)
        tmp = conjugate_clifford(tmp, "CNOT", (a, b))
        return conjugate_clifford(tmp, "H", b)
    c, t = a, b
    xc, zc, xt, zt = (x >> c) & 1, (z >> c) & 1, (x >> t) & 1, (z >> t) & 1
    phase = p.phase + 2 * (xc & zt & (xt ^ zc ^ 1))
    x ^= xc << t
    z ^= zt << c
    return PauliString(p.n, x, z, phase)
