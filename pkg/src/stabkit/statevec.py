"""Dense state vectors used as the reference oracle.

Qubit ``j`` is bit ``j`` of the amplitude index (little-endian). Vectors are
treated as values: every operation returns a new :class:`StateVector`.
"""

from __future__ import annotations

import numpy as np

from .pauli import PauliString

MAX_QUBITS = 22

_SQ2 = 1.0 / np.sqrt(2.0)
_ONE_QUBIT = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQ2,
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "SDG": np.array([[1, 0], [0, -1j]], dtype=complex),
    "T": np.diag([np.exp(-1j * np.pi / 8), np.exp(1j * np.pi / 8)]),
}


def gate_matrix(gate: str, theta: float | None = None) -> np.ndarray:
    """2x2 matrix of a single-qubit gate. ``RZ`` is ``exp(-i theta Z / 2)``."""
    gate = gate.upper()
    if gate == "RZ":
        if theta is None:
            raise ValueError("RZ needs an angle")
        return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])
    try:
        return _ONE_QUBIT[gate].copy()
    except KeyError:
        raise ValueError(f"unknown single-qubit gate {gate}") from None


def _parity(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values) & 1


class StateVector:
    """``2**n`` complex amplitudes.

    Unnormalized vectors are allowed (they serve as bras in overlaps);
    ``normalized`` records whether the norm is guaranteed to be one.
    """

    __slots__ = ("n", "amplitudes", "normalized")

    def __init__(self, amplitudes, n: int | None = None, normalized: bool = False,
                 max_qubits: int = MAX_QUBITS):
        amps = np.asarray(amplitudes, dtype=complex)
        if n is None:
            n = int(amps.size).bit_length() - 1
        if n > max_qubits:
            raise ValueError(f"{n} qubits exceeds the state-vector cap of {max_qubits} "
                             "(pass max_qubits= to acknowledge a larger run)")
        if amps.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} amplitudes, got shape {amps.shape}")
        if normalized and abs(np.vdot(amps, amps).real - 1.0) > 1e-12:
            raise ValueError("vector flagged normalized but norm differs from 1")
        self.n = n
        self.amplitudes = amps
        self.normalized = normalized

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int, max_qubits: int = MAX_QUBITS) -> StateVector:
        if n > max_qubits:
            raise ValueError(f"{n} qubits exceeds the state-vector cap of {max_qubits}")
        amps = np.zeros(1 << n, dtype=complex)
        amps[0] = 1.0
        return cls(amps, n, normalized=True, max_qubits=max_qubits)

    @classmethod
    def basis(cls, n: int, index: int) -> StateVector:
        amps = np.zeros(1 << n, dtype=complex)
        amps[index] = 1.0
        return cls(amps, n, normalized=True)

    @classmethod
    def plus(cls, n: int, max_qubits: int = MAX_QUBITS) -> StateVector:
        if n > max_qubits:
            raise ValueError(f"{n} qubits exceeds the state-vector cap of {max_qubits}")
        amps = np.full(1 << n, 2.0 ** (-n / 2), dtype=complex)
        return cls(amps, n, normalized=True, max_qubits=max_qubits)

    @classmethod
    def product(cls, factors) -> StateVector:
        """Tensor product of single-qubit vectors; ``factors[j]`` is qubit ``j``."""
        amps = np.ones(1, dtype=complex)
        for f in factors:
            amps = np.kron(np.asarray(f, dtype=complex), amps)
        return cls(amps, len(factors))

    @classmethod
    def from_tableau(cls, tab) -> StateVector:
        """Dense vector stabilized by every generator of ``tab``.

        Projectors ``(I + S)/2`` are applied to computational basis states in
        increasing order; the first with a nonzero projection is returned,
        normalized. For ``k < n`` this is one particular code-space vector.
        """
        n = tab.n
        for index in range(1 << n):
            vec = cls.basis(n, index).amplitudes
            for g in tab.generators:
                vec = 0.5 * (vec + _apply_pauli_amps(vec, n, g))
            norm = np.linalg.norm(vec)
            if norm > 1e-6:
                return cls(vec / norm, n, normalized=True)
        raise ValueError("tableau stabilizes no vector (contains -I)")

    # -- basic algebra ----------------------------------------------------

    def copy(self) -> StateVector:
        return StateVector(self.amplitudes.copy(), self.n, self.normalized)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> StateVector:
        nrm = self.norm()
        if nrm == 0.0:
            raise ZeroDivisionError("cannot normalize the zero vector")
        return StateVector(self.amplitudes / nrm, self.n, normalized=True)

    def _check_target(self, q: int) -> None:
        if not 0 <= q < self.n:
            raise IndexError(f"qubit {q} out of range for n={self.n}")

    def apply_matrix(self, matrix: np.ndarray, qubit: int) -> StateVector:
        """Apply an arbitrary 2x2 matrix to one qubit."""
        self._check_target(qubit)
        t = self.amplitudes.reshape(1 << (self.n - qubit - 1), 2, 1 << qubit)
        out = np.einsum("ab,ibj->iaj", matrix, t).reshape(-1)
        return StateVector(out, self.n, self.normalized)

    def apply_gate(self, gate: str, targets, theta: float | None = None) -> StateVector:
        """Apply H, S, SDG, X, Y, Z, T, RZ(theta), CNOT or CZ."""
        gate = gate.upper()
        if isinstance(targets, (int, np.integer)):
            targets = (int(targets),)
        targets = tuple(int(t) for t in targets)
        for q in targets:
            self._check_target(q)
        if gate in ("CNOT", "CZ"):
            if len(targets) != 2 or targets[0] == targets[1]:
                raise ValueError(f"{gate} needs two distinct qubits")
            c, t = targets
            idx = np.arange(1 << self.n)
            amps = self.amplitudes.copy()
            ctrl = ((idx >> c) & 1).astype(bool)
            if gate == "CZ":
                amps[ctrl & (((idx >> t) & 1) == 1)] *= -1
            else:
                sel = idx[ctrl & (((idx >> t) & 1) == 0)]
                partner = sel | (1 << t)
                amps[sel], amps[partner] = self.amplitudes[partner], self.amplitudes[sel]
            return StateVector(amps, self.n, self.normalized)
        if len(targets) != 1:
            raise ValueError(f"{gate} takes one qubit")
        return self.apply_matrix(gate_matrix(gate, theta), targets[0])

    def apply_pauli(self, p: PauliString) -> StateVector:
        if p.n != self.n:
            raise ValueError("length mismatch")
        return StateVector(_apply_pauli_amps(self.amplitudes, self.n, p), self.n,
                           self.normalized)

    def expectation(self, p: PauliString) -> complex:
        return np.vdot(self.amplitudes, _apply_pauli_amps(self.amplitudes, self.n, p))

    # -- measurement ------------------------------------------------------

    def project(self, observable: PauliString, outcome: int) -> StateVector:
        """Unnormalized ``(I + outcome*A)/2 |psi>``."""
        if not observable.is_hermitian:
            raise ValueError(f"observable {observable} is not hermitian")
        applied = _apply_pauli_amps(self.amplitudes, self.n, observable)
        return StateVector(0.5 * (self.amplitudes + outcome * applied), self.n)

    def probability(self, observable: PauliString, outcome: int = 1) -> float:
        """Born probability of ``outcome`` for a normalized state."""
        proj = self.project(observable, outcome).amplitudes
        return float(np.vdot(proj, proj).real)

    def measure(self, observable: PauliString, rng=None, outcome: int | None = None):
        """Projective measurement. Returns ``(outcome, post_state)``.

        ``outcome`` may be forced; forcing a zero-probability branch raises.
        """
        p_plus = self.probability(observable, 1)
        if outcome is None:
            if rng is None:
                raise ValueError("need rng or forced outcome")
            outcome = 1 if rng.random() < p_plus else -1
        prob = p_plus if outcome == 1 else 1.0 - p_plus
        if prob < 1e-12:
            raise ValueError(f"outcome {outcome:+d} has zero probability")
        post = self.project(observable, outcome)
        return outcome, post.normalize()


def _apply_pauli_amps(amps: np.ndarray, n: int, p: PauliString) -> np.ndarray:
    # Y = i X Z, so the string acts as i^(phase + #Y) X^x Z^z
    idx = np.arange(1 << n, dtype=np.int64)
    signs = 1.0 - 2.0 * _parity(idx & p.z)
    ycount = (p.x & p.z).bit_count()
    coeff = 1j ** ((p.phase + ycount) % 4)
    out = np.empty_like(amps)
    out[idx ^ p.x] = coeff * signs * amps
    return out


def overlap(bra: StateVector, ket: StateVector) -> complex:
    """Inner product ``sum conj(bra_i) ket_i``."""
    if bra.n != ket.n:
        raise ValueError(f"length mismatch: {bra.n} vs {ket.n} qubits")
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))


def fidelity(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|`` for normalized vectors."""
    return abs(overlap(a, b))
