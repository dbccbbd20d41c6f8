"""Stabilizer groups given by independent commuting generators.

A :class:`Tableau` holds ``k <= n`` signed :class:`PauliString` generators.
``k < n`` describes a stabilized subspace of dimension ``2**(n-k)`` (the toric
code is one), ``k == n`` a stabilizer state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .pauli import PauliString, commutes, conjugate_clifford, multiply


class StabilizerError(ValueError):
    """Generators do not define a valid stabilizer group."""


def _row_key(p: PauliString) -> int:
    """Bits ordered (x_0, z_0, x_1, z_1, ...) from most to least significant."""
    key = 0
    for q in range(p.n):
        key = (key << 2) | (((p.x >> q) & 1) << 1) | ((p.z >> q) & 1)
    return key


def _reduce(rows: Sequence[PauliString]):
    """Gaussian elimination over GF(2).

    Returns ``(basis, combos)``: ``basis`` maps pivot bit -> (key, combo) where
    ``combo`` is a bitmask over input rows whose product has that key, and
    ``combos`` lists the masks of rows that reduced to zero (dependencies).
    """
    basis: dict[int, tuple[int, int]] = {}
    dependent = []
    for i, p in enumerate(rows):
        key, combo = _row_key(p), 1 << i
        while key:
            top = key.bit_length() - 1
            if top not in basis:
                basis[top] = (key, combo)
                break
            bkey, bcombo = basis[top]
            key ^= bkey
            combo ^= bcombo
        else:
            dependent.append(combo)
    return basis, dependent


def _combo_product(rows: Sequence[PauliString], combo: int, n: int) -> PauliString:
    out = PauliString.identity(n)
    i = 0
    while combo:
        if combo & 1:
            out = multiply(out, rows[i])
        combo >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Tableau:
    n: int
    generators: tuple[PauliString, ...]

    @property
    def k(self) -> int:
        return len(self.generators)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[PauliString], n: int | None = None) -> Tableau:
        """Validate and wrap a generator set.

        Raises :class:`StabilizerError` for non-hermitian elements,
        anticommuting pairs, a group containing ``-I`` or a dependent set.
        """
        gens = tuple(gens)
        if n is None:
            if not gens:
                raise ValueError("empty generator set needs n")
            n = gens[0].n
        for g in gens:
            if g.n != n:
                raise StabilizerError(f"generator {g} has {g.n} qubits, expected {n}")
            if not g.is_hermitian:
                raise StabilizerError(f"generator {g} is not hermitian")
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if not commutes(a, b):
                    raise StabilizerError(f"generators {a} and {b} anticommute")
        _, dependent = _reduce(gens)
        for combo in dependent:
            if _combo_product(gens, combo, n).phase == 2:
                raise StabilizerError("generated group contains -I")
        if dependent:
            raise StabilizerError("generators are not independent")
        if len(gens) > n:  # pragma: no cover - excluded by independence
            raise StabilizerError("more generators than qubits")
        return cls(n, gens)

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> Tableau:
        return cls.from_generators(PauliString.from_label(s) for s in labels)

    @classmethod
    def zero_state(cls, n: int) -> Tableau:
        """``|0...0>``: generators ``Z_i``."""
        return cls(n, tuple(PauliString.single(n, q, "Z") for q in range(n)))

    # -- group queries ----------------------------------------------------

    def decompose(self, a: PauliString) -> PauliString | None:
        """Product of generators equal to ``+-a`` (up to sign), or ``None``."""
        basis, _ = _reduce(self.generators)
        key, combo = _row_key(a), 0
        while key:
            top = key.bit_length() - 1
            if top not in basis:
                return None
            bkey, bcombo = basis[top]
            key ^= bkey
            combo ^= bcombo
        return _combo_product(self.generators, combo, self.n)

    def contains(self, a: PauliString) -> bool:
        """True iff ``a`` (with its sign) is a group element."""
        elem = self.decompose(a)
        return elem is not None and elem.phase == a.phase

    def expectation(self, a: PauliString) -> int:
        """+1 / -1 if the outcome of measuring ``a`` is deterministic, else 0."""
        if not a.is_hermitian:
            raise ValueError(f"observable {a} is not hermitian")
        if any(not commutes(a, g) for g in self.generators):
            return 0
        elem = self.decompose(a)
        if elem is None:
            return 0
        return 1 if elem.phase == a.phase else -1

    # -- dynamics ---------------------------------------------------------

    def apply_clifford(self, gate: str, targets) -> Tableau:
        """Conjugate every generator by the gate."""
        return Tableau(self.n, tuple(conjugate_clifford(g, gate, targets)
                                     for g in self.generators))

    def measure_pauli(self, a: PauliString, rng=None, outcome: int | None = None):
        """Projective measurement of a hermitian Pauli product.

        Returns ``(outcome, post_tableau)`` with ``outcome`` in {+1, -1}.
        Random outcomes are fair coin flips from ``rng`` unless forced with
        ``outcome``; forcing the impossible branch of a deterministic
        measurement raises ``ValueError``.
        """
        if a.n != self.n:
            raise ValueError(f"length mismatch: {a.n} vs {self.n} qubits")
        if not a.is_hermitian:
            raise ValueError(f"observable {a} is not hermitian")
        gens = list(self.generators)
        anti = [i for i, g in enumerate(gens) if not commutes(a, g)]
        if not anti:
            elem = self.decompose(a)
            if elem is not None:
                value = 1 if elem.phase == a.phase else -1
                if outcome is not None and outcome != value:
                    raise ValueError(f"outcome {outcome:+d} has zero probability")
                return value, self
        value = _coin(rng, outcome)
        recorded = a if value == 1 else -a
        if not anti:
            return value, Tableau(self.n, tuple(gens) + (recorded,))
        first = anti[0]
        for i in anti[1:]:
            gens[i] = multiply(gens[first], gens[i])
        gens[first] = recorded
        return value, Tableau(self.n, tuple(gens))

    # -- normal form ------------------------------------------------------

    def canonicalize(self) -> Tableau:
        """Reduced row-echelon generators over GF(2), signs carried along.

        Two tableaux generate the same signed group iff their canonical
        forms are identical.
        """
        rows = [(_row_key(g), g) for g in self.generators]
        out = []
        width = 2 * self.n
        for col in range(width - 1, -1, -1):
            bit = 1 << col
            pivot = next((r for r in rows if r[0] & bit), None)
            if pivot is None:
                continue
            rows.remove(pivot)
            pkey, pg = pivot
            rows = [(k ^ pkey, multiply(pg, g)) if k & bit else (k, g) for k, g in rows]
            out = [(k ^ pkey, multiply(pg, g)) if k & bit else (k, g) for k, g in out]
            out.append((pkey, pg))
        return Tableau(self.n, tuple(g for _, g in out))

    def equals_state(self, other: Tableau) -> bool:
        if self.n != other.n:
            raise ValueError("tableaux act on different qubit counts")
        return self.canonicalize().generators == other.canonicalize().generators

    def labels(self) -> list[str]:
        return [str(g) for g in self.generators]

    def __str__(self) -> str:
        return "<" + ", ".join(self.labels()) + ">"


def _coin(rng, outcome: int | None) -> int:
    if outcome is not None:
        if outcome not in (1, -1):
            raise ValueError("outcome must be +1 or -1")
        return outcome
    if rng is None:
        raise ValueError("random measurement needs rng or a forced outcome")
    return 1 if rng.integers(2) == 0 else -1


def apply_circuit(tab: Tableau, instructions, rng=None):
    """Run parsed circuit instructions; returns ``(outcomes, tableau)``.

    Each instruction is ``(gate, targets)`` or ``("MEASURE", basis, qubit)``.
    """
    outcomes = []
    for ins in instructions:
        if ins[0] == "MEASURE":
            _, basis, q = ins
            obs = PauliString.single(tab.n, q, basis)
            value, tab = tab.measure_pauli(obs, rng)
            outcomes.append((basis, q, value))
        else:
            tab = tab.apply_clifford(ins[0], ins[1])
    return outcomes, tab


def parse_circuit(text: str):
    """Parse the line-oriented circuit format.

    Returns ``(n_qubits, instructions)``; ``n_qubits`` is one more than the
    largest index used. Errors carry the offending line number.
    """
    instructions = []
    nq = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        op = parts[0].upper()
        try:
            if op in ("H", "S", "SDG", "X", "Y", "Z"):
                if len(parts) != 2:
                    raise ValueError(f"{op} takes one qubit")
                q = _qubit(parts[1])
                instructions.append((op, (q,)))
                nq = max(nq, q + 1)
            elif op in ("CNOT", "CZ"):
                if len(parts) != 3:
                    raise ValueError(f"{op} takes two qubits")
                a, b = _qubit(parts[1]), _qubit(parts[2])
                if a == b:
                    raise ValueError(f"{op} needs two distinct qubits")
                instructions.append((op, (a, b)))
                nq = max(nq, a + 1, b + 1)
            elif op == "MEASURE":
                if len(parts) != 3 or parts[1].upper() not in ("X", "Y", "Z"):
                    raise ValueError("expected MEASURE <X|Y|Z> <qubit>")
                q = _qubit(parts[2])
                instructions.append(("MEASURE", parts[1].upper(), q))
                nq = max(nq, q + 1)
            else:
                raise ValueError(f"unknown instruction {parts[0]!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return nq, instructions


def _qubit(token: str) -> int:
    q = int(token)
    if q < 0:
        raise ValueError(f"negative qubit index {q}")
    return q
