import numpy as np
import pytest

from helpers import dense, random_pauli
from stabkit.pauli import PauliString
from stabkit.statevec import StateVector, fidelity, gate_matrix, overlap


def test_basis_conventions():
    psi = StateVector.zero(2).apply_gate("X", 0)
    assert psi.amplitudes[1] == 1  # qubit 0 is the lowest bit
    prod = StateVector.product([[0, 1], [1, 0]])
    assert np.allclose(prod.amplitudes, psi.amplitudes)


@pytest.mark.parametrize("seed", range(5))
def test_pauli_action_matches_matrix(seed):
    rng = np.random.default_rng(seed)
    n = 3
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    p = random_pauli(rng, n)
    out = StateVector(amps, n).apply_pauli(p).amplitudes
    assert np.allclose(out, dense(p) @ amps)


def test_gate_matrices_unitary():
    for g in ["I", "X", "Y", "Z", "H", "S", "SDG", "T"]:
        U = gate_matrix(g)
        assert np.allclose(U @ U.conj().T, np.eye(2))
    assert np.allclose(gate_matrix("RZ", np.pi), np.diag([-1j, 1j]))


def test_bell_expectations():
    psi = StateVector.zero(2).apply_gate("H", 0).apply_gate("CNOT", (0, 1))
    assert np.isclose(psi.expectation(PauliString.from_label("XX")), 1)
    assert np.isclose(psi.expectation(PauliString.from_label("YY")), -1)
    assert np.isclose(psi.probability(PauliString.from_label("ZI"), 1), 0.5)


def test_measure_forced_and_impossible():
    psi = StateVector.zero(1)
    value, post = psi.measure(PauliString.from_label("Z"), np.random.default_rng(0))
    assert value == 1
    with pytest.raises(ValueError):
        psi.measure(PauliString.from_label("Z"), outcome=-1)
    value, post = psi.measure(PauliString.from_label("X"), outcome=-1)
    assert np.isclose(fidelity(post, StateVector.product([[1, -1]]).normalize()), 1)


def test_size_cap():
    with pytest.raises(ValueError, match="cap"):
        StateVector.zero(30)


def test_overlap_conjugates_bra():
    a = StateVector(np.array([1j, 0]), 1)
    b = StateVector(np.array([1, 0]), 1)
    assert overlap(a, b) == -1j
