import numpy as np
import pytest

from helpers import dense, random_circuit, run_against_oracle
from stabkit.pauli import PauliString
from stabkit.statevec import StateVector
from stabkit.tableau import StabilizerError, Tableau, apply_circuit, parse_circuit


def P(label):
    return PauliString.from_label(label)


def test_commuting_pair_accepted():
    # XX and YY commute even though X and Y anticommute on each qubit
    tab = Tableau.from_labels(["XX", "YY"])
    assert tab.k == 2
    assert tab.contains(P("-ZZ"))


@pytest.mark.parametrize("labels,msg", [
    (["XX", "YY", "ZZ"], "-I"),
    (["XX", "-YY", "ZZ"], "independent"),
    (["XI", "ZI"], "anticommute"),
    (["iX"], "hermitian"),
    (["X", "-X"], "-I"),
])
def test_invalid_generator_sets(labels, msg):
    with pytest.raises(StabilizerError, match=msg):
        Tableau.from_labels(labels)


def test_bell_from_circuit():
    tab = Tableau.zero_state(2).apply_clifford("H", 0).apply_clifford("CNOT", (0, 1))
    assert tab.equals_state(Tableau.from_labels(["XX", "ZZ"]))


def test_canonical_form_identifies_equal_groups():
    a = Tableau.from_labels(["XX", "ZZ"])
    b = Tableau.from_labels(["XX", "-YY"])
    c = Tableau.from_labels(["XX", "-ZZ"])
    assert a.canonicalize() == b.canonicalize()
    assert not a.equals_state(c)


@pytest.mark.parametrize("seed", range(4))
def test_canonical_form_is_invariant_under_row_operations(seed):
    rng = np.random.default_rng(seed)
    _, tab = apply_circuit(Tableau.zero_state(5), random_circuit(rng, 5, 30, 0.0))
    gens = list(tab.generators)
    for _ in range(10):
        i, j = rng.choice(5, 2, replace=False)
        gens[i] = gens[i] * gens[j]
    rng.shuffle(gens)
    assert Tableau(5, tuple(gens)).canonicalize() == tab.canonicalize()


def test_expectation_values():
    tab = Tableau.from_labels(["XX", "ZZ"])
    assert tab.expectation(P("XX")) == 1
    assert tab.expectation(P("YY")) == -1
    assert tab.expectation(P("ZI")) == 0
    with pytest.raises(ValueError):
        tab.expectation(P("iXX"))


def test_measurement_cases():
    tab = Tableau.from_labels(["XX", "ZZ"])
    # deterministic
    v, same = tab.measure_pauli(P("ZZ"))
    assert v == 1 and same is tab
    with pytest.raises(ValueError):
        tab.measure_pauli(P("ZZ"), outcome=-1)
    # random, forced
    v, post = tab.measure_pauli(P("ZI"), outcome=-1)
    assert v == -1
    assert post.contains(P("-ZI")) and post.contains(P("ZZ"))
    # commuting but outside a partial group
    part = Tableau.from_labels(["ZZ"])
    v, post = part.measure_pauli(P("XX"), outcome=1)
    assert post.k == 2 and post.contains(P("XX"))


def test_measurement_needs_randomness():
    with pytest.raises(ValueError):
        Tableau.zero_state(1).measure_pauli(P("X"))


def test_measurement_statistics_are_fair():
    rng = np.random.default_rng(5)
    hits = sum(Tableau.zero_state(1).measure_pauli(P("X"), rng)[0] == 1 for _ in range(4000))
    assert abs(hits / 4000 - 0.5) < 5 * 0.5 / np.sqrt(4000)


def test_stabilized_vector_is_fixed():
    tab = Tableau.from_labels(["XXX", "ZZI", "IZZ"])
    psi = StateVector.from_tableau(tab).amplitudes
    for g in tab.generators:
        assert np.allclose(dense(g) @ psi, psi)


@pytest.mark.parametrize("seed", range(20))
def test_random_circuits_match_dense_simulation(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    worst, odd, fid = run_against_oracle(n, random_circuit(rng, n, 30), rng)
    assert odd == 0
    assert worst < 1e-12
    assert fid > 1 - 1e-10


def test_parse_circuit():
    text = "# prepare\nH 0\nCNOT 0 1  # entangle\n\nMEASURE Z 1\n"
    nq, ins = parse_circuit(text)
    assert nq == 2
    assert ins == [("H", (0,)), ("CNOT", (0, 1)), ("MEASURE", "Z", 1)]


@pytest.mark.parametrize("text,line", [
    ("H 0\nFOO 1\n", 2), ("CNOT 0 0\n", 1), ("H\n", 1), ("MEASURE W 0\n", 1), ("H -1\n", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ValueError, match=f"line {line}"):
        parse_circuit(text)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_cat_state(n):
    zz = ["I" * i + "ZZ" + "I" * (n - i - 2) for i in range(n - 1)]
    tab = Tableau.from_labels(zz + ["X" * n])
    assert tab.k == n
    amps = StateVector.from_tableau(tab).amplitudes
    # two branches, each with amplitude 1/sqrt(2) whatever n is
    expected = np.zeros(1 << n)
    expected[[0, -1]] = 1 / np.sqrt(2)
    assert np.allclose(np.abs(amps), expected)
