import numpy as np

from stabkit.pauli import PauliString

SIGMA = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1.0, -1.0]).astype(complex),
}


def dense(p: PauliString) -> np.ndarray:
    """Matrix with qubit j as bit j of the basis index."""
    out = np.ones((1, 1), dtype=complex)
    for q in range(p.n):
        out = np.kron(SIGMA[p.letter(q)], out)
    return (1j ** p.phase) * out


def two_qubit(gate: str, n: int, a: int, b: int) -> np.ndarray:
    dim = 1 << n
    U = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        ca, cb = (i >> a) & 1, (i >> b) & 1
        if gate == "CNOT":
            U[i ^ (ca << b), i] = 1
        else:
            U[i, i] = -1 if ca and cb else 1
    return U


def random_pauli(rng, n: int, hermitian: bool = False) -> PauliString:
    x = int(rng.integers(0, 1 << n))
    z = int(rng.integers(0, 1 << n))
    phase = 2 * int(rng.integers(2)) if hermitian else int(rng.integers(4))
    return PauliString(n, x, z, phase)


GATES_1Q = ["H", "S", "SDG", "X", "Y", "Z"]


def random_circuit(rng, n: int, depth: int, p_measure: float = 0.2):
    ins = []
    for _ in range(depth):
        r = rng.random()
        if r < p_measure:
            ins.append(("MEASURE", str(rng.choice(["X", "Y", "Z"])), int(rng.integers(n))))
        elif n > 1 and r < p_measure + 0.35:
            a, b = rng.choice(n, 2, replace=False)
            ins.append((str(rng.choice(["CNOT", "CZ"])), (int(a), int(b))))
        else:
            ins.append((str(rng.choice(GATES_1Q)), (int(rng.integers(n)),)))
    return ins


def run_against_oracle(n: int, instructions, rng):
    """Step tableau and dense simulation together.

    Returns ``(max_prob_error, bad_probability_values, final_fidelity)``.
    """
    from stabkit.statevec import StateVector, fidelity
    from stabkit.tableau import Tableau

    tab = Tableau.zero_state(n)
    psi = StateVector.zero(n)
    worst, odd = 0.0, 0
    for ins in instructions:
        if ins[0] == "MEASURE":
            obs = PauliString.single(n, ins[2], ins[1])
            e = tab.expectation(obs)
            p_plus = (1 + e) / 2
            if p_plus not in (0.0, 0.5, 1.0):
                odd += 1
            worst = max(worst, abs(p_plus - psi.probability(obs, 1)))
            value, tab = tab.measure_pauli(obs, rng)
            psi = psi.project(obs, value).normalize()
        else:
            tab = tab.apply_clifford(ins[0], ins[1])
            psi = psi.apply_gate(ins[0], ins[1])
    return worst, odd, fidelity(StateVector.from_tableau(tab), psi)


def random_connected_graph(rng, n: int, p_edge: float = 0.4):
    from stabkit.graphstate import Graph

    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p_edge]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g


def graph_measure_vs_oracle(gs, v: int, basis: str, outcome: int, h=None):
    """``None`` if the outcome is impossible (and the rewrite agrees), else the fidelity."""
    from stabkit.graphstate import measure_graph
    from stabkit.statevec import fidelity

    psi = gs.to_statevector()
    obs = PauliString.single(gs.n, v, basis)
    prob = psi.probability(obs, outcome)
    if prob < 1e-12:
        try:
            measure_graph(gs, v, basis, outcome, h=h)
        except ValueError:
            return None, None
        raise AssertionError("impossible outcome accepted")
    new = measure_graph(gs, v, basis, outcome, h=h)
    expected = psi.project(obs, outcome).normalize()
    return fidelity(new.to_statevector(), expected), new
