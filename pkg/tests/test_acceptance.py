"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line; the lines are printed in the
pytest terminal summary (see conftest.py) and when this file is run directly.
"""

import math
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from helpers import (graph_measure_vs_oracle, random_circuit, random_connected_graph,
                     run_against_oracle)
from stabkit.decode import (McConfig, decode_ml, decode_mwpm, run_threshold, trial_errors,
                            verify_correspondence)
from stabkit.graphstate import GraphState
from stabkit.matching import WeightedGraph, mwpm, mwpm_oracle_dp
from stabkit.spinmodel import (dualize, hypergraph_isomorphic, partition_direct,
                               partition_via_overlap, plaquette_model, random_model,
                               square_lattice_model)
from stabkit.toric import ToricLattice, syndrome_of

DATA = Path(__file__).resolve().parent.parent / "data"
RESULTS: list[str] = []


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_c1_tableau_matches_state_vectors():
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    worst_p, odd, worst_f, measurements = 0.0, 0, 1.0, 0
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        ins = random_circuit(rng, n, int(rng.integers(1, 41)))
        measurements += sum(i[0] == "MEASURE" for i in ins)
        wp, o, fid = run_against_oracle(n, ins, rng)
        worst_p, odd, worst_f = max(worst_p, wp), odd + o, min(worst_f, fid)
    elapsed = time.perf_counter() - start
    ok = odd == 0 and worst_p < 1e-12 and worst_f >= 1 - 1e-10 and elapsed < 60
    report(1, "tableau vs state vector", ok,
           f"1000 circuits, {measurements} measurements, max |dP| {worst_p:.1e}, "
           f"min fidelity {worst_f:.12f}, {elapsed:.1f}s")


def test_c2_graph_rules_match_projection():
    rng = np.random.default_rng(202)
    start = time.perf_counter()
    checks, rejected, worst = 0, 0, 1.0
    for _ in range(500):
        n = int(rng.integers(2, 11))
        gs = GraphState.from_graph(random_connected_graph(rng, n, float(rng.uniform(0.2, 0.7))))
        # a first random measurement gives nontrivial frames and byproducts
        first = int(rng.integers(n))
        fid, pre = graph_measure_vs_oracle(gs, first, str(rng.choice(list("XYZ"))),
                                           int(rng.choice([1, -1])))
        if fid is not None:
            worst = min(worst, fid)
            checks += 1
            gs = pre
        v = int(rng.choice([u for u in range(n) if u not in gs.measured]))
        for basis in "XYZ":
            for outcome in (1, -1):
                fid, _ = graph_measure_vs_oracle(gs, v, basis, outcome)
                if fid is None:
                    rejected += 1
                    continue
                worst = min(worst, fid)
                checks += 1
    elapsed = time.perf_counter() - start
    ok = worst >= 1 - 1e-10 and elapsed < 300
    report(2, "graph-state measurement rules", ok,
           f"500 graphs, {checks} oracle comparisons, {rejected} zero-probability "
           f"outcomes rejected, min fidelity {worst:.12f}, {elapsed:.1f}s")


def test_c3_blossom_is_exact():
    rng = np.random.default_rng(303)
    start = time.perf_counter()
    agree = 0
    for _ in range(300):
        m = 2 * int(rng.integers(1, 7))
        w = np.triu(rng.integers(0, int(rng.choice([2, 5, 20, 1000])), (m, m)), 1)
        g = WeightedGraph(w + w.T)
        agree += mwpm(g).weight == mwpm_oracle_dp(g).weight
    elapsed = time.perf_counter() - start
    report(3, "MWPM vs bitmask DP", agree == 300 and elapsed < 60,
           f"{agree}/300 equal, {elapsed:.1f}s")


def test_c4_threshold_crossing():
    ps = [float(p) for p in np.linspace(0.08, 0.13, 11)]
    start = time.perf_counter()
    res = run_threshold(McConfig([4, 6, 8], ps, 20000, seed=1))
    elapsed = time.perf_counter() - start
    est = res.estimate
    flips = True
    for a, b in ((4, 6), (6, 8)):
        lo_a, lo_b = res.curve(a)[0], res.curve(b)[0]
        hi_a, hi_b = res.curve(a)[-1], res.curve(b)[-1]
        flips &= lo_b.rate < lo_a.rate and hi_b.rate > hi_a.rate
    ok = est is not None and 0.095 <= est <= 0.110 and flips and elapsed < 600
    pairs = ", ".join(f"L={a},{b}: {c:.4f}" for (a, b), c in res.crossings.items()
                      if c is not None)
    rates = "; ".join(f"L={L}: {res.curve(L)[0].rate:.4f} -> {res.curve(L)[-1].rate:.4f}"
                      for L in (4, 6, 8))
    report(4, "MWPM threshold crossing", ok,
           f"estimate {est:.4f} ({pairs}); rates at p=0.08 -> 0.13 {rates}; {elapsed:.1f}s")


def test_c5_rbim_correspondence():
    lat = ToricLattice(3)
    rng = np.random.default_rng(505)
    start = time.perf_counter()
    worst = 0.0
    conventions = True
    for p in (0.05, 0.10, 0.15):
        for _ in range(50):
            chain = (rng.random(lat.n_edges) < p).astype(np.uint8)
            rep = verify_correspondence(lat, chain, p)
            worst = max(worst, rep.max_deviation)
            conventions &= rep.bond_convention_ok
    elapsed = time.perf_counter() - start
    report(5, "coset sum vs RBIM partition function", worst < 1e-12 and conventions and elapsed < 60,
           f"150 chains, max relative deviation {worst:.2e}, {elapsed:.1f}s")


def test_c6_ml_not_worse_than_mwpm():
    lat = ToricLattice(3)
    N, p = 10000, 0.10
    errors = trial_errors(606, 3, 0, p, N)
    ml_ok = mw_ok = 0
    for err in errors:
        syn = syndrome_of(lat, err)
        mw_ok += decode_mwpm(lat, syn, error=err).success
        ml_ok += decode_ml(lat, syn, p, error=err)[0].success
    s_mw, s_ml = mw_ok / N, ml_ok / N
    sigma = math.sqrt(s_mw * (1 - s_mw) / N)
    report(6, "ML vs MWPM success at L=3", s_ml >= s_mw - 3 * sigma,
           f"ML {s_ml:.4f}, MWPM {s_mw:.4f}, sigma {sigma:.4f}, {N} shared samples")


def test_c7_overlap_identity():
    rng = np.random.default_rng(707)
    start = time.perf_counter()
    worst = 0.0
    for i in range(20):
        m = random_model(rng, int(rng.integers(1, 11)), int(rng.integers(1, 11)), 4,
                         complex_params=i % 2 == 1)
        z = partition_direct(m)
        worst = max(worst, abs(partition_via_overlap(m) - z) / abs(z))
    elapsed = time.perf_counter() - start
    report(7, "graph-state overlap identity", worst <= 1e-9 and elapsed < 120,
           f"20 models (10 complex), max relative deviation {worst:.2e}, {elapsed:.1f}s")


def test_c8_duality():
    sq = square_lattice_model(3, 3, J=1.0, h=0.5, beta=0.7)
    dual, pref = dualize(sq)
    z = partition_direct(sq)
    dev = abs(pref * partition_direct(dual) - z) / abs(z)
    four_body = max(t.arity for t in dual.terms) == 4

    pl = plaquette_model(3, J=0.8, h=0.3, beta=1.1)
    pl_dual, _ = dualize(pl)
    self_dual = hypergraph_isomorphic(pl, pl_dual)

    back, _ = dualize(pl_dual)
    orig = {t.spins: t.J for t in pl.multi_terms}
    again = {t.spins: t.J for t in back.multi_terms}
    round_trip = (orig.keys() == again.keys()
                  and max(abs(orig[k] - again[k]) for k in orig) < 1e-9
                  and np.max(np.abs(back.fields - pl.fields)) < 1e-9
                  and hypergraph_isomorphic(pl, back))
    ok = dev < 1e-9 and four_body and self_dual and round_trip
    report(8, "duality", ok,
           f"3x3 identity deviation {dev:.2e}, dual has 4-body terms {four_body}, "
           f"plaquette model self-dual {self_dual}, double dual round trip {round_trip}")


def _cli(args, cwd):
    res = subprocess.run([sys.executable, "-m", "stabkit", *map(str, args)], cwd=cwd,
                         capture_output=True)
    return res.returncode, res.stdout


def test_c9_cli_determinism(tmp_path):
    commands = [
        ["circuit", DATA / "measure.circ", "--seed", 7],
        ["graph-measure", DATA / "chain5.graph", 2, "X", "-"],
        ["surface-threshold", "--lmin", 3, "--lmax", 5, "--steps", 3, "--trials", 500,
         "--seed", 3, "--out", "t.csv"],
        ["spin", "overlap", DATA / "square3.json"],
        ["spin", "dual", DATA / "square3.json", "--out", "dual.json"],
        ["rbim-check", "--L", 3, "--p", 0.1, "--samples", 5, "--seed", 9],
    ]
    same = 0
    for cmd in commands:
        outputs = []
        for run in range(2):
            d = tmp_path / f"{cmd[0]}{len(cmd)}_{run}"
            d.mkdir()
            code, out = _cli(cmd, d)
            files = {f.name: f.read_bytes() for f in sorted(d.iterdir())}
            outputs.append((code, out, files))
        same += outputs[0] == outputs[1] and outputs[0][0] == 0
    report(9, "CLI determinism", same == len(commands),
           f"{same}/{len(commands)} commands byte-identical across reruns")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
