"""Command-line front end: ``python -m stabkit <command> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import decode, spinmodel
from .graphstate import Graph, GraphState, measure_graph
from .statevec import MAX_QUBITS
from .tableau import Tableau, apply_circuit, parse_circuit
from .toric import ToricLattice, sample_errors

THRESHOLD_MAX_L = 16
THRESHOLD_MAX_TRIALS = 10**6


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{z.imag:+.17g}j"


# ---------------------------------------------------------------------------


def cmd_circuit(args) -> None:
    try:
        nq, instructions = parse_circuit(_read(args.file))
    except ValueError as exc:
        raise CliError(f"{args.file}: {exc}") from None
    nq = max(nq, args.qubits or 0)
    if nq == 0:
        raise CliError("empty circuit: pass --qubits to set the register size")
    rng = np.random.default_rng(args.seed)
    outcomes, tab = apply_circuit(Tableau.zero_state(nq), instructions, rng)
    for basis, q, value in outcomes:
        print(f"MEASURE {basis} {q} -> {value:+d}")
    print("stabilizers:")
    for label in tab.canonicalize().labels():
        print(f"  {label}")


def cmd_graph_measure(args) -> None:
    try:
        g = Graph.parse(_read(args.graphfile))
    except ValueError as exc:
        raise CliError(f"{args.graphfile}: {exc}") from None
    if args.outcome not in ("+", "-", "+1", "-1", "1"):
        raise CliError("outcome must be + or -")
    outcome = -1 if args.outcome.startswith("-") else 1
    try:
        gs = measure_graph(GraphState.from_graph(g), args.vertex, args.basis, outcome, h=args.h)
    except (ValueError, IndexError) as exc:
        raise CliError(str(exc)) from None
    print(f"vertices: {gs.n}")
    print("edges:")
    for u, v in gs.graph.edges():
        print(f"  {u} {v}")
    print("components: " + " | ".join(" ".join(map(str, c)) for c in gs.graph.components()))
    print("local cliffords:")
    for v in range(gs.n):
        if not gs.frame[v].is_identity:
            print(f"  {v}: {gs.frame[v]}")
    print(f"byproducts: {gs.byproduct}")


def cmd_surface_threshold(args) -> None:
    if args.lmin < 2 or args.lmax < args.lmin:
        raise CliError("need 2 <= --lmin <= --lmax")
    if args.lmax > args.max_l:
        raise CliError(f"--lmax {args.lmax} exceeds the lattice cap {args.max_l}; "
                       "raise --max-l to acknowledge a long run")
    if not 0.0 <= args.pmin <= args.pmax <= 1.0:
        raise CliError("need 0 <= --pmin <= --pmax <= 1")
    if args.steps < 1:
        raise CliError("--steps must be positive")
    if not 1 <= args.trials <= args.max_trials:
        raise CliError(f"--trials must lie in [1, {args.max_trials}]; "
                       "raise --max-trials to acknowledge a long run")
    if args.decoder == "ml" and args.lmax > decode.ML_MAX_L:
        raise CliError(f"--decoder ml needs --lmax <= {decode.ML_MAX_L}")
    Ls = list(range(args.lmin, args.lmax + 1, args.lstep))
    ps = [float(p) for p in np.linspace(args.pmin, args.pmax, args.steps)]
    cfg = decode.McConfig(Ls, ps, args.trials, args.seed, args.decoder)
    res = decode.run_threshold(cfg)
    text = res.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    for (a, b), c in res.crossings.items():
        print(f"crossing L={a},{b}: " + ("none" if c is None else f"{c:.5f}"))
    est = res.estimate
    print("threshold estimate: " + ("none" if est is None else f"{est:.5f}"))


def cmd_spin(args) -> None:
    try:
        model, _ = spinmodel.load_model(args.modelfile)
    except (OSError, ValueError) as exc:
        raise CliError(f"{args.modelfile}: {exc}") from None
    try:
        if args.action == "z":
            print(f"Z = {_fmt_complex(spinmodel.partition_direct(model))}")
        elif args.action == "overlap":
            direct = spinmodel.partition_direct(model)
            via = spinmodel.partition_via_overlap(model, max_qubits=args.max_qubits)
            diff = abs(via - direct)
            rel = diff / abs(direct) if direct != 0 else diff
            print(f"Z_direct  = {_fmt_complex(direct)}")
            print(f"Z_overlap = {_fmt_complex(via)}")
            print(f"relative difference = {rel:.3e}")
            print("PASS" if rel <= 1e-9 else "FAIL")
        else:
            dual, pref = spinmodel.dualize(model)
            text = spinmodel.dump_model(dual, pref)
            if args.out:
                Path(args.out).write_text(text)
                print(f"dual model: {dual.n_sites} sites, {len(dual.terms)} terms, "
                      f"prefactor {_fmt_complex(pref)}")
            else:
                sys.stdout.write(text)
    except ValueError as exc:
        msg = str(exc)
        if "state-vector cap" in msg:
            msg += "; raise --max-qubits to acknowledge a larger run"
        raise CliError(msg) from None


def cmd_rbim_check(args) -> None:
    if not 2 <= args.L <= decode.ML_MAX_L:
        raise CliError(f"--L must lie in [2, {decode.ML_MAX_L}] (exhaustive coset enumeration)")
    if not 0.0 <= args.p < 1.0:
        raise CliError("--p must lie in [0, 1)")
    if args.samples < 1:
        raise CliError("--samples must be positive")
    lat = ToricLattice(args.L)
    rng = np.random.default_rng(args.seed)
    worst_abs = worst_cond = 0.0
    flipped = 0
    for _ in range(args.samples):
        chain = sample_errors(lat, args.p, rng)
        flipped += int(chain.sum())
        if args.p == 0.0:
            # zero-temperature limit: only the empty chain, both sides give 1
            probs = decode.coset_probabilities(lat, chain, 0.0)
            worst_cond = max(worst_cond, abs(probs[0] - 1.0))
            continue
        rep = decode.verify_correspondence(lat, chain, args.p)
        if not rep.bond_convention_ok:
            raise CliError("bond signs disagree with the error chain")
        worst_abs = max(worst_abs, rep.absolute_deviation)
        worst_cond = max(worst_cond, rep.conditional_deviation)
    print(f"L={args.L} p={args.p} samples={args.samples} seed={args.seed}")
    if args.p > 0:
        beta = decode.nishimori_beta(args.p)
        print(f"beta J = {beta:.12f}  (1/(exp(2 beta J)+1) = {decode.nishimori_p(beta):.12f})")
    print(f"antiferromagnetic bond fraction = {flipped / (args.samples * lat.n_edges):.6f}")
    print(f"max relative deviation (coset sum vs RBIM) = {worst_abs:.3e}")
    print(f"max relative deviation (class posterior)   = {worst_cond:.3e}")
    print("PASS" if max(worst_abs, worst_cond) < 1e-12 else "FAIL")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stabkit", description="Stabilizer simulation toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circuit", help="run a Clifford circuit on |0...0>")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--qubits", type=int, default=None, help="minimum register size")
    p.set_defaults(func=cmd_circuit)

    p = sub.add_parser("graph-measure", help="Pauli measurement on a graph state")
    p.add_argument("graphfile")
    p.add_argument("vertex", type=int)
    p.add_argument("basis", choices=["X", "Y", "Z", "x", "y", "z"])
    p.add_argument("outcome", help="+ or -")
    p.add_argument("--h", type=int, default=None, help="special neighbour for X measurements")
    p.set_defaults(func=cmd_graph_measure)

    p = sub.add_parser("surface-threshold", help="toric-code threshold Monte Carlo")
    p.add_argument("--lmin", type=int, default=4)
    p.add_argument("--lmax", type=int, default=8)
    p.add_argument("--lstep", type=int, default=2)
    p.add_argument("--pmin", type=float, default=0.08)
    p.add_argument("--pmax", type=float, default=0.13)
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--trials", type=int, default=20000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--decoder", choices=["mwpm", "ml"], default="mwpm")
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.add_argument("--max-l", type=int, default=THRESHOLD_MAX_L)
    p.add_argument("--max-trials", type=int, default=THRESHOLD_MAX_TRIALS)
    p.set_defaults(func=cmd_surface_threshold)

    p = sub.add_parser("spin", help="spin-model partition functions and duals")
    p.add_argument("action", choices=["z", "overlap", "dual"])
    p.add_argument("modelfile")
    p.add_argument("--out", default=None)
    p.add_argument("--max-qubits", type=int, default=MAX_QUBITS)
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser("rbim-check", help="coset sums vs random-bond Ising partition functions")
    p.add_argument("--L", type=int, default=3)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rbim_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "basis", None):
        args.basis = args.basis.upper()
    try:
        args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
