"""Time the numba-compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each path runs in its own interpreter, the fallback with
``STABKIT_DISABLE_NUMBA=1`` so nested kernels are uncompiled too.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from stabkit._accel import NUMBA_ENABLED
from stabkit.decode import RbimInstance, _mwpm_decode_block, _rbim_log_brute, trial_errors
from stabkit.matching import _mwpm_kernel
from stabkit.spinmodel import _partition_kernel, _term_arrays, random_model


def best_of(fn, repeat):
    fn()  # warm-up (includes compilation)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    w = np.triu(rng.integers(0, 50, (24, 24)), 1)
    w = (w + w.T).astype(np.int64)
    yield "mwpm m=24", _mwpm_kernel, (w,)

    errors = trial_errors(0, 6, 0, 0.1, 200)
    yield "decode 200 trials L=6", _mwpm_decode_block, (6, errors)

    m = random_model(rng, 14, 12)
    masks, weights = _term_arrays(m)
    yield "spin Z n=14", _partition_kernel, (m.n_sites, masks, weights)

    inst = RbimInstance(3, rng.choice([-1, 1], 18), 0.8)
    faces = inst.bond_faces()
    args = (9, faces[:, 0].copy(), faces[:, 1].copy(), inst.signs.astype(float), 0.8)
    yield "RBIM brute L=3", _rbim_log_brute, args


def measure(repeat):
    return {name: best_of(lambda: kernel(*kargs), repeat) for name, kernel, kargs in cases()}


def child(disable, repeat):
    env = dict(os.environ)
    env.pop("STABKIT_DISABLE_NUMBA", None)
    if disable:
        env["STABKIT_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps({"numba": NUMBA_ENABLED, "times": measure(args.repeat)}))
        return
    fast, slow = child(False, args.repeat), child(True, args.repeat)
    if not fast["numba"]:
        raise SystemExit("numba is unavailable; nothing to compare")
    print(f"{'kernel':<24}{'numba [ms]':>12}{'python [ms]':>14}{'speed-up':>10}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:<24}{t_fast * 1e3:>12.3f}{t_slow * 1e3:>14.1f}{t_slow / t_fast:>10.0f}x")


if __name__ == "__main__":
    main()
