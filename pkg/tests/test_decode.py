import math

import numpy as np
import pytest

from stabkit.decode import (McConfig, McPoint, RbimInstance, _mwpm_decode_block,
                            coset_probabilities, curve_crossing, decode_ml, decode_mwpm,
                            nishimori_beta, nishimori_p, rbim_log_partition, run_threshold,
                            trial_errors, verify_correspondence)
from stabkit._accel import python_version_of
from stabkit.toric import (Homology, ToricLattice, homology_class, sample_errors, syndrome_of,
                           vertex_parities)


def chain_of(lat, edges):
    c = np.zeros(lat.n_edges, dtype=np.uint8)
    c[list(edges)] = 1
    return c


def test_empty_syndrome():
    lat = ToricLattice(4)
    zero = np.zeros(lat.n_edges, dtype=np.uint8)
    res = decode_mwpm(lat, syndrome_of(lat, zero), error=zero)
    assert not res.recovery.any() and res.success


def test_single_error_recovered_exactly():
    lat = ToricLattice(5)
    for e in range(lat.n_edges):
        c = chain_of(lat, [e])
        res = decode_mwpm(lat, syndrome_of(lat, c), error=c)
        assert np.array_equal(res.recovery, c)


def test_half_length_chain_may_fail():
    lat = ToricLattice(4)
    err = chain_of(lat, [lat.edge(x, 0, 0) for x in range(3)])
    res = decode_mwpm(lat, syndrome_of(lat, err), error=err)
    # three errors along a loop of four: the short way round closes the loop
    assert res.residual is Homology.H
    ml, _ = decode_ml(lat, syndrome_of(lat, err), 0.1, error=err)
    assert ml.residual is Homology.H


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("L", [3, 4, 6, 7])
def test_recovery_repairs_syndrome(seed, L):
    lat = ToricLattice(L)
    err = sample_errors(lat, 0.15, np.random.default_rng(seed))
    res = decode_mwpm(lat, syndrome_of(lat, err), error=err)
    assert not vertex_parities(lat, err ^ res.recovery).any()
    if L <= 4:
        ml, probs = decode_ml(lat, syndrome_of(lat, err), 0.15, error=err)
        assert not vertex_parities(lat, err ^ ml.recovery).any()
        assert abs(probs.sum() - 1) < 1e-12


@pytest.mark.parametrize("seed", range(5))
def test_x_errors_through_dual(seed):
    lat = ToricLattice(5)
    err = sample_errors(lat, 0.08, np.random.default_rng(seed))
    syn = syndrome_of(lat, x_errors=err)
    res = decode_mwpm(lat, syn, error=err, kind="X")
    assert not syndrome_of(lat, x_errors=err ^ res.recovery).faces.size


def test_tie_goes_to_first_class():
    lat = ToricLattice(4)
    # two defects half way round: both completions have weight two
    err = chain_of(lat, [lat.edge(0, 1, 0), lat.edge(1, 1, 0)])
    syn = syndrome_of(lat, err)
    res, probs = decode_ml(lat, syn, 0.1)
    assert probs[0] == probs[1]
    assert np.array_equal(res.recovery, decode_mwpm(lat, syn).recovery)


@pytest.mark.parametrize("seed", range(20))
def test_zero_temperature_limit_matches_matching(seed):
    lat = ToricLattice(3)
    err = sample_errors(lat, 0.2, np.random.default_rng(seed))
    syn = syndrome_of(lat, err)
    mw = decode_mwpm(lat, syn)
    ml, probs = decode_ml(lat, syn, 0.0)
    # the matching class holds a minimum-weight chain
    assert probs[0] > 0
    assert ml.recovery.sum() == mw.recovery.sum()
    if np.count_nonzero(probs) == 1:
        assert np.array_equal(ml.recovery, mw.recovery)


def test_ml_size_cap():
    lat = ToricLattice(5)
    with pytest.raises(ValueError, match="L <= 4"):
        decode_ml(lat, syndrome_of(lat, np.zeros(lat.n_edges, dtype=np.uint8)), 0.1)


# -- RBIM -------------------------------------------------------------------


def test_nishimori_relation():
    for p in (0.01, 0.1, 0.3):
        beta = nishimori_beta(p)
        assert math.isclose(nishimori_p(beta), p, rel_tol=1e-14)
        assert math.isclose(math.exp(-2 * beta), p / (1 - p), rel_tol=1e-14)


def test_rbim_infinite_temperature():
    inst = RbimInstance(3, np.ones(18, dtype=int), 0.0)
    assert math.isclose(math.exp(rbim_log_partition(inst, "brute")), 2 ** 9, rel_tol=1e-14)
    assert math.isclose(math.exp(rbim_log_partition(inst, "transfer")), 2 ** 9, rel_tol=1e-12)


def test_rbim_ground_state_dominance():
    inst = RbimInstance(3, np.ones(18, dtype=int), 20.0)
    assert math.isclose(rbim_log_partition(inst), math.log(2) + 20.0 * 18, rel_tol=1e-12)


@pytest.mark.parametrize("L", [2, 3, 4, 5])
@pytest.mark.parametrize("seed", range(3))
def test_brute_force_and_transfer_matrix_agree(L, seed):
    rng = np.random.default_rng(seed)
    signs = rng.choice([-1, 1], size=2 * L * L, p=[0.2, 0.8])
    inst = RbimInstance(L, signs, float(rng.uniform(0.2, 1.5)))
    a = rbim_log_partition(inst, "brute")
    b = rbim_log_partition(inst, "transfer")
    assert abs(math.exp(a - b) - 1) < 1e-10


def test_transfer_matrix_handles_larger_lattices():
    inst = RbimInstance(8, np.ones(128, dtype=int), 30.0)
    assert math.isclose(rbim_log_partition(inst, "transfer"), math.log(2) + 30.0 * 128,
                        rel_tol=1e-12)
    with pytest.raises(ValueError, match="L <= 5"):
        rbim_log_partition(inst, "brute")


@pytest.mark.parametrize("p", [0.05, 0.1, 0.15, 0.3])
def test_correspondence_small_set(p):
    lat = ToricLattice(3)
    rng = np.random.default_rng(int(p * 100))
    for _ in range(5):
        rep = verify_correspondence(lat, sample_errors(lat, p, rng), p)
        assert rep.max_deviation < 1e-12
        assert rep.bond_convention_ok


def test_correspondence_empty_chain():
    lat = ToricLattice(3)
    rep = verify_correspondence(lat, np.zeros(18, dtype=np.uint8), 0.2)
    assert rep.max_deviation < 1e-12


def test_coset_probabilities_absolute_sum_is_one():
    # summing every class over every syndrome covers all chains
    lat = ToricLattice(2)
    p = 0.2
    seen, total = set(), 0.0
    for m in range(1 << lat.n_edges):
        c = np.array([(m >> e) & 1 for e in range(lat.n_edges)], dtype=np.uint8)
        key = tuple(vertex_parities(lat, c))
        if key in seen:
            continue
        seen.add(key)
        total += coset_probabilities(lat, c, p, normalize=False).sum()
    assert math.isclose(total, 1.0, rel_tol=1e-12)


# -- Monte Carlo ------------------------------------------------------------


def test_zero_noise_never_fails():
    res = run_threshold(McConfig([4, 6], [0.0], 200, seed=1))
    assert all(pt.failures == 0 for pt in res.points)


def test_maximal_noise_randomizes_class():
    res = run_threshold(McConfig([6], [0.5], 4000, seed=2))
    pt = res.points[0]
    assert abs(pt.rate - 0.75) < 5 * math.sqrt(0.75 * 0.25 / pt.trials)


def test_runs_are_reproducible():
    cfg = McConfig([3, 5], [0.05, 0.1], 300, seed=9)
    assert run_threshold(cfg).to_csv() == run_threshold(cfg).to_csv()


def test_trial_streams_are_independent_of_batch_size():
    full = trial_errors(4, 6, 2, 0.1, 50)
    assert np.array_equal(full[:20], trial_errors(4, 6, 2, 0.1, 20))


def test_ml_decoder_option():
    res = run_threshold(McConfig([3], [0.1], 200, seed=3, decoder="ml"))
    assert 0 < res.points[0].failures < 200
    with pytest.raises(ValueError):
        McConfig([5], [0.1], 10, decoder="ml")


def test_csv_layout():
    res = run_threshold(McConfig([3], [0.1], 50, seed=0))
    lines = res.to_csv().splitlines()
    assert lines[0] == "L,p_actual,trials,failures,rate,stderr"
    assert len(lines) == 2


def test_crossing_interpolation():
    ps = [0.1, 0.2, 0.3]
    small = [McPoint(4, p, 100, f) for p, f in zip(ps, [20, 30, 40])]
    large = [McPoint(6, p, 100, f) for p, f in zip(ps, [10, 30 - 5, 50])]
    # differences -10, -5, +10: root at 0.2 + 0.1 * 5/15
    assert math.isclose(curve_crossing(small, large), 0.2 + 0.1 / 3)
    assert curve_crossing(small, small[:]) is None


def test_block_kernel_python_path_agrees():
    errors = trial_errors(0, 4, 0, 0.12, 40)
    fast = _mwpm_decode_block(4, errors)
    slow = python_version_of(_mwpm_decode_block)(4, errors)
    assert np.array_equal(fast, slow)
    lat = ToricLattice(4)
    for err, cls in zip(errors, fast):
        res = decode_mwpm(lat, syndrome_of(lat, err), error=err)
        assert res.residual.value == cls
