"""Toric-code decoding, threshold estimation and the random-bond Ising mapping.

Two decoders are provided for Z errors (X errors go through the dual lattice):

* :func:`decode_mwpm` pairs syndrome defects by minimum-weight perfect
  matching with torus Manhattan distances and joins each pair by a fixed
  shortest path (x first, then y, shorter way round, ties to +).
* :func:`decode_ml` enumerates every trivial cycle (products of face
  boundaries) and picks the most probable homology class (L <= 4).

Normalization of the RBIM correspondence. With ``exp(-2 beta J) = p/(1-p)``
every chain ``c`` on the ``E = 2 L^2`` edges has probability::

    P(c) = prod_l p^{u_l} (1-p)^{1-u_l} = (p(1-p))^{E/2} exp(beta J sum_l v_l)

where ``v_l = 1 - 2 u_l``. Putting Ising spins on the faces, the chains
``c + boundary(faces with sigma = -1)`` have ``v_l = v^C_l sigma_i sigma_j``;
the map from the ``2^{L^2}`` spin configurations onto the ``2^{L^2 - 1}``
trivial cycles is two-to-one (global flip). Hence::

    sum_{c ~ C} P(c) = (1/2) (p(1-p))^{L^2} Z_RBIM(J_ij = J v^C_ij)

and the conditional probability of the class of ``C`` given its syndrome is
``Z(v^C) / sum_h Z(v^{C + L_h})`` over the four homology classes ``h``.
"""

from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._accel import NUMBA_ENABLED, njit, prange
from .matching import _mwpm_kernel
from .toric import (Homology, Syndrome, ToricLattice, from_dual, homology_class,
                    syndrome_of, to_dual, vertex_parities)

ML_MAX_L = 4
BRUTE_MAX_L = 5
TRANSFER_MAX_L = 12
CLASS_ORDER = (Homology.TRIVIAL, Homology.H, Homology.V, Homology.HV)


# ---------------------------------------------------------------------------
# compiled MWPM decoding kernels (edge/vertex layout documented in toric.py)


@njit
def _defects(L, err, out):
    count = 0
    for x in range(L):
        for y in range(L):
            par = (err[2 * (x * L + y)] ^ err[2 * (((x - 1) % L) * L + y)]
                   ^ err[2 * (x * L + y) + 1] ^ err[2 * (x * L + (y - 1) % L) + 1])
            if par:
                out[count] = x * L + y
                count += 1
    return count


@njit
def _add_path(L, a, b, rec):
    x1, y1 = a // L, a % L
    x2, y2 = b // L, b % L
    dx = (x2 - x1) % L
    x = x1
    if dx <= L - dx:
        for _ in range(dx):
            rec[2 * (x * L + y1)] ^= 1
            x = (x + 1) % L
    else:
        for _ in range(L - dx):
            x = (x - 1) % L
            rec[2 * (x * L + y1)] ^= 1
    dy = (y2 - y1) % L
    y = y1
    if dy <= L - dy:
        for _ in range(dy):
            rec[2 * (x2 * L + y) + 1] ^= 1
            y = (y + 1) % L
    else:
        for _ in range(L - dy):
            y = (y - 1) % L
            rec[2 * (x2 * L + y) + 1] ^= 1


@njit
def _torus_distance(L, a, b):
    dx = abs(a // L - b // L)
    dy = abs(a % L - b % L)
    return min(dx, L - dx) + min(dy, L - dy)


@njit
def _recover_from_defects(L, defects, count, rec):
    if count == 0:
        return
    w = np.zeros((count, count), dtype=np.int64)
    for i in range(count):
        for j in range(count):
            if i != j:
                w[i, j] = _torus_distance(L, defects[i], defects[j])
    mate = _mwpm_kernel(w)
    for i in range(count):
        if i < mate[i]:
            _add_path(L, defects[i], defects[mate[i]], rec)


@njit
def _residual_class(L, err, rec):
    h = 0
    v = 0
    for y in range(L):
        h ^= err[2 * y] ^ rec[2 * y]
    for x in range(L):
        v ^= err[2 * x * L + 1] ^ rec[2 * x * L + 1]
    return h | (v << 1)


@njit
def _mwpm_decode_one(L, err, rec):
    defects = np.zeros(L * L, dtype=np.int64)
    count = _defects(L, err, defects)
    _recover_from_defects(L, defects, count, rec)
    return _residual_class(L, err, rec)


@njit(parallel=True)
def _mwpm_decode_block(L, errors):
    """Residual homology class (0 = success) of every row of ``errors``.

    Rows are independent; each writes only its own slot, so the result does
    not depend on the thread count (``STABKIT_THREADS``).
    """
    out = np.zeros(errors.shape[0], dtype=np.int64)
    for t in prange(errors.shape[0]):
        rec = np.zeros(errors.shape[1], dtype=np.uint8)
        out[t] = _mwpm_decode_one(L, errors[t], rec)
    return out


# ---------------------------------------------------------------------------
# results


@dataclass
class DecodeResult:
    recovery: np.ndarray
    success: bool | None = None
    residual: Homology | None = None


def _outcome(lat: ToricLattice, error, recovery, dual: bool = False) -> DecodeResult:
    if error is None:
        return DecodeResult(recovery)
    residual = np.asarray(error, dtype=np.uint8) ^ recovery
    if dual:
        residual = to_dual(lat, residual)
    cls = homology_class(lat, residual)
    return DecodeResult(recovery, cls is Homology.TRIVIAL, cls)


def _defect_array(syn) -> np.ndarray:
    if isinstance(syn, Syndrome):
        return syn.vertices
    return np.asarray(syn, dtype=np.int64)


def decode_mwpm(lat: ToricLattice, syn, error=None, kind: str = "Z") -> DecodeResult:
    """Minimum-weight matching recovery for a syndrome.

    ``syn`` is a :class:`Syndrome` (vertex defects for ``kind="Z"``, face
    defects for ``kind="X"``) or a plain array of defect indices. If the
    actual ``error`` chain is given, success and residual class are filled in.
    """
    if kind not in ("Z", "X"):
        raise ValueError("kind must be 'Z' or 'X'")
    if kind == "X" and isinstance(syn, Syndrome):
        defects = np.asarray(syn.faces, dtype=np.int64)
    else:
        defects = _defect_array(syn).astype(np.int64)
    if defects.size % 2:
        raise AssertionError("odd number of defects cannot occur on a torus")
    rec = np.zeros(lat.n_edges, dtype=np.uint8)
    _recover_from_defects(lat.L, defects, defects.size, rec)
    if kind == "X":
        return _outcome(lat, error, from_dual(lat, rec), dual=True)
    return _outcome(lat, error, rec)


# ---------------------------------------------------------------------------
# maximum-likelihood decoding by coset enumeration

_STAB_CACHE: dict[int, np.ndarray] = {}


def trivial_cycles(lat: ToricLattice) -> np.ndarray:
    """All ``2^(L^2-1)`` trivial cycles as packed uint64 edge masks."""
    if lat.L > ML_MAX_L:
        raise ValueError(f"coset enumeration limited to L <= {ML_MAX_L}, got L={lat.L}")
    if lat.L not in _STAB_CACHE:
        elems = np.zeros(1, dtype=np.uint64)
        for f in range(lat.n_faces - 1):
            mask = 0
            for e in lat.face_edges(f):
                mask |= 1 << e
            elems = np.concatenate([elems, elems ^ np.uint64(mask)])
        _STAB_CACHE[lat.L] = elems
    return _STAB_CACHE[lat.L]


def _pack(chain) -> np.uint64:
    bits = np.flatnonzero(np.asarray(chain))
    return np.uint64(sum(1 << int(e) for e in bits))


def _unpack(mask: int, n_edges: int) -> np.ndarray:
    return np.array([(int(mask) >> e) & 1 for e in range(n_edges)], dtype=np.uint8)


def coset_weights(lat: ToricLattice, reference) -> np.ndarray:
    """Histogram of chain weights per class: ``hist[h, w]`` counts chains of
    weight ``w`` in ``reference + L_h + (trivial cycles)``."""
    stabs = trivial_cycles(lat)
    ref = _pack(reference)
    hist = np.zeros((4, lat.n_edges + 1), dtype=np.int64)
    for k, cls in enumerate(CLASS_ORDER):
        base = ref ^ _pack(lat.class_representative(cls))
        weights = np.bitwise_count(stabs ^ base)
        hist[k] = np.bincount(weights, minlength=lat.n_edges + 1)
    return hist


def coset_probabilities(lat: ToricLattice, reference, p: float, normalize: bool = True) -> np.ndarray:
    """Probability mass of each class ``reference + L_h`` (order: trivial, h, v, hv).

    With ``normalize=False`` the absolute sums ``sum P(c)`` are returned.
    ``p = 0`` keeps only minimum-weight chains (the zero-temperature limit).
    """
    if not 0.0 <= p < 1.0:
        raise ValueError(f"hypothetical error probability {p} outside [0, 1)")
    hist = coset_weights(lat, reference)
    w = np.arange(lat.n_edges + 1)
    if normalize:
        if p == 0.0:
            wmin = w[hist.sum(axis=0) > 0].min()
            rel = (w == wmin).astype(float)
        else:
            wmin = w[hist.sum(axis=0) > 0].min()
            rel = np.exp((w - wmin) * (math.log(p) - math.log1p(-p)))
        mass = hist @ rel
        return mass / mass.sum()
    if p == 0.0:
        return (hist @ (w == 0).astype(float)).astype(float)
    logs = w * math.log(p) + (lat.n_edges - w) * math.log1p(-p)
    return hist @ np.exp(logs)


def decode_ml(lat: ToricLattice, syn, p: float, error=None):
    """Maximum-likelihood class decoding. Returns ``(DecodeResult, class_probs)``.

    ``class_probs[k]`` is the posterior of recovery ``C0 + L_k`` where ``C0``
    is the matching recovery; ties go to the first class in
    (trivial, h, v, hv).
    """
    if lat.L > ML_MAX_L:
        raise ValueError(f"ML decoding limited to L <= {ML_MAX_L}, got L={lat.L}")
    c0 = decode_mwpm(lat, syn).recovery
    probs = coset_probabilities(lat, c0, p)
    best = int(np.argmax(probs))
    rec = c0 ^ lat.class_representative(CLASS_ORDER[best])
    return _outcome(lat, error, rec), probs


# ---------------------------------------------------------------------------
# random-bond Ising model on the dual lattice


@dataclass(frozen=True)
class RbimInstance:
    """Ising spins on the faces of an L x L torus, one bond per primal edge.

    Bond ``l`` couples the two faces sharing edge ``l`` with strength
    ``J * signs[l]``.
    """

    L: int
    signs: np.ndarray
    beta: float
    J: float = 1.0

    def __post_init__(self):
        s = np.asarray(self.signs, dtype=np.int64)
        if s.shape != (2 * self.L * self.L,):
            raise ValueError(f"need {2 * self.L * self.L} bond signs")
        if not np.all(np.abs(s) == 1):
            raise ValueError("bond signs must be +1 or -1")
        object.__setattr__(self, "signs", s)

    @classmethod
    def from_chain(cls, lat: ToricLattice, chain, p: float, J: float = 1.0) -> RbimInstance:
        """Antiferromagnetic bonds on the chain, ``exp(-2 beta J) = p/(1-p)``."""
        signs = 1 - 2 * np.asarray(chain, dtype=np.int64)
        return cls(lat.L, signs, nishimori_beta(p, J), J)

    def bond_faces(self) -> np.ndarray:
        lat = ToricLattice(self.L)
        return np.array([lat.edge_faces(e) for e in range(lat.n_edges)], dtype=np.int64)


def nishimori_beta(p: float, J: float = 1.0) -> float:
    """Solve ``exp(-2 beta J) = p / (1 - p)`` for beta."""
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie strictly between 0 and 1")
    return 0.5 * math.log((1.0 - p) / p) / J


def nishimori_p(beta: float, J: float = 1.0) -> float:
    return 1.0 / (math.exp(2.0 * beta * J) + 1.0)


@njit
def _rbim_log_brute(nspins, bond_a, bond_b, coupling, beta):
    # Gray-code walk over spin configurations, bits = spins pointing down
    nb = bond_a.shape[0]
    nbr_start = np.zeros(nspins + 1, dtype=np.int64)
    for k in range(nb):
        nbr_start[bond_a[k] + 1] += 1
        nbr_start[bond_b[k] + 1] += 1
    for i in range(nspins):
        nbr_start[i + 1] += nbr_start[i]
    fill = nbr_start[:-1].copy()
    nbr = np.zeros(2 * nb, dtype=np.int64)
    nbj = np.zeros(2 * nb)
    for k in range(nb):
        a, b = bond_a[k], bond_b[k]
        nbr[fill[a]] = b
        nbj[fill[a]] = coupling[k]
        fill[a] += 1
        nbr[fill[b]] = a
        nbj[fill[b]] = coupling[k]
        fill[b] += 1
    spin = np.ones(nspins)
    energy = 0.0
    bound = 0.0
    for k in range(nb):
        energy += coupling[k]
        bound += abs(coupling[k])
    total = math.exp(beta * (energy - bound))
    comp = 0.0  # Kahan compensation; the sum has up to 2^25 terms
    for step in range(1, 1 << nspins):
        i = 0
        while not (step >> i) & 1:
            i += 1
        local = 0.0
        for q in range(nbr_start[i], nbr_start[i + 1]):
            local += nbj[q] * spin[nbr[q]]
        energy -= 2.0 * spin[i] * local
        spin[i] = -spin[i]
        term = math.exp(beta * (energy - bound)) - comp
        acc = total + term
        comp = (acc - total) - term
        total = acc
    return math.log(total) + beta * bound


def rbim_log_partition(inst: RbimInstance, method: str = "auto") -> float:
    """``log sum_sigma exp(beta sum_l J_l sigma_i sigma_j)``.

    ``method`` is ``"brute"`` (L <= 5), ``"transfer"`` (L <= 12) or ``"auto"``.
    """
    if method == "auto":
        method = "brute" if inst.L <= 4 else "transfer"
    if method == "brute":
        if inst.L > BRUTE_MAX_L:
            raise ValueError(f"spin enumeration limited to L <= {BRUTE_MAX_L}, got L={inst.L}")
        faces = inst.bond_faces()
        return float(_rbim_log_brute(inst.L * inst.L, faces[:, 0].copy(), faces[:, 1].copy(),
                                     (inst.J * inst.signs).astype(np.float64), float(inst.beta)))
    if method == "transfer":
        if inst.L > TRANSFER_MAX_L:
            raise ValueError(f"transfer matrix limited to L <= {TRANSFER_MAX_L}, got L={inst.L}")
        return _rbim_log_transfer(inst)
    raise ValueError(f"unknown method {method!r}")


def rbim_partition(inst: RbimInstance, method: str = "auto") -> float:
    return math.exp(rbim_log_partition(inst, method))


def _rbim_log_transfer(inst: RbimInstance) -> float:
    """Column transfer matrices with a trace over the periodic direction.

    Face ``(x, y)`` is bit ``y`` of the column-``x`` state (bit set = spin
    down). Horizontal edge ``(x, y)`` couples faces ``(x, y-1)`` and
    ``(x, y)`` inside column ``x``; vertical edge ``(x, y)`` couples column
    ``x-1`` to column ``x`` in row ``y``.
    """
    L = inst.L
    bJ = inst.beta * inst.J * inst.signs.astype(float)
    lat = ToricLattice(L)
    states = np.arange(1 << L)
    spins = 1.0 - 2.0 * ((states[:, None] >> np.arange(L)[None, :]) & 1)

    def column_weights(x):
        e = np.zeros(1 << L)
        for y in range(L):
            e += bJ[lat.edge(x, y, 0)] * spins[:, (y - 1) % L] * spins[:, y]
        return e

    def couple(A, x):
        # right-multiply by prod_y [[e^{K}, e^{-K}], [e^{-K}, e^{K}]] acting on bit y
        T = A.reshape((A.shape[0],) + (2,) * L)
        for y in range(L):
            K = bJ[lat.edge(x, y, 1)]
            t = np.array([[math.exp(K), math.exp(-K)], [math.exp(-K), math.exp(K)]])
            axis = 1 + (L - 1 - y)
            T = np.moveaxis(np.tensordot(T, t, axes=([axis], [0])), -1, axis)
        return T.reshape(A.shape)

    log_scale = 0.0
    w0 = column_weights(0)
    shift = w0.max()
    A = np.diag(np.exp(w0 - shift))
    log_scale += shift
    for x in range(1, L):
        A = couple(A, x)
        w = column_weights(x)
        shift = w.max()
        A = A * np.exp(w - shift)[None, :]
        log_scale += shift
        peak = np.abs(A).max()
        A /= peak
        log_scale += math.log(peak)
    A = couple(A, 0)
    return float(math.log(np.trace(A)) + log_scale)


@dataclass
class CorrespondenceReport:
    L: int
    p: float
    beta: float
    chain_sum: float
    rbim_value: float
    absolute_deviation: float
    conditional_ml: float
    conditional_rbim: float
    conditional_deviation: float
    bond_convention_ok: bool

    @property
    def max_deviation(self) -> float:
        return max(self.absolute_deviation, self.conditional_deviation)


def verify_correspondence(lat: ToricLattice, chain, p: float) -> CorrespondenceReport:
    """Compare coset sums with RBIM partition functions (relative deviations).

    Checks ``sum_{c ~ C} P(c) = (1/2)(p(1-p))^{L^2} Z(v^C)`` and
    ``P(class of C | syndrome) = Z(v^C) / sum_h Z(v^{C + L_h})``.
    """
    if lat.L > ML_MAX_L:
        raise ValueError(f"correspondence check limited to L <= {ML_MAX_L}")
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie strictly between 0 and 1")
    chain = np.asarray(chain, dtype=np.uint8)
    absolute = coset_probabilities(lat, chain, p, normalize=False)
    conditional = coset_probabilities(lat, chain, p)
    log_z = []
    inst = None
    for cls in CLASS_ORDER:
        shifted = chain ^ lat.class_representative(cls)
        this = RbimInstance.from_chain(lat, shifted, p)
        if inst is None:
            inst = this
        log_z.append(rbim_log_partition(this, "brute"))
    log_z = np.array(log_z)
    log_norm = math.log(0.5) + lat.n_faces * (math.log(p) + math.log1p(-p))
    rbim_abs = math.exp(log_z[0] + log_norm)
    zs = np.exp(log_z - log_z.max())
    rbim_cond = float(zs[0] / zs.sum())
    bonds_ok = bool(np.array_equal(inst.signs == -1, chain == 1))
    return CorrespondenceReport(
        L=lat.L, p=p, beta=inst.beta,
        chain_sum=float(absolute[0]), rbim_value=rbim_abs,
        absolute_deviation=abs(absolute[0] - rbim_abs) / abs(rbim_abs),
        conditional_ml=float(conditional[0]), conditional_rbim=rbim_cond,
        conditional_deviation=abs(conditional[0] - rbim_cond) / abs(rbim_cond),
        bond_convention_ok=bonds_ok,
    )


# ---------------------------------------------------------------------------
# Monte Carlo threshold estimation


@dataclass
class McConfig:
    Ls: Sequence[int]
    p_values: Sequence[float]
    trials: int
    seed: int = 0
    decoder: str = "mwpm"
    p_hypothetical: float | None = None

    def __post_init__(self):
        if self.decoder not in ("mwpm", "ml"):
            raise ValueError("decoder must be 'mwpm' or 'ml'")
        if self.trials < 1:
            raise ValueError("need at least one trial per point")
        for L in self.Ls:
            if L < 2:
                raise ValueError("lattice size must be >= 2")
            if self.decoder == "ml" and L > ML_MAX_L:
                raise ValueError(f"ML decoder limited to L <= {ML_MAX_L}")
        for p in self.p_values:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"error probability {p} outside [0, 1]")


@dataclass
class McPoint:
    L: int
    p_actual: float
    trials: int
    failures: int

    @property
    def rate(self) -> float:
        return self.failures / self.trials

    @property
    def stderr(self) -> float:
        r = self.rate
        return math.sqrt(r * (1.0 - r) / self.trials)


@dataclass
class McResult:
    points: list[McPoint]
    crossings: dict[tuple[int, int], float | None] = field(default_factory=dict)

    def curve(self, L: int) -> list[McPoint]:
        return sorted((pt for pt in self.points if pt.L == L), key=lambda pt: pt.p_actual)

    @property
    def estimate(self) -> float | None:
        vals = [c for c in self.crossings.values() if c is not None]
        return float(np.mean(vals)) if vals else None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["L", "p_actual", "trials", "failures", "rate", "stderr"])
        for pt in self.points:
            w.writerow([pt.L, repr(float(pt.p_actual)), pt.trials, pt.failures,
                        repr(pt.rate), repr(pt.stderr)])
        return buf.getvalue()


def trial_errors(seed: int, L: int, p_index: int, p: float, trials: int) -> np.ndarray:
    """Error chains for a grid point; trial ``t`` reads its own Philox counter
    block so any subset of trials can be regenerated independently."""
    key = np.random.SeedSequence([seed, L, p_index]).generate_state(2, dtype=np.uint64)
    n_edges = 2 * L * L
    out = np.empty((trials, n_edges), dtype=np.uint8)
    for t in range(trials):
        gen = np.random.Generator(np.random.Philox(key=key, counter=[0, 0, t, 0]))
        out[t] = gen.random(n_edges) < p
    return out


def _set_threads() -> None:
    threads = os.environ.get("STABKIT_THREADS")
    if threads and NUMBA_ENABLED:
        import numba
        numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))


def run_threshold(cfg: McConfig) -> McResult:
    """Failure rates on the (L, p) grid plus adjacent-size curve crossings."""
    _set_threads()
    points = []
    for L in cfg.Ls:
        lat = ToricLattice(L)
        for k, p in enumerate(cfg.p_values):
            errors = trial_errors(cfg.seed, L, k, p, cfg.trials)
            if cfg.decoder == "mwpm":
                classes = _mwpm_decode_block(L, errors)
                failures = int(np.count_nonzero(classes))
            else:
                p_hyp = p if cfg.p_hypothetical is None else cfg.p_hypothetical
                p_hyp = min(max(p_hyp, 1e-12), 0.5)
                failures = 0
                for err in errors:
                    res, _ = decode_ml(lat, syndrome_of(lat, err), p_hyp, error=err)
                    failures += not res.success
            points.append(McPoint(L, float(p), cfg.trials, failures))
    result = McResult(points)
    sizes = sorted(set(cfg.Ls))
    for a, b in zip(sizes, sizes[1:]):
        result.crossings[(a, b)] = curve_crossing(result.curve(a), result.curve(b))
    return result


def curve_crossing(small: list[McPoint], large: list[McPoint]) -> float | None:
    """Where the larger lattice's failure curve overtakes the smaller one.

    Linear interpolation of the rate difference between grid points; if the
    sign changes from negative to positive more than once, the mean of the
    crossings is returned.
    """
    ps = np.array([pt.p_actual for pt in small])
    diff = np.array([b.rate - a.rate for a, b in zip(small, large)])
    roots = []
    for i in range(len(ps) - 1):
        d0, d1 = diff[i], diff[i + 1]
        if d0 < 0 <= d1 or (d0 <= 0 < d1 and d0 != d1):
            roots.append(ps[i] + (ps[i + 1] - ps[i]) * (-d0) / (d1 - d0))
    return float(np.mean(roots)) if roots else None


def sample_and_decode(lat: ToricLattice, p_actual: float, rng, decoder: str = "mwpm",
                      p_hypothetical: float | None = None) -> DecodeResult:
    """One trial with a caller-supplied generator."""
    from .toric import sample_errors

    err = sample_errors(lat, p_actual, rng)
    syn = syndrome_of(lat, err)
    if decoder == "mwpm":
        return decode_mwpm(lat, syn, error=err)
    p_hyp = p_actual if p_hypothetical is None else p_hypothetical
    return decode_ml(lat, syn, p_hyp, error=err)[0]


__all__ = [
    "DecodeResult", "McConfig", "McPoint", "McResult", "RbimInstance", "CorrespondenceReport",
    "decode_mwpm", "decode_ml", "coset_probabilities", "coset_weights", "trivial_cycles",
    "rbim_partition", "rbim_log_partition", "verify_correspondence", "run_threshold",
    "curve_crossing", "nishimori_beta", "nishimori_p", "trial_errors", "sample_and_decode",
    "vertex_parities",
]
