"""Exact minimum-weight perfect matching on complete graphs.

:func:`mwpm` runs Edmonds' weighted blossom algorithm (O(m^3), integer duals)
on transformed weights ``C - w``; with ``C`` larger than any perfect matching
weight the maximum-weight matching is perfect and minimizes the original
total. The blossom kernel is array-based with explicit stacks instead of
recursion so that numba can compile it.

:func:`mwpm_oracle_dp` is an independent exhaustive check by dynamic
programming over node subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._accel import njit

DP_MAX_NODES = 16


@dataclass(frozen=True)
class WeightedGraph:
    """Complete graph on ``m`` nodes with a symmetric integer weight matrix."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        if not np.issubdtype(w.dtype, np.integer):
            if not np.all(np.equal(np.mod(w, 1), 0)):
                raise ValueError("weights must be integers")
        w = w.astype(np.int64)
        if not np.array_equal(w, w.T):
            raise ValueError("weight matrix must be symmetric")
        off = w[~np.eye(w.shape[0], dtype=bool)]
        if off.size and off.min() < 0:
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "weights", w)

    @property
    def m(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    weight: int


def _check_even(g: WeightedGraph) -> None:
    if g.m % 2:
        raise ValueError(f"perfect matching needs an even node count, got {g.m}")


def mwpm(g: WeightedGraph) -> Matching:
    """Minimum-weight perfect matching (blossom algorithm)."""
    _check_even(g)
    if g.m == 0:
        return Matching((), 0)
    mate = min_weight_perfect_matching(g.weights)
    pairs = tuple((i, int(mate[i])) for i in range(g.m) if i < mate[i])
    if len(pairs) * 2 != g.m:  # pragma: no cover - guarded by the weight shift
        raise AssertionError("blossom returned a non-perfect matching")
    return Matching(pairs, int(sum(g.weights[i, j] for i, j in pairs)))


def min_weight_perfect_matching(weights: np.ndarray) -> np.ndarray:
    """Mate array of a minimum-weight perfect matching of a complete graph."""
    w = np.asarray(weights, dtype=np.int64)
    return _mwpm_kernel(w)


def mwpm_oracle_dp(g: WeightedGraph) -> Matching:
    """Exact optimum by dynamic programming over subsets (m <= 16)."""
    _check_even(g)
    m = g.m
    if m > DP_MAX_NODES:
        raise ValueError(f"DP oracle limited to {DP_MAX_NODES} nodes, got {m}")
    w = g.weights.tolist()

    @lru_cache(maxsize=None)
    def best(mask: int):
        # cheapest matching of the nodes in ``mask``; always pairs the lowest one
        if mask == 0:
            return 0, ()
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        choice = None
        r = rest
        while r:
            low = r & -r
            j = low.bit_length() - 1
            sub_w, sub_pairs = best(rest & ~low)
            total = w[i][j] + sub_w
            if choice is None or total < choice[0]:
                choice = (total, ((i, j),) + sub_pairs)
            r ^= low
        return choice

    total, pairs = best((1 << m) - 1)
    return Matching(tuple(sorted(pairs)), int(total))


# ---------------------------------------------------------------------------
# blossom kernel (1-indexed nodes, blossoms numbered n+1 .. 2n)

_LAB, _MATCH, _SLACK, _ST, _PA, _S, _VIS, _FLEN = 0, 1, 2, 3, 4, 5, 6, 7
# meta slots
_N, _NX, _HEAD, _TAIL, _STAMP = 0, 1, 2, 3, 4
_INF = 1 << 60


@njit
def _dist(G, V, a, b):
    eu = G[0, a, b]
    ev = G[1, a, b]
    return V[_LAB, eu] + V[_LAB, ev] - G[2, eu, ev] * 2


@njit
def _update_slack(G, V, u, x):
    if V[_SLACK, x] == 0 or _dist(G, V, u, x) < _dist(G, V, V[_SLACK, x], x):
        V[_SLACK, x] = u


@njit
def _set_slack(G, V, meta, x):
    V[_SLACK, x] = 0
    for u in range(1, meta[_N] + 1):
        if G[2, u, x] > 0 and V[_ST, u] != x and V[_S, V[_ST, u]] == 0:
            _update_slack(G, V, u, x)


@njit
def _q_push(V, FL, meta, Q, STK, x):
    n = meta[_N]
    top = 1
    STK[0, 0] = x
    while top > 0:
        top -= 1
        y = STK[0, top]
        if y <= n:
            Q[meta[_TAIL]] = y
            meta[_TAIL] += 1
        else:
            for i in range(V[_FLEN, y] - 1, -1, -1):
                STK[0, top] = FL[y, i]
                top += 1


@njit
def _set_st(V, FL, meta, STK, x, b):
    n = meta[_N]
    top = 1
    STK[0, 0] = x
    while top > 0:
        top -= 1
        y = STK[0, top]
        V[_ST, y] = b
        if y > n:
            for i in range(V[_FLEN, y]):
                STK[0, top] = FL[y, i]
                top += 1


@njit
def _get_pr(V, FL, b, xr):
    flen = V[_FLEN, b]
    pr = 0
    while FL[b, pr] != xr:
        pr += 1
    if pr % 2 == 1:
        lo, hi = 1, flen - 1
        while lo < hi:
            FL[b, lo], FL[b, hi] = FL[b, hi], FL[b, lo]
            lo += 1
            hi -= 1
        return flen - pr
    return pr


@njit
def _set_match(G, V, FL, FF, meta, STK, u, v):
    n = meta[_N]
    top = 1
    STK[0, 0] = u
    STK[1, 0] = v
    while top > 0:
        top -= 1
        a = STK[0, top]
        c = STK[1, top]
        V[_MATCH, a] = G[1, a, c]
        if a > n:
            xr = FF[a, G[0, a, c]]
            pr = _get_pr(V, FL, a, xr)
            for i in range(pr):
                STK[0, top] = FL[a, i]
                STK[1, top] = FL[a, i ^ 1]
                top += 1
            STK[0, top] = xr
            STK[1, top] = c
            top += 1
            flen = V[_FLEN, a]
            tmp = FL[a, :flen].copy()
            for i in range(flen):
                FL[a, i] = tmp[(i + pr) % flen]


@njit
def _augment(G, V, FL, FF, meta, STK, u, v):
    while True:
        xnv = V[_ST, V[_MATCH, u]]
        _set_match(G, V, FL, FF, meta, STK, u, v)
        if xnv == 0:
            return
        _set_match(G, V, FL, FF, meta, STK, xnv, V[_ST, V[_PA, xnv]])
        u = V[_ST, V[_PA, xnv]]
        v = xnv


@njit
def _get_lca(V, meta, u, v):
    meta[_STAMP] += 1
    t = meta[_STAMP]
    while u != 0 or v != 0:
        if u != 0:
            if V[_VIS, u] == t:
                return u
            V[_VIS, u] = t
            u = V[_ST, V[_MATCH, u]]
            if u != 0:
                u = V[_ST, V[_PA, u]]
        u, v = v, u
    return 0


@njit
def _add_blossom(G, V, FL, FF, meta, Q, STK, u, lca, v):
    n = meta[_N]
    b = n + 1
    while b <= meta[_NX] and V[_ST, b] != 0:
        b += 1
    if b > meta[_NX]:
        meta[_NX] += 1
    V[_LAB, b] = 0
    V[_S, b] = 0
    V[_MATCH, b] = V[_MATCH, lca]
    FL[b, 0] = lca
    flen = 1
    x = u
    while x != lca:
        FL[b, flen] = x
        y = V[_ST, V[_MATCH, x]]
        FL[b, flen + 1] = y
        flen += 2
        _q_push(V, FL, meta, Q, STK, y)
        x = V[_ST, V[_PA, y]]
    lo, hi = 1, flen - 1
    while lo < hi:
        FL[b, lo], FL[b, hi] = FL[b, hi], FL[b, lo]
        lo += 1
        hi -= 1
    x = v
    while x != lca:
        FL[b, flen] = x
        y = V[_ST, V[_MATCH, x]]
        FL[b, flen + 1] = y
        flen += 2
        _q_push(V, FL, meta, Q, STK, y)
        x = V[_ST, V[_PA, y]]
    V[_FLEN, b] = flen
    _set_st(V, FL, meta, STK, b, b)
    nx = meta[_NX]
    for x in range(1, nx + 1):
        G[2, b, x] = 0
        G[2, x, b] = 0
    for x in range(1, n + 1):
        FF[b, x] = 0
    for i in range(flen):
        xs = FL[b, i]
        for x in range(1, nx + 1):
            if G[2, b, x] == 0 or _dist(G, V, xs, x) < _dist(G, V, b, x):
                G[0, b, x] = G[0, xs, x]
                G[1, b, x] = G[1, xs, x]
                G[2, b, x] = G[2, xs, x]
                G[0, x, b] = G[0, x, xs]
                G[1, x, b] = G[1, x, xs]
                G[2, x, b] = G[2, x, xs]
        for x in range(1, n + 1):
            if FF[xs, x] != 0:
                FF[b, x] = xs
    _set_slack(G, V, meta, b)


@njit
def _expand_blossom(G, V, FL, FF, meta, Q, STK, b):
    flen = V[_FLEN, b]
    for i in range(flen):
        _set_st(V, FL, meta, STK, FL[b, i], FL[b, i])
    xr = FF[b, G[0, b, V[_PA, b]]]
    pr = _get_pr(V, FL, b, xr)
    for i in range(0, pr, 2):
        xs = FL[b, i]
        xns = FL[b, i + 1]
        V[_PA, xs] = G[0, xns, xs]
        V[_S, xs] = 1
        V[_S, xns] = 0
        V[_SLACK, xs] = 0
        _set_slack(G, V, meta, xns)
        _q_push(V, FL, meta, Q, STK, xns)
    V[_S, xr] = 1
    V[_PA, xr] = V[_PA, b]
    for i in range(pr + 1, flen):
        xs = FL[b, i]
        V[_S, xs] = -1
        _set_slack(G, V, meta, xs)
    V[_ST, b] = 0


@njit
def _on_found_edge(G, V, FL, FF, meta, Q, STK, eu, ev):
    u = V[_ST, eu]
    v = V[_ST, ev]
    if V[_S, v] == -1:
        V[_PA, v] = eu
        V[_S, v] = 1
        nu = V[_ST, V[_MATCH, v]]
        V[_SLACK, v] = 0
        V[_SLACK, nu] = 0
        V[_S, nu] = 0
        _q_push(V, FL, meta, Q, STK, nu)
    elif V[_S, v] == 0:
        lca = _get_lca(V, meta, u, v)
        if lca == 0:
            _augment(G, V, FL, FF, meta, STK, u, v)
            _augment(G, V, FL, FF, meta, STK, v, u)
            return True
        _add_blossom(G, V, FL, FF, meta, Q, STK, u, lca, v)
    return False


@njit
def _stage(G, V, FL, FF, meta, Q, STK):
    """One augmentation stage; False when no improving path remains."""
    n = meta[_N]
    nx = meta[_NX]
    for x in range(1, nx + 1):
        V[_S, x] = -1
        V[_SLACK, x] = 0
    meta[_HEAD] = 0
    meta[_TAIL] = 0
    for x in range(1, nx + 1):
        if V[_ST, x] == x and V[_MATCH, x] == 0:
            V[_PA, x] = 0
            V[_S, x] = 0
            _q_push(V, FL, meta, Q, STK, x)
    if meta[_TAIL] == 0:
        return False
    while True:
        while meta[_HEAD] < meta[_TAIL]:
            u = Q[meta[_HEAD]]
            meta[_HEAD] += 1
            if V[_S, V[_ST, u]] == 1:
                continue
            for v in range(1, n + 1):
                if G[2, u, v] > 0 and V[_ST, u] != V[_ST, v]:
                    if _dist(G, V, u, v) == 0:
                        if _on_found_edge(G, V, FL, FF, meta, Q, STK, G[0, u, v], G[1, u, v]):
                            return True
                    else:
                        _update_slack(G, V, u, V[_ST, v])
        nx = meta[_NX]
        d = _INF
        for b in range(n + 1, nx + 1):
            if V[_ST, b] == b and V[_S, b] == 1:
                d = min(d, V[_LAB, b] // 2)
        for x in range(1, nx + 1):
            if V[_ST, x] == x and V[_SLACK, x] != 0:
                if V[_S, x] == -1:
                    d = min(d, _dist(G, V, V[_SLACK, x], x))
                elif V[_S, x] == 0:
                    d = min(d, _dist(G, V, V[_SLACK, x], x) // 2)
        for u in range(1, n + 1):
            su = V[_S, V[_ST, u]]
            if su == 0:
                if V[_LAB, u] <= d:
                    return False
                V[_LAB, u] -= d
            elif su == 1:
                V[_LAB, u] += d
        for b in range(n + 1, nx + 1):
            if V[_ST, b] == b:
                if V[_S, b] == 0:
                    V[_LAB, b] += d * 2
                elif V[_S, b] == 1:
                    V[_LAB, b] -= d * 2
        meta[_HEAD] = 0
        meta[_TAIL] = 0
        for x in range(1, nx + 1):
            sx = V[_SLACK, x]
            if V[_ST, x] == x and sx != 0 and V[_ST, sx] != x and _dist(G, V, sx, x) == 0:
                if _on_found_edge(G, V, FL, FF, meta, Q, STK, G[0, sx, x], G[1, sx, x]):
                    return True
        for b in range(n + 1, nx + 1):
            if V[_ST, b] == b and V[_S, b] == 1 and V[_LAB, b] == 0:
                _expand_blossom(G, V, FL, FF, meta, Q, STK, b)


@njit
def _max_weight_matching(W):
    """Maximum-weight matching for positive integer weights ``W`` (0 = no edge)."""
    n = W.shape[0]
    size = 2 * n + 1
    G = np.zeros((3, size, size), dtype=np.int64)
    for a in range(size):
        for c in range(size):
            G[0, a, c] = a
            G[1, a, c] = c
    wmax = 0
    for a in range(1, n + 1):
        for c in range(1, n + 1):
            if a != c:
                G[2, a, c] = W[a - 1, c - 1]
                wmax = max(wmax, W[a - 1, c - 1])
    V = np.zeros((8, size), dtype=np.int64)
    FL = np.zeros((size, n + 2), dtype=np.int64)
    FF = np.zeros((size, n + 1), dtype=np.int64)
    Q = np.zeros(size * size + 4, dtype=np.int64)
    STK = np.zeros((2, size * size + 4), dtype=np.int64)
    meta = np.zeros(5, dtype=np.int64)
    meta[_N] = n
    meta[_NX] = n
    for a in range(n + 1):
        V[_ST, a] = a
    for a in range(1, n + 1):
        FF[a, a] = a
        V[_LAB, a] = wmax
    while _stage(G, V, FL, FF, meta, Q, STK):
        pass
    mate = np.full(n, -1, dtype=np.int64)
    for a in range(1, n + 1):
        if V[_MATCH, a] != 0:
            mate[a - 1] = V[_MATCH, a] - 1
    return mate


@njit
def _mwpm_kernel(w):
    m = w.shape[0]
    wmax = 0
    for a in range(m):
        for c in range(m):
            if a != c and w[a, c] > wmax:
                wmax = w[a, c]
    shift = (m // 2) * wmax + 1
    W = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        for c in range(m):
            if a != c:
                W[a, c] = shift - w[a, c]
    return _max_weight_matching(W)
