"""Hot loops: induced-pattern search and exhaustive subset scans.

Every kernel exists twice. The loop-style version is compiled with numba
``@njit`` when numba is importable and ``PROXENUM_DISABLE_NUMBA`` is unset;
otherwise the vectorised numpy / plain-int fallback is used. Both paths
share the pattern lookup tables and must agree bit for bit (see
``tests/test_kernels.py`` and ``benchmarks/bench_kernels.py``).
"""

from __future__ import annotations

import itertools
import os

import numpy as np

_DISABLED = os.environ.get("PROXENUM_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:  # pragma: no cover - exercised through the env flag
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


BACKEND = "numba" if HAS_NUMBA else "numpy"

# Pair order inside a sorted k-tuple (a_0 < ... < a_{k-1}); bit i of a code
# is the adjacency of PAIRS[k][i].
PAIRS = {k: tuple(itertools.combinations(range(k), 2)) for k in (3, 4, 5)}

PATTERN_ORDER = ("P3", "K2+K1", "P4", "C4", "2K2", "C5")
PATTERN_SIZE = {"P3": 3, "K2+K1": 3, "P4": 4, "C4": 4, "2K2": 4, "C5": 5}


def _classify(k: int, code: int) -> str | None:
    edges = [PAIRS[k][i] for i in range(len(PAIRS[k])) if code >> i & 1]
    deg = [0] * k
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    ds = sorted(deg)
    m = len(edges)
    if k == 3:
        if m == 2:
            return "P3"
        if m == 1:
            return "K2+K1"
    elif k == 4:
        if m == 3 and ds == [1, 1, 2, 2]:
            return "P4"
        if m == 4 and ds == [2, 2, 2, 2]:
            return "C4"
        if m == 2 and ds == [1, 1, 1, 1]:
            return "2K2"
    elif k == 5 and m == 5 and ds == [2] * 5:
        return "C5"
    return None


_CODE_KIND = {k: [_classify(k, c) for c in range(1 << len(PAIRS[k]))] for k in (3, 4, 5)}


def pattern_tables(patterns) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Boolean lookup tables (k=3,4,5) marking codes isomorphic to any pattern."""
    patterns = set(patterns)
    unknown = patterns - set(PATTERN_ORDER)
    if unknown:
        raise ValueError(f"unknown pattern(s): {sorted(unknown)}")
    out = []
    for k in (3, 4, 5):
        out.append(np.array([kind in patterns for kind in _CODE_KIND[k]], dtype=np.bool_))
    return out[0], out[1], out[2]


def code_kind(k: int, code: int) -> str | None:
    return _CODE_KIND[k][code]


# ---------------------------------------------------------------------------
# first induced occurrence
# ---------------------------------------------------------------------------


@njit(cache=True)
def _bit(rows, a, b):
    return (rows[a] >> np.uint64(b)) & np.uint64(1)


@njit(cache=True)
def _first_match_nb(rows, n, t3, t4, t5):
    """Smallest (lexicographic) sorted vertex tuple whose induced code hits a table."""
    res = np.full(5, -1, dtype=np.int64)
    if t3.any():
        for a in range(n):
            for b in range(a + 1, n):
                ab = _bit(rows, a, b)
                for c in range(b + 1, n):
                    code = ab | (_bit(rows, a, c) << np.uint64(1)) | (_bit(rows, b, c) << np.uint64(2))
                    if t3[code]:
                        res[0] = a
                        res[1] = b
                        res[2] = c
                        return res
    if t4.any():
        for a in range(n):
            for b in range(a + 1, n):
                ab = _bit(rows, a, b)
                for c in range(b + 1, n):
                    abc = ab | (_bit(rows, a, c) << np.uint64(1)) | (_bit(rows, b, c) << np.uint64(3))
                    for d in range(c + 1, n):
                        code = (
                            abc
                            | (_bit(rows, a, d) << np.uint64(2))
                            | (_bit(rows, b, d) << np.uint64(4))
                            | (_bit(rows, c, d) << np.uint64(5))
                        )
                        if t4[code]:
                            res[0] = a
                            res[1] = b
                            res[2] = c
                            res[3] = d
                            return res
    if t5.any():
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    for d in range(c + 1, n):
                        for e in range(d + 1, n):
                            code = (
                                _bit(rows, a, b)
                                | (_bit(rows, a, c) << np.uint64(1))
                                | (_bit(rows, a, d) << np.uint64(2))
                                | (_bit(rows, a, e) << np.uint64(3))
                                | (_bit(rows, b, c) << np.uint64(4))
                                | (_bit(rows, b, d) << np.uint64(5))
                                | (_bit(rows, b, e) << np.uint64(6))
                                | (_bit(rows, c, d) << np.uint64(7))
                                | (_bit(rows, c, e) << np.uint64(8))
                                | (_bit(rows, d, e) << np.uint64(9))
                            )
                            if t5[code]:
                                res[0] = a
                                res[1] = b
                                res[2] = c
                                res[3] = d
                                res[4] = e
                                return res
    return res


def _first_match_py(rows: tuple[int, ...], n: int, t3, t4, t5) -> tuple[int, ...] | None:
    for k, table in ((3, t3), (4, t4), (5, t5)):
        if not table.any():
            continue
        hits = {int(c) for c in np.flatnonzero(table)}
        pairs = PAIRS[k]
        for combo in itertools.combinations(range(n), k):
            code = 0
            for i, (p, q) in enumerate(pairs):
                if rows[combo[p]] >> combo[q] & 1:
                    code |= 1 << i
            if code in hits:
                return combo
    return None


def first_match(rows: tuple[int, ...], n: int, tables) -> tuple[int, ...] | None:
    """Sorted vertex tuple of the first induced occurrence, or None."""
    t3, t4, t5 = tables
    if n < 3:
        return None
    if HAS_NUMBA:
        res = _first_match_nb(np.array(rows, dtype=np.uint64), n, t3, t4, t5)
        if res[0] < 0:
            return None
        return tuple(int(v) for v in res if v >= 0)
    return _first_match_py(rows, n, t3, t4, t5)


# ---------------------------------------------------------------------------
# exhaustive subset scans (oracle)
# ---------------------------------------------------------------------------


def _combo_pair_index(n: int, k: int, pair_index: np.ndarray) -> np.ndarray:
    """For every sorted k-subset, the element index of each of its pairs (-1: absent)."""
    combos = list(itertools.combinations(range(n), k))
    out = np.full((len(combos), len(PAIRS[k])), -1, dtype=np.int64)
    for r, combo in enumerate(combos):
        for i, (p, q) in enumerate(PAIRS[k]):
            out[r, i] = pair_index[combo[p], combo[q]]
    return out


@njit(cache=True)
def _scan_nb(base_rows, eu, ev, n, t3, t4, t5):
    """Membership of (base edges + subset of eu/ev) for every subset mask."""
    m = eu.shape[0]
    total = 1 << m
    ok = np.empty(total, dtype=np.bool_)
    rows = np.empty(n, dtype=np.uint64)
    for mask in range(total):
        for v in range(n):
            rows[v] = base_rows[v]
        for i in range(m):
            if (mask >> i) & 1:
                rows[eu[i]] |= np.uint64(1) << np.uint64(ev[i])
                rows[ev[i]] |= np.uint64(1) << np.uint64(eu[i])
        ok[mask] = _first_match_nb(rows, n, t3, t4, t5)[0] < 0
    return ok


def _scan_np(base_edges, eu, ev, n, t3, t4, t5) -> np.ndarray:
    m = len(eu)
    masks = np.arange(1 << m, dtype=np.int64)
    pair_index = np.full((n, n), -1, dtype=np.int64)
    for i, (u, v) in enumerate(zip(eu, ev)):
        pair_index[u, v] = pair_index[v, u] = i
    fixed = np.zeros((n, n), dtype=bool)
    for u, v in base_edges:
        fixed[u, v] = fixed[v, u] = True
    ok = np.ones(1 << m, dtype=bool)
    for k, table in ((3, t3), (4, t4), (5, t5)):
        if n < k or not table.any():
            continue
        idx = _combo_pair_index(n, k, pair_index)
        for r, combo in enumerate(itertools.combinations(range(n), k)):
            code = np.zeros(1 << m, dtype=np.int64)
            for i, (p, q) in enumerate(PAIRS[k]):
                j = idx[r, i]
                if fixed[combo[p], combo[q]]:
                    code |= 1 << i
                elif j >= 0:
                    code |= ((masks >> j) & 1) << i
            ok &= ~table[code]
    return ok


def scan_edge_subsets(n: int, base_edges, free_edges, tables) -> np.ndarray:
    """ok[mask] = (V, base ∪ {free[i] : bit i of mask}) avoids every tabled pattern."""
    t3, t4, t5 = tables
    eu = np.array([e[0] for e in free_edges], dtype=np.int64)
    ev = np.array([e[1] for e in free_edges], dtype=np.int64)
    if HAS_NUMBA:
        base = [0] * n
        for u, v in base_edges:
            base[u] |= 1 << v
            base[v] |= 1 << u
        return _scan_nb(np.array(base, dtype=np.uint64), eu, ev, n, t3, t4, t5)
    return _scan_np(list(base_edges), eu, ev, n, t3, t4, t5)


@njit(cache=True)
def _vertex_scan_nb(rows, n, t3, t4, t5):
    total = 1 << n
    ok = np.empty(total, dtype=np.bool_)
    sub = np.empty(n, dtype=np.uint64)
    for mask in range(total):
        keep = np.uint64(mask)
        for v in range(n):
            if (mask >> v) & 1:
                sub[v] = rows[v] & keep
            else:
                sub[v] = np.uint64(0)
        # vertices outside the mask are isolated; patterns used here all
        # contain an edge at every vertex except K2+K1, handled by caller
        ok[mask] = _first_match_nb(sub, n, t3, t4, t5)[0] < 0
    return ok


def _vertex_scan_np(rows, n, t3, t4, t5) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for k, table in ((3, t3), (4, t4), (5, t5)):
        if n < k or not table.any():
            continue
        for combo in itertools.combinations(range(n), k):
            code = 0
            for i, (p, q) in enumerate(PAIRS[k]):
                if rows[combo[p]] >> combo[q] & 1:
                    code |= 1 << i
            if table[code]:
                tmask = sum(1 << v for v in combo)
                ok &= (masks & tmask) != tmask
    return ok


def scan_vertex_subsets(rows: tuple[int, ...], n: int, tables) -> np.ndarray:
    """ok[mask] = G[mask] avoids every tabled pattern."""
    t3, t4, t5 = tables
    if HAS_NUMBA and not (t3[1] or t3[2] or t3[4]):
        # the isolate trick is only sound when no pattern has an isolated vertex
        return _vertex_scan_nb(np.array(rows, dtype=np.uint64), n, t3, t4, t5)
    return _vertex_scan_np(rows, n, t3, t4, t5)


@njit(cache=True)
def _maximal_nb(ok):
    total = ok.shape[0]
    m = 0
    while (1 << m) < total:
        m += 1
    up = ok.copy()
    for e in range(m):
        bit = 1 << e
        for mask in range(total):
            if not (mask & bit) and up[mask | bit]:
                up[mask] = True
    out = np.empty(total, dtype=np.bool_)
    for mask in range(total):
        if not ok[mask]:
            out[mask] = False
            continue
        good = True
        for e in range(m):
            bit = 1 << e
            if not (mask & bit) and up[mask | bit]:
                good = False
                break
        out[mask] = good
    return out


def _maximal_np(ok: np.ndarray) -> np.ndarray:
    total = ok.shape[0]
    m = total.bit_length() - 1
    up = ok.copy()
    for e in range(m):
        view = up.reshape(-1, 2, 1 << e)
        view[:, 0, :] |= view[:, 1, :]
    strict = np.zeros(total, dtype=bool)
    for e in range(m):
        sv = strict.reshape(-1, 2, 1 << e)
        uv = up.reshape(-1, 2, 1 << e)
        sv[:, 0, :] |= uv[:, 1, :]
    return ok & ~strict


def maximal_masks(ok: np.ndarray) -> np.ndarray:
    """Masks that are in the family and have no strict superset in it."""
    if HAS_NUMBA:
        return _maximal_nb(ok)
    return _maximal_np(ok)


def minimal_masks(ok: np.ndarray) -> np.ndarray:
    """Masks in the family with no strict subset in it (complement trick)."""
    total = ok.shape[0]
    flipped = ok[::-1].copy()  # mask -> (total-1) ^ mask
    return maximal_masks(flipped)[::-1].copy()
