"""Exact subset arithmetic over [n] = {1, ..., n}.

Every vector indexed by k-subsets in this package uses colexicographic
order: subsets are compared by their largest differing element. The rank
of a sorted subset ``s_1 < ... < s_k`` is ``sum_i C(s_i - 1, i)``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

KSubset = tuple[int, ...]


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact Python int; 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValidationError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def check_subset(s: Iterable[int], n: int, k: int | None = None) -> KSubset:
    """Validate and return ``s`` as a sorted tuple."""
    t = tuple(int(x) for x in s)
    if any(a >= b for a, b in zip(t, t[1:])):
        raise ValidationError(f"subset {t} is not strictly increasing")
    if t and (t[0] < 1 or t[-1] > n):
        raise ValidationError(f"subset {t} has elements outside [1, {n}]")
    if k is not None and len(t) != k:
        raise ValidationError(f"subset {t} has size {len(t)}, expected {k}")
    return t


def rank_colex(s: Sequence[int], n: int | None = None) -> int:
    if n is not None:
        s = check_subset(s, n)
    else:
        s = check_subset(s, max(s) if s else 0)
    return sum(comb(x - 1, i) for i, x in enumerate(s, start=1))


def unrank_colex(n: int, k: int, idx: int) -> KSubset:
    total = binomial(n, k)
    if not 0 <= idx < total:
        raise ValidationError(f"rank {idx} out of range [0, {total}) for n={n}, k={k}")
    out = []
    x = n
    for i in range(k, 0, -1):
        # largest x with C(x - 1, i) <= idx
        while comb(x - 1, i) > idx:
            x -= 1
        out.append(x)
        idx -= comb(x - 1, i)
        x -= 1
    return tuple(reversed(out))


def enumerate_subsets(n: int, k: int) -> list[KSubset]:
    """All k-subsets of [n] in colex order."""
    if not 0 <= k <= n:
        raise ValidationError(f"need 0 <= k <= n, got n={n}, k={k}")
    return list(_colex(n, k))


@lru_cache(maxsize=256)
def _colex(n: int, k: int) -> tuple[KSubset, ...]:
    # colex(n, k) = colex(n-1, k) followed by colex(n-1, k-1) with n appended
    if k == 0:
        return ((),)
    if k > n:
        return ()
    return _colex(n - 1, k) + tuple(s + (n,) for s in _colex(n - 1, k - 1))


def symmetric_difference(a: Sequence[int], b: Sequence[int]) -> KSubset:
    return tuple(sorted(set(a) ^ set(b)))


@lru_cache(maxsize=64)
def subset_array(n: int, k: int) -> np.ndarray:
    """``(C(n,k), k)`` int array of the colex-ordered subsets (1-based)."""
    subs = _colex(n, k)
    arr = np.array(subs, dtype=np.int64).reshape(len(subs), k)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=16)
def _binom_table(n: int) -> np.ndarray:
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    for a in range(n + 1):
        for b in range(a + 1):
            t[a, b] = comb(a, b)
    return t


def rank_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Vectorized colex rank of each row of a sorted 1-based subset array."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise ValidationError("rank_rows expects a 2-d array")
    if rows.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    table = _binom_table(n)
    pos = np.arange(1, rows.shape[1] + 1)
    return table[rows - 1, pos].sum(axis=1)
