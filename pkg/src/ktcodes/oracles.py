"""
Slow reference computations, written straight from the definitions and kept
independent of the fast paths they are used to check.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .perm import Permutation, inversion_set


def pairwise_distance(a: Permutation, b: Permutation) -> int:
    """Count ordered value pairs (i, j) with i before j in ``a`` and after j in ``b``."""
    n = a.degree
    pa = [0] * (n + 1)
    pb = [0] * (n + 1)
    for k, v in enumerate(a.images):
        pa[v] = k
    for k, v in enumerate(b.images):
        pb[v] = k
    return sum(
        1
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j and pa[i] < pa[j] and pb[i] > pb[j]
    )


def symdiff_distance(a: Permutation, b: Permutation) -> int:
    """``|I_a u I_b| - |I_a n I_b|`` over explicit inversion sets."""
    ia = inversion_set(a).pairs
    ib = inversion_set(b).pairs
    return len(ia | ib) - len(ia & ib)


def pair_count_weight(a: Permutation) -> int:
    im = a.images
    return sum(1 for x, y in itertools.combinations(im, 2) if x > y)


def weight_histogram(n: int) -> list[int]:
    """Number of permutations of [n] with k inversions, by full enumeration."""
    counts = Counter(
        pair_count_weight(Permutation(p)) for p in itertools.permutations(range(1, n + 1))
    )
    return [counts.get(k, 0) for k in range(n * (n - 1) // 2 + 1)]


def brute_ball_size(n: int, r: int) -> int:
    return sum(1 for p in itertools.permutations(range(1, n + 1))
               if pair_count_weight(Permutation(p)) <= r)
