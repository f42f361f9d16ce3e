"""
Permutations of [n] = {1, ..., n} in one-line notation and the Kendall-tau
metric on them.

Values are 1-based everywhere a caller can see them.  The product follows the
left-to-right convention ``(a * b)(i) = b(a(i))``.

>>> s = Permutation.parse("6 1 3 5 2 4")
>>> weight(s), parity(s)
(8, 'even')
>>> distance(Permutation((1, 2, 3, 4)), Permutation((2, 1, 4, 3)))
2
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "ENUMERATION_CAP",
    "DegreeMismatch",
    "EnumerationGuard",
    "InversionSet",
    "Permutation",
    "alternating_group",
    "compose",
    "distance",
    "enumerate_sn",
    "identity",
    "inverse",
    "inversion_set",
    "order_signature",
    "parity",
    "weight",
]

# refuse to stream more than 12! permutations unless asked to
ENUMERATION_CAP = 12


class DegreeMismatch(ValueError):
    """Two permutations (or a permutation and a set) live in different S_n."""


class EnumerationGuard(ValueError):
    """An exhaustive enumeration was requested beyond the desk-scale cap."""


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n, stored as the tuple ``(s(1), ..., s(n))``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a rearrangement of 1..{n}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"[{' '.join(map(str, self.images))}]"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read the space-separated one-line form, e.g. ``"6 1 3 5 2 4"``."""
        tokens = text.replace(",", " ").split()
        if not tokens:
            raise ValueError("empty permutation text")
        try:
            values = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise ValueError(f"non-integer entry in permutation text {text!r}") from None
        n = len(values)
        seen = set()
        for v in values:
            if v < 1 or v > n:
                raise ValueError(f"entry {v} outside 1..{n} in {text!r}")
            if v in seen:
                raise ValueError(f"duplicate entry {v} in {text!r}")
            seen.add(v)
        return cls(values)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def _check_degrees(a: Permutation, b: Permutation) -> None:
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees differ: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a * b``, the permutation ``i -> b(a(i))``."""
    _check_degrees(a, b)
    bi = b.images
    return Permutation(tuple(bi[x - 1] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    out = [0] * a.degree
    for pos, val in enumerate(a.images, start=1):
        out[val - 1] = pos
    return Permutation(tuple(out))


@dataclass(frozen=True)
class InversionSet:
    """Pairs ``(i, j)`` of values with ``i > j`` and ``i`` written before ``j``."""

    degree: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        n = self.degree
        for i, j in self.pairs:
            if not n >= i > j >= 1:
                raise ValueError(f"({i}, {j}) is not an inversion pair in [{n}]")

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def with_first(self, i: int) -> InversionSet:
        """Pairs whose larger entry is ``i``."""
        return InversionSet(self.degree, frozenset(p for p in self.pairs if p[0] == i))

    def with_second(self, i: int) -> InversionSet:
        """Pairs whose smaller entry is ``i``."""
        return InversionSet(self.degree, frozenset(p for p in self.pairs if p[1] == i))

    def touching(self, i: int) -> InversionSet:
        return InversionSet(self.degree, frozenset(p for p in self.pairs if i in p))

    def avoiding(self, i: int) -> InversionSet:
        return InversionSet(self.degree, frozenset(p for p in self.pairs if i not in p))


def inversion_set(a: Permutation) -> InversionSet:
    pos = inverse(a).images
    n = a.degree
    pairs = frozenset(
        (i, j)
        for i in range(2, n + 1)
        for j in range(1, i)
        if pos[i - 1] < pos[j - 1]
    )
    return InversionSet(n, pairs)


def _count_inversions(seq: list[int]) -> int:
    """Merge-sort inversion count of an integer sequence, O(n log n)."""
    n = len(seq)
    if n < 2:
        return 0
    buf = list(seq)
    tmp = [0] * n
    count = 0
    width = 1
    # bottom-up merge sort
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if buf[i] <= buf[j]:
                    tmp[k] = buf[i]
                    i += 1
                else:
                    tmp[k] = buf[j]
                    count += mid - i
                    j += 1
                k += 1
            tmp[k:k + mid - i] = buf[i:mid]
            k += mid - i
            tmp[k:k + hi - j] = buf[j:hi]
        buf, tmp = tmp, buf
        width *= 2
    return count


def weight(a: Permutation) -> int:
    """Number of inversions, i.e. the distance to the identity."""
    return _count_inversions(list(a.images))


def distance(a: Permutation, b: Permutation) -> int:
    """
    Kendall-tau distance: the minimum number of adjacent transpositions
    turning ``a`` into ``b``.

    Relabels ``a`` through the positions of ``b`` and counts inversions of the
    result, so the cost is O(n log n).
    """
    _check_degrees(a, b)
    pos_b = inverse(b).images
    return _count_inversions([pos_b[v - 1] for v in a.images])


def parity(a: Permutation) -> str:
    return "odd" if weight(a) % 2 else "even"


def order_signature(a: Permutation) -> int:
    """
    Bitmask with one bit per value pair ``j < i``, set when ``(i, j)`` is an
    inversion of ``a``.  ``(sig(a) ^ sig(b)).bit_count()`` is the distance.
    """
    pos = inverse(a).images
    n = a.degree
    sig = 0
    bit = 1
    for i in range(2, n + 1):
        pi = pos[i - 1]
        for j in range(1, i):
            if pi < pos[j - 1]:
                sig |= bit
            bit <<= 1
    return sig


def _guard(n: int, override: bool) -> None:
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n > ENUMERATION_CAP and not override:
        raise EnumerationGuard(
            f"enumerating S_{n} ({math.factorial(n)} items) exceeds the cap "
            f"n <= {ENUMERATION_CAP}; pass override=True to proceed"
        )


def enumerate_sn(n: int, override: bool = False) -> Iterator[Permutation]:
    """Every element of S_n once, in lexicographic order of one-line notation."""
    _guard(n, override)
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def alternating_group(n: int, override: bool = False):
    """The even-weight permutations A_n as a :class:`~ktcodes.code.Code`."""
    from .code import Code

    if n < 3:
        raise ValueError(f"A_{n} has fewer than 2 elements and is not a code")
    _guard(n, override)
    return Code(
        (p for p in enumerate_sn(n, override) if weight(p) % 2 == 0),
        _trusted_sorted=True,
    )
