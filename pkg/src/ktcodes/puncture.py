"""
Puncturing: restricting permutations to a subset of positions and reading off
the relative order of the surviving values.

>>> from ktcodes.perm import Permutation
>>> puncture(Permutation.parse("6 1 3 5 2 4"), PunctureSet.parse("3,5,6", 6))
[2 1 3]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .code import Code
from .perm import DegreeMismatch, InversionSet, Permutation, inversion_set

__all__ = [
    "FilteredInversions",
    "PunctureSet",
    "fiber",
    "filtered_inversions",
    "psi",
    "puncture",
    "puncture_code",
    "puncture_words",
]


@dataclass(frozen=True)
class PunctureSet:
    """Positions ``i_1 < ... < i_s`` of [n] kept by a puncturing."""

    degree: int
    kept: tuple[int, ...]

    def __post_init__(self) -> None:
        kept = tuple(sorted(set(self.kept)))
        if len(kept) != len(self.kept):
            raise ValueError(f"repeated position in {list(self.kept)}")
        if not kept:
            raise ValueError("a puncture set must keep at least one position")
        if kept[0] < 1 or kept[-1] > self.degree:
            raise ValueError(f"positions {list(kept)} not inside [1, {self.degree}]")
        object.__setattr__(self, "kept", kept)

    @classmethod
    def parse(cls, text: str, degree: int) -> PunctureSet:
        """Read the comma-separated form, e.g. ``"3,5,6"``."""
        try:
            kept = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError:
            raise ValueError(f"bad puncture set {text!r}") from None
        return cls(degree, kept)

    @classmethod
    def full(cls, n: int) -> PunctureSet:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def without(cls, n: int, i: int) -> PunctureSet:
        """``[n] \\ {i}``."""
        return cls(n, tuple(k for k in range(1, n + 1) if k != i))

    @property
    def size(self) -> int:
        return len(self.kept)

    def __str__(self) -> str:
        return ",".join(map(str, self.kept))


def puncture(a: Permutation, s: PunctureSet) -> Permutation:
    if a.degree != s.degree:
        raise DegreeMismatch(f"permutation degree {a.degree} vs puncture set degree {s.degree}")
    values = [a.images[i - 1] for i in s.kept]
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


def psi(i: int, j: int) -> int:
    """Index shift ``[n] \\ {i} -> [n-1]`` closing the gap left by ``i``."""
    if j == i:
        raise ValueError(f"psi_{i} is undefined at {j}")
    return j if j < i else j - 1


class FilteredInversions(NamedTuple):
    below: InversionSet  # pairs (i, j): i is the larger value
    above: InversionSet  # pairs (j, i): i is the smaller value
    at: InversionSet
    rest: InversionSet


def filtered_inversions(a: Permutation, i: int) -> FilteredInversions:
    if not 1 <= i <= a.degree:
        raise ValueError(f"value {i} outside 1..{a.degree}")
    inv = inversion_set(a)
    return FilteredInversions(inv.with_first(i), inv.with_second(i), inv.touching(i), inv.avoiding(i))


def puncture_words(words: Iterable[Permutation], s: PunctureSet) -> tuple[Permutation, ...]:
    """Sorted, de-duplicated image of ``words`` under ``s``-puncturing."""
    return tuple(sorted({puncture(w, s) for w in words}))


def puncture_code(c: Code, s: PunctureSet) -> Code:
    """
    The punctured code.  Words that coincide after puncturing merge; raises
    if fewer than two survive.
    """
    if c.degree != s.degree:
        raise DegreeMismatch(f"code degree {c.degree} vs puncture set degree {s.degree}")
    return Code(puncture_words(c.words, s), s.size, _trusted_sorted=True)


def fiber(words: Iterable[Permutation], i: int, j: int) -> tuple[Permutation, ...]:
    """
    Codewords with value ``j`` at position ``i``.  Returned as a plain tuple
    since a fiber may hold fewer than two words.
    """
    words = tuple(words)
    n = words[0].degree if words else None
    if n is not None and not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"fiber ({i}, {j}) outside [1, {n}]")
    return tuple(w for w in words if w.images[i - 1] == j)
