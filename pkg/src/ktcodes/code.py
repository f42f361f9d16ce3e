"""Codes in S_n: finite sets of at least two permutations of one degree."""

from __future__ import annotations

import itertools
from pathlib import Path
from typing import Iterable, Iterator

from .perm import DegreeMismatch, Permutation, distance, order_signature

__all__ = [
    "Code",
    "CodeFormatError",
    "format_code",
    "min_distance",
    "naive_min_distance",
    "parse_code",
    "read_code",
    "write_code",
]


class CodeFormatError(ValueError):
    pass


class Code:
    """
    An immutable set of distinct permutations of a common degree.

    Words are kept in lexicographic order so iteration, serialization and
    hashing are deterministic.  Fewer than two words is rejected.
    """

    __slots__ = ("degree", "words", "_min_distance", "_signatures")

    def __init__(
        self,
        words: Iterable[Permutation],
        degree: int | None = None,
        *,
        _trusted_sorted: bool = False,
    ) -> None:
        if _trusted_sorted:
            ws = tuple(words)
        else:
            ws = tuple(sorted(set(words)))
        if degree is None and ws:
            degree = ws[0].degree
        for w in ws:
            if w.degree != degree:
                raise DegreeMismatch(f"codeword {w!r} has degree {w.degree}, expected {degree}")
        if len(ws) < 2:
            raise ValueError(f"a code needs at least 2 distinct codewords, got {len(ws)}")
        self.degree: int = degree  # type: ignore[assignment]
        self.words: tuple[Permutation, ...] = ws
        self._min_distance: int | None = None
        self._signatures: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.words)

    def __contains__(self, p: object) -> bool:
        return p in set(self.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.degree == other.degree and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.degree, self.words))

    def __repr__(self) -> str:
        if len(self.words) <= 6:
            return f"Code(n={self.degree}, {list(self.words)})"
        return f"Code(n={self.degree}, size={len(self.words)})"

    @property
    def signatures(self) -> tuple[int, ...]:
        if self._signatures is None:
            self._signatures = tuple(order_signature(w) for w in self.words)
        return self._signatures

    def min_distance(self) -> int:
        if self._min_distance is None:
            self._min_distance = min_distance(self)
        return self._min_distance

    @property
    def cached_min_distance(self) -> int | None:
        return self._min_distance


def min_distance(code: Code, floor: int = 1) -> int:
    """
    Exact minimum pairwise distance.

    The scan stops at the first pair whose distance is ``<= floor``; that
    distance is returned.  With the default ``floor=1`` the result is always
    exact; a larger floor answers "is the minimum above ``floor``?" early.
    """
    sigs = code.signatures
    best = None
    for k, a in enumerate(sigs):
        for b in sigs[k + 1:]:
            d = (a ^ b).bit_count()
            if best is None or d < best:
                best = d
                if d <= floor:
                    return d
    assert best is not None
    return best


def closest_pair(code: Code) -> tuple[Permutation, Permutation, int]:
    sigs = code.signatures
    best = None
    for (i, a), (j, b) in itertools.combinations(enumerate(sigs), 2):
        d = (a ^ b).bit_count()
        if best is None or d < best[2]:
            best = (i, j, d)
            if d == 1:
                break
    assert best is not None
    return code.words[best[0]], code.words[best[1]], best[2]


def naive_min_distance(code: Code) -> int:
    """Double loop over :func:`~ktcodes.perm.distance`; reference for tests."""
    return min(distance(a, b) for a, b in itertools.combinations(code.words, 2))


def parse_code(text: str) -> Code:
    """
    Parse the code file format: a header ``n=<degree>``, then one permutation
    per line.  Blank lines and lines starting with ``#`` are ignored.
    """
    degree = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            key, sep, val = line.partition("=")
            if not sep or key.strip() != "n":
                raise CodeFormatError(f"line {lineno}: expected header 'n=<degree>', got {line!r}")
            try:
                degree = int(val)
            except ValueError:
                raise CodeFormatError(f"line {lineno}: bad degree {val!r}") from None
            continue
        try:
            p = Permutation.parse(line)
        except ValueError as exc:
            raise CodeFormatError(f"line {lineno}: {exc}") from None
        if p.degree != degree:
            raise CodeFormatError(f"line {lineno}: degree {p.degree} but header says n={degree}")
        words.append(p)
    if degree is None:
        raise CodeFormatError("missing 'n=<degree>' header")
    if len(set(words)) != len(words):
        raise CodeFormatError("duplicate codewords")
    try:
        return Code(words, degree)
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from None


def format_code(code: Code, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n={code.degree}")
    lines.extend(str(w) for w in code.words)
    return "\n".join(lines) + "\n"


def read_code(path: str | Path) -> Code:
    return parse_code(Path(path).read_text())


def write_code(code: Code, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_code(code, comment))
