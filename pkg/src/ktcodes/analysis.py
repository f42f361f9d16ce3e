"""
Structural checks on codes: t-balancedness, fiber balance, the unique
codeword pattern of balanced codes, and cosets of the alternating group.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

from .code import Code, closest_pair, min_distance
from .perm import Permutation, identity, parity
from .puncture import PunctureSet, fiber, puncture_words

__all__ = [
    "BalanceVerdict",
    "ConsistencyError",
    "StructureReport",
    "check_balanced",
    "check_fiber_balance",
    "check_unique_codeword_structure",
    "is_coset_of_alternating",
    "pattern_positions",
    "unique_codeword",
]

# check_unique_codeword_structure enumerates n!/t! patterns per s
STRUCTURE_GUARD = 8


class ConsistencyError(RuntimeError):
    """A verified property contradicts a theorem the library relies on."""


def _pairs(t: int) -> int:
    return t * (t - 1) // 2


@dataclass
class BalanceVerdict:
    t: int
    is_balanced: bool
    cardinality_ok: bool
    distance_ok: bool
    min_distance: int | None = None
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "is_balanced": self.is_balanced,
            "cardinality_ok": self.cardinality_ok,
            "distance_ok": self.distance_ok,
            "min_distance": self.min_distance,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, data: dict) -> BalanceVerdict:
        return cls(data["t"], data["is_balanced"], data["cardinality_ok"], data["distance_ok"],
                   data.get("min_distance"), data.get("witness"))


def check_balanced(c: Code, t: int) -> BalanceVerdict:
    """
    Test whether ``c`` has minimum distance above C(t,2) and exactly n!/t!
    words.  A balanced code must have minimum distance exactly C(t,2)+1; a
    different value raises :class:`ConsistencyError`.
    """
    n = c.degree
    if not 1 <= t <= n:
        raise ValueError(f"t={t} outside 1..{n}")
    expected = math.factorial(n) // math.factorial(t)
    cardinality_ok = len(c) == expected
    threshold = _pairs(t)
    md = min_distance(c, floor=threshold)
    distance_ok = md > threshold
    witness = None
    if not distance_ok:
        a, b, dab = closest_pair(c)
        witness = {"pair": [str(a), str(b)], "distance": dab, "required": threshold + 1}
        md = dab
    elif not cardinality_ok:
        witness = {"size": len(c), "required": expected}
    verdict = BalanceVerdict(t, cardinality_ok and distance_ok, cardinality_ok, distance_ok, md, witness)
    if verdict.is_balanced and md != threshold + 1:
        raise ConsistencyError(
            f"{t}-balanced code with minimum distance {md}, expected exactly {threshold + 1}"
        )
    if distance_ok:
        c._min_distance = md
    return verdict


@dataclass
class StructureReport:
    """Outcome of a structural check; ``violation`` describes the first failure."""

    passed: bool
    checked: int = 0
    violation: dict | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "violation": self.violation,
            "notes": list(self.notes),
        }


def check_fiber_balance(c: Code, t: int, recursive: bool = True) -> StructureReport:
    """
    Every fiber over the first and last position holds |C|/n words, keeps
    its size when that position is punctured away, and punctures to a
    t-balanced code of degree n-1.  With ``recursive`` the same is checked
    down to degree t.
    """
    report = StructureReport(passed=True)
    seen: set[tuple[Permutation, ...]] = set()
    _fiber_balance(c.words, c.degree, t, recursive, report, seen)
    return report


def _fiber_balance(words, n, t, recursive, report, seen) -> None:
    if len(words) >= 2:
        verdict = check_balanced(Code(words, n, _trusted_sorted=True), t)
    else:
        # a single word: the distance condition is vacuous
        size_ok = len(words) == math.factorial(n) // math.factorial(t)
        verdict = BalanceVerdict(t, size_ok, size_ok, True, None, None if size_ok else {"size": len(words)})
    report.checked += 1
    if not verdict.is_balanced:
        report.passed = False
        report.violation = {"degree": n, "reason": "not t-balanced", "verdict": verdict.to_dict()}
        return
    if n <= t or n < 2:
        return
    expected = len(words) // n
    for i in (1, n):
        drop = PunctureSet.without(n, i)
        for j in range(1, n + 1):
            f = fiber(words, i, j)
            if len(f) * n != len(words):
                report.passed = False
                report.violation = {"degree": n, "reason": "fiber size", "position": i, "value": j,
                                    "size": len(f), "expected": len(words) / n}
                return
            punctured = puncture_words(f, drop)
            if len(punctured) != len(f):
                report.passed = False
                report.violation = {"degree": n, "reason": "puncturing merged codewords", "position": i,
                                    "value": j, "before": len(f), "after": len(punctured)}
                return
            if punctured in seen:
                continue
            seen.add(punctured)
            if recursive or n - 1 == t or expected < 2:
                _fiber_balance(punctured, n - 1, t, recursive, report, seen)
            else:
                sub = check_balanced(Code(punctured, n - 1, _trusted_sorted=True), t)
                report.checked += 1
                if not sub.is_balanced:
                    report.passed = False
                    report.violation = {"degree": n - 1, "reason": "punctured fiber not t-balanced",
                                        "position": i, "value": j, "verdict": sub.to_dict()}
            if not report.passed:
                return


def pattern_positions(n: int, s: int, t: int) -> tuple[int, ...]:
    """The positions ``{1..s} u {t+s+1..n}`` pinned by an (n-t)-pattern."""
    if not 0 <= s <= n - t:
        raise ValueError(f"s={s} outside 0..{n - t}")
    return tuple(range(1, s + 1)) + tuple(range(t + s + 1, n + 1))


def unique_codeword(c: Code, values: tuple[int, ...], s: int, t: int) -> list[Permutation]:
    """
    Codewords whose entries on :func:`pattern_positions` read ``values`` in
    order.  A t-balanced code has exactly one.
    """
    pos = pattern_positions(c.degree, s, t)
    if len(values) != len(pos):
        raise ValueError(f"need {len(pos)} values, got {len(values)}")
    return [w for w in c.words if tuple(w.images[p - 1] for p in pos) == tuple(values)]


def check_unique_codeword_structure(c: Code, t: int) -> StructureReport:
    n = c.degree
    if n > STRUCTURE_GUARD:
        raise ValueError(f"structure check limited to n <= {STRUCTURE_GUARD}, got {n}")
    verdict = check_balanced(c, t)
    if not verdict.is_balanced:
        return StructureReport(False, 0, {"reason": "not t-balanced", "verdict": verdict.to_dict()})
    report = StructureReport(passed=True)
    for s in range(0, n - t + 1):
        pos = pattern_positions(n, s, t)
        counts = Counter(tuple(w.images[p - 1] for p in pos) for w in c.words)
        for values in itertools.permutations(range(1, n + 1), n - t):
            report.checked += 1
            k = counts.get(values, 0)
            if k != 1:
                report.passed = False
                report.violation = {"s": s, "positions": list(pos), "values": list(values), "count": k}
                return report
    return report


def is_coset_of_alternating(c: Code) -> Permutation | None:
    """
    A permutation ``g`` with ``c == {g * a : a in A_n}`` if there is one.

    Cosets of A_n are exactly the two parity classes, so it suffices to check
    that every word has the same parity.
    """
    n = c.degree
    half = math.factorial(n) // 2
    if len(c) != half:
        raise ValueError(f"a coset of A_{n} has {half} elements, code has {len(c)}")
    parities = {parity(w) for w in c.words}
    if len(parities) != 1:
        return None
    if parities == {"even"}:
        return identity(n)
    return c.words[0]
