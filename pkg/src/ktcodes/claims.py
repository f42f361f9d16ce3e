"""
The reproduction manifest: one desk-scale computational check per
theorem-level property, runnable individually or as a suite.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import oracles
from .analysis import (
    check_balanced,
    check_fiber_balance,
    check_unique_codeword_structure,
    is_coset_of_alternating,
    unique_codeword,
)
from .bounds import averaging_bound, ball_size, cube_vs_ball, gv_guarantee, mahonian
from .code import Code, naive_min_distance
from .perm import (
    Permutation,
    alternating_group,
    compose,
    distance,
    enumerate_sn,
    inversion_set,
    weight,
)
from .puncture import PunctureSet, filtered_inversions, puncture
from .search import (
    SearchBudget,
    classify_2_balanced,
    greedy_gv,
    max_code,
    refute_t_balanced,
    verify_claim2,
    verify_lemma_emo,
)

__all__ = ["CLAIMS", "ClaimResult", "ReproduceReport", "UnknownClaim", "run_claims"]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class UnknownClaim(KeyError):
    pass


class ClaimSkipped(Exception):
    """Raised by a check that ran out of budget before reaching a verdict."""


def random_perm(n: int, rng: random.Random) -> Permutation:
    im = list(range(1, n + 1))
    rng.shuffle(im)
    return Permutation(tuple(im))


def _sn(n: int) -> list[Permutation]:
    return list(enumerate_sn(n))


# -- individual checks -------------------------------------------------------
# each returns a one-line detail string or raises AssertionError / ClaimSkipped


def check_distance_oracles(budget: SearchBudget, rng: random.Random) -> str:
    pairs = 0
    for n in range(1, 6):
        perms = _sn(n)
        for a in perms:
            for b in perms:
                d = distance(a, b)
                assert d == oracles.pairwise_distance(a, b), (a, b)
                assert d == oracles.symdiff_distance(a, b), (a, b)
                pairs += 1
    for _ in range(10_000):
        a, b = random_perm(64, rng), random_perm(64, rng)
        d = distance(a, b)
        assert d == oracles.pairwise_distance(a, b) == oracles.symdiff_distance(a, b), (a, b)
    return f"{pairs} exhaustive pairs (n<=5) and 10000 random pairs at n=64 agree"


def check_right_invariance(budget: SearchBudget, rng: random.Random) -> str:
    for _ in range(10_000):
        n = rng.randint(1, 64)
        s, t, a = (random_perm(n, rng) for _ in range(3))
        assert distance(s, t) == distance(compose(s, a), compose(t, a)), (s, t, a)
    return "10000 random triples, n in 1..64"


def _puncture_laws_one(s: Permutation, t: Permutation) -> None:
    n = s.degree
    for i in range(1, n + 1):
        si = PunctureSet.without(n, i)
        ps = puncture(s, si)
        at = filtered_inversions(s, s(i)).at
        assert weight(ps) == len(inversion_set(s)) - len(at), (s, i)
    if n >= 2:
        j = s(1)
        assert weight(puncture(s, PunctureSet.without(n, 1))) == weight(s) - (j - 1), s
        j = s(n)
        assert weight(puncture(s, PunctureSet.without(n, n))) == weight(s) - (n - j), s
        for i in (1, n):
            if s(i) == t(i):
                si = PunctureSet.without(n, i)
                assert distance(puncture(s, si), puncture(t, si)) == distance(s, t), (s, t, i)


def _with_shared_entry(s: Permutation, i: int, rng: random.Random) -> Permutation:
    im = list(random_perm(s.degree, rng).images)
    k = im.index(s(i))
    im[k], im[i - 1] = im[i - 1], im[k]
    return Permutation(tuple(im))


def check_puncture_laws(budget: SearchBudget, rng: random.Random) -> str:
    cases = 0
    for n in range(2, 6):
        perms = _sn(n)
        for s in perms:
            for t in perms:
                _puncture_laws_one(s, t)
                cases += 1
    for _ in range(10_000):
        n = rng.randint(2, 12)
        s = random_perm(n, rng)
        t = _with_shared_entry(s, rng.choice((1, n)), rng)
        _puncture_laws_one(s, t)
    return f"{cases} exhaustive pairs (n<=5) and 10000 random cases (n<=12)"


def check_puncture_example(budget: SearchBudget, rng: random.Random) -> str:
    out = puncture(Permutation.parse("6 1 3 5 2 4"), PunctureSet.parse("3,5,6", 6))
    assert str(out) == "2 1 3", out
    return "[6 1 3 5 2 4] punctured to {3,5,6} is [2 1 3]"


def check_mahonian(budget: SearchBudget, rng: random.Random) -> str:
    table = mahonian(7)
    for n in range(1, 8):
        hist = oracles.weight_histogram(n)
        assert list(table.row(n)) == hist, n
        for r in range(len(hist)):
            assert ball_size(n, r) == sum(hist[: r + 1]), (n, r)
    return "rows 1..7 and all ball sizes match enumeration"


def check_averaging_bound(budget: SearchBudget, rng: random.Random) -> str:
    rows = []
    for n in range(1, 6):
        for t in range(1, n + 1):
            d = t * (t - 1) // 2 + 1
            out = max_code(n, d, budget)
            if not out.exact:
                raise ClaimSkipped(f"max_code({n}, {d}) ran out of budget")
            cap = averaging_bound(n, t)
            assert out.size <= cap, (n, t, out.size, cap)
            rows.append(f"n={n},t={t}:{out.size}<={cap}")
    return " ".join(rows)


def check_alternating_balanced(budget: SearchBudget, rng: random.Random) -> str:
    for n in range(3, 8):
        a = alternating_group(n)
        v = check_balanced(a, 2)
        assert v.is_balanced and v.min_distance == 2, (n, v)
    return "A_3..A_7 are 2-balanced with minimum distance 2"


def check_a4(budget: SearchBudget, rng: random.Random) -> str:
    v = check_balanced(alternating_group(4), 2)
    assert v.is_balanced and v.min_distance == 2, v
    return "A_4: 12 words, minimum distance 2"


def check_fiber_structure(budget: SearchBudget, rng: random.Random) -> str:
    for n in range(3, 7):
        a = alternating_group(n)
        fb = check_fiber_balance(a, 2)
        assert fb.passed, (n, fb.violation)
        us = check_unique_codeword_structure(a, 2)
        assert us.passed, (n, us.violation)
    hit = unique_codeword(alternating_group(4), (3, 1), 1, 2)
    assert [str(w) for w in hit] == ["3 2 4 1"], hit
    return "A_3..A_6 pass fiber balance and unique-codeword checks; A_4 pattern (3,1) on {1,4} is [3 2 4 1]"


def _classify(n: int) -> str:
    codes = classify_2_balanced(n)
    assert len(codes) == 2, len(codes)
    witnesses = [is_coset_of_alternating(c) for c in codes]
    assert all(w is not None for w in witnesses)
    for c, g in zip(codes, witnesses):
        assert Code(compose(g, a) for a in alternating_group(n)) == c
    return f"S_{n}: exactly 2 codes, cosets of A_{n} by {', '.join(map(repr, witnesses))}"


def _refute(n: int, t: int, budget: SearchBudget) -> str:
    out = refute_t_balanced(n, t, budget)
    if not out.exact:
        raise ClaimSkipped(f"refute({n}, {t}) ran out of budget after {out.nodes} nodes")
    assert out.certificate is not None, f"found a {t}-balanced code in S_{n}"
    return out.certificate


def check_lemma_emo(budget: SearchBudget, rng: random.Random) -> str:
    total = 0
    for n in range(2, 8):
        r = verify_lemma_emo(n)
        assert r.passed, r.violations[:3]
        total += r.checked
    return f"{total} qualifying permutations (n<=7) satisfy the bound and equality shape"


def check_claim2(budget: SearchBudget, rng: random.Random) -> str:
    rows = verify_claim2(50)
    bad = [r.t for r in rows if not r.passed]
    assert not bad, bad
    return "t=3..50: distance <= 2t-4 < C(t,2)+1"


def check_gv(budget: SearchBudget, rng: random.Random) -> str:
    count = 0
    for n in range(2, 6):
        for d in range(1, n * (n - 1) // 2 + 1):
            c = greedy_gv(n, d)
            assert len(c) >= gv_guarantee(n, d), (n, d, len(c))
            assert naive_min_distance(c) >= d, (n, d)
            count += 1
    return f"{count} (n, d) points, greedy size >= n!/|B(n, d-1)|"


def cube_check(n: int, t: int) -> tuple[int, int]:
    """Size and diameter of the cube {s : s(i) = i for i > t} inside S_n."""
    cube = [p for p in enumerate_sn(n) if all(p(i) == i for i in range(t + 1, n + 1))]
    diam = max((distance(a, b) for a, b in itertools.combinations(cube, 2)), default=0)
    return len(cube), diam


def check_cube_vs_ball(budget: SearchBudget, rng: random.Random) -> str:
    for n in range(2, 11):
        for t in range(2, n + 1):
            row = cube_vs_ball(n, t)
            assert row.cube == math.factorial(t)
    for n in range(2, 8):
        for t in range(2, min(5, n) + 1):
            size, diam = cube_check(n, t)
            assert size == math.factorial(t) and diam == t * (t - 1) // 2, (n, t, size, diam)
    return "table for 2<=t<=n<=10 emitted; cube size t! and diameter C(t,2) verified for t<=5, n<=7"


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    run: Callable[[SearchBudget, random.Random], str]


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("distance-oracles", "fast distance equals pair-count and inversion symmetric-difference forms", check_distance_oracles),
        Claim("right-invariance", "distance is invariant under common right multiplication", check_right_invariance),
        Claim("puncture-laws", "puncturing laws for inversions, weight and shared end values", check_puncture_laws),
        Claim("puncture-example", "[6 1 3 5 2 4] restricted to {3,5,6} is [2 1 3]", check_puncture_example),
        Claim("mahonian-ball", "Mahonian rows match weight histograms", check_mahonian),
        Claim("averaging-bound", "max code size at d = C(t,2)+1 is at most n!/t!", check_averaging_bound),
        Claim("a4-is-2-balanced", "A_4 is 2-balanced", check_a4),
        Claim("alternating-2-balanced", "A_n is 2-balanced with minimum distance exactly 2", check_alternating_balanced),
        Claim("fiber-structure", "fiber balance and unique codeword per pattern in A_n", check_fiber_structure),
        Claim("classify-2-balanced-n3", "2-balanced codes are the two cosets of A_n", lambda b, r: _classify(3)),
        Claim("classify-2-balanced-n4", "2-balanced codes are the two cosets of A_n", lambda b, r: _classify(4)),
        Claim("refute-3-balanced-n4", "no t-balanced code for t >= 3", lambda b, r: _refute(4, 3, b)),
        Claim("refute-3-balanced-n5", "no t-balanced code for t >= 3", lambda b, r: _refute(5, 3, b)),
        Claim("refute-4-balanced-n5", "no t-balanced code for t >= 3", lambda b, r: _refute(5, 4, b)),
        Claim("lemma-emo", "weight bound for words starting with s+1 and its equality cases", check_lemma_emo),
        Claim("claim2", "two extremal words at distance 2t-4 < C(t,2)+1", check_claim2),
        Claim("gv-constructive", "greedy sweep meets the GV guarantee", check_gv),
        Claim("cube-vs-ball", "cube anticode has t! words and diameter C(t,2)", check_cube_vs_ball),
    ]
}


@dataclass
class ClaimResult:
    id: str
    anchor: str
    status: str
    elapsed: float
    detail: str

    def to_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "detail": self.detail}


@dataclass
class ReproduceReport:
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == PASS for r in self.results)

    @property
    def exit_status(self) -> int:
        if any(r.status == FAIL for r in self.results):
            return 1
        if any(r.status == SKIPPED for r in self.results):
            return 3
        return 0

    def to_dict(self) -> dict:
        # elapsed times are left out so the payload is deterministic
        return {"results": [r.to_dict() for r in self.results], "exit_status": self.exit_status}

    @classmethod
    def from_dict(cls, data: dict) -> ReproduceReport:
        return cls([ClaimResult(r["id"], r["anchor"], r["status"], 0.0, r["detail"]) for r in data["results"]])


def run_claims(
    ids: list[str] | None = None,
    budget: SearchBudget | None = None,
    on_result: Callable[[ClaimResult], None] | None = None,
) -> ReproduceReport:
    budget = budget or SearchBudget()
    selected = list(CLAIMS) if not ids else list(dict.fromkeys(ids))
    unknown = [i for i in selected if i not in CLAIMS]
    if unknown:
        raise UnknownClaim(", ".join(unknown))
    report = ReproduceReport()
    for cid in selected:
        claim = CLAIMS[cid]
        rng = random.Random(f"{budget.deterministic_seed}:{cid}")
        t0 = time.perf_counter()
        try:
            detail = claim.run(budget, rng)
            status = PASS
        except ClaimSkipped as exc:
            status, detail = SKIPPED, str(exc)
        except AssertionError as exc:
            status, detail = FAIL, f"counterexample: {exc}"
        res = ClaimResult(cid, claim.anchor, status, time.perf_counter() - t0, detail)
        report.results.append(res)
        if on_result:
            on_result(res)
    return report
