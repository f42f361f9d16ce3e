"""
Constructive and exhaustive code search in S_n.

The exact solvers treat a code with minimum distance >= d as a clique in the
compatibility graph on S_n (edges join permutations at distance >= d) and run
a bitset branch-and-bound with a greedy-colouring bound.  Right-invariance of
the metric lets every exact search assume the identity is a codeword.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

from .code import Code
from .perm import (
    Permutation,
    distance,
    enumerate_sn,
    order_signature,
    weight,
)

__all__ = [
    "BudgetExhausted",
    "SearchBudget",
    "SearchOutcome",
    "classify_2_balanced",
    "greedy_gv",
    "max_code",
    "refute_t_balanced",
    "verify_claim2",
    "verify_lemma_emo",
]

EXACT = "exact"
BUDGET_EXHAUSTED = "budget_exhausted"

# exact max_code is limited to |S_6| = 720 vertices
MAX_EXACT_DEGREE = 6


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**8
    max_seconds: float | None = None
    deterministic_seed: int = 0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass
class SearchOutcome:
    """Result of an exact search; ``words`` holds the best code found."""

    n: int
    d: int
    status: str
    words: tuple[Permutation, ...]
    nodes: int
    target: int | None = None
    certificate: str | None = None

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    @property
    def code(self) -> Code | None:
        return Code(self.words, self.n) if len(self.words) >= 2 else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "status": self.status,
            "size": self.size,
            "target": self.target,
            "nodes": self.nodes,
            "certificate": self.certificate,
            "words": [str(w) for w in self.words],
        }

    @classmethod
    def from_dict(cls, data: dict) -> SearchOutcome:
        return cls(
            n=data["n"],
            d=data["d"],
            status=data["status"],
            words=tuple(Permutation.parse(w) for w in data["words"]),
            nodes=data["nodes"],
            target=data.get("target"),
            certificate=data.get("certificate"),
        )


def greedy_gv(n: int, d: int, order: Sequence[Permutation] | None = None) -> Code:
    """
    Greedy Gilbert-Varshamov sweep: take the first surviving permutation,
    delete its radius ``d - 1`` ball, repeat.  Default order is lexicographic.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    perms = list(order) if order is not None else list(enumerate_sn(n))
    if len(perms) != math.factorial(n) or any(p.degree != n for p in perms):
        raise ValueError(f"order must list every element of S_{n} once")
    sigs = [order_signature(p) for p in perms]
    chosen: list[int] = []
    for k, s in enumerate(sigs):
        # k survives iff no chosen word lies within distance d - 1
        if all((s ^ sigs[c]).bit_count() >= d for c in chosen):
            chosen.append(k)
    if len(chosen) < 2:
        raise ValueError(f"no two permutations of S_{n} are at distance >= {d}")
    return Code((perms[k] for k in chosen), n)


class _Clique:
    """Bitset max-clique branch and bound over a fixed vertex ordering."""

    def __init__(self, adj: list[int], budget: SearchBudget) -> None:
        self.adj = adj
        self.max_nodes = budget.max_nodes
        self.deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        self.nodes = 0
        self.best: list[int] = []
        # prune anything that cannot beat max(len(best), floor)
        self.floor = 0
        self.stop_at: int | None = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted

    def _colour(self, P: int, kmin: int) -> list[tuple[int, int]]:
        adj = self.adj
        out = []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~(adj[v] | low)
                U ^= low
                if k >= kmin:
                    out.append((v, k))
        return out

    def expand(self, clique: list[int], P: int) -> None:
        self._tick()
        bar = max(len(self.best), self.floor)
        order = self._colour(P, max(bar - len(clique) + 1, 1))
        adj = self.adj
        for v, k in reversed(order):
            if len(clique) + k <= max(len(self.best), self.floor):
                return
            clique.append(v)
            NP = P & adj[v]
            if NP:
                self.expand(clique, NP)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            if self.stop_at is not None and len(self.best) >= self.stop_at:
                clique.pop()
                return
            clique.pop()
            P &= ~(1 << v)


def _compat_graph(perms: list[Permutation], d: int) -> list[int]:
    sigs = [order_signature(p) for p in perms]
    adj = [0] * len(perms)
    for i, a in enumerate(sigs):
        row = 0
        for j, b in enumerate(sigs):
            if j != i and (a ^ b).bit_count() >= d:
                row |= 1 << j
        adj[i] = row
    return adj


def max_code(
    n: int,
    d: int,
    budget: SearchBudget | None = None,
    target: int | None = None,
) -> SearchOutcome:
    """
    Largest code in S_n with minimum distance >= d, containing the identity.

    With ``target`` the search stops as soon as a code of that size exists and
    only has to rule out codes of size ``target`` otherwise, which is a much
    smaller tree than full maximisation.
    """
    budget = budget or SearchBudget()
    if n < 1 or n > MAX_EXACT_DEGREE:
        raise ValueError(f"exact search supports 1 <= n <= {MAX_EXACT_DEGREE}, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    perms = list(enumerate_sn(n))
    eps = perms[0]
    if d == 1:
        return SearchOutcome(n, d, EXACT, tuple(perms), 1, target)
    sigs = [order_signature(p) for p in perms]
    cand = [k for k in range(1, len(perms)) if sigs[k].bit_count() >= d]
    # highest compatibility degree first: the lowest bits get coloured first
    local_sigs = [sigs[k] for k in cand]
    deg = [sum(1 for b in local_sigs if (a ^ b).bit_count() >= d) for a in local_sigs]
    order = sorted(range(len(cand)), key=lambda i: (-deg[i], i))
    cand = [cand[i] for i in order]
    adj = _compat_graph([perms[k] for k in cand], d)
    solver = _Clique(adj, budget)
    if target is not None:
        # a clique of target - 1 non-identity words completes the target code
        solver.floor = max(target - 2, 0)
        solver.stop_at = target - 1
    status = EXACT
    try:
        if cand:
            solver.expand([], (1 << len(cand)) - 1)
    except BudgetExhausted:
        status = BUDGET_EXHAUSTED
    words = tuple(sorted([eps] + [perms[cand[v]] for v in solver.best]))
    return SearchOutcome(n, d, status, words, solver.nodes, target)


def _all_cliques_of_size(adj: list[int], size: int, budget: SearchBudget) -> tuple[list[list[int]], int]:
    """Every clique with exactly ``size`` vertices, each reported once."""
    solver = _Clique(adj, budget)
    found: list[list[int]] = []

    def rec(clique: list[int], P: int) -> None:
        solver._tick()
        need = size - len(clique)
        order = solver._colour(P, 1)
        for v, k in reversed(order):
            if k < need:
                return
            clique.append(v)
            if need == 1:
                found.append(list(clique))
            else:
                NP = P & adj[v]
                if NP:
                    rec(clique, NP)
            clique.pop()
            P &= ~(1 << v)

    if size == 0:
        return [[]], 0
    rec([], (1 << len(adj)) - 1)
    return found, solver.nodes


def classify_2_balanced(n: int, budget: SearchBudget | None = None) -> list[Code]:
    """
    All codes in S_n with n!/2 words and minimum distance >= 2, by exhaustive
    enumeration of the independent sets of that size in the graph joining
    permutations one adjacent transposition apart.  No normalisation is used.
    """
    if n not in (3, 4):
        raise ValueError(f"exhaustive classification supports n in {{3, 4}}, got {n}")
    budget = budget or SearchBudget()
    perms = list(enumerate_sn(n))
    adj = _compat_graph(perms, 2)
    cliques, _ = _all_cliques_of_size(adj, math.factorial(n) // 2, budget)
    return sorted((Code((perms[v] for v in cl), n) for cl in cliques), key=lambda c: c.words)


def refute_t_balanced(n: int, t: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """
    Exhaustively look for a t-balanced code (n!/t! words, distance > C(t,2)).

    ``certificate`` is set only when the search tree was fully explored and
    found nothing.  A returned code of the target size would be a
    counterexample and leaves ``certificate`` empty.
    """
    if not 3 <= t <= n:
        raise ValueError(f"need 3 <= t <= n, got t={t}, n={n}")
    if n > MAX_EXACT_DEGREE:
        raise ValueError(f"refutation supports n <= {MAX_EXACT_DEGREE}, got {n}")
    target = math.factorial(n) // math.factorial(t)
    d0 = t * (t - 1) // 2 + 1
    if target < 2:
        out = max_code(n, d0, budget)
        out.target = target
        out.certificate = (
            f"no code of size {target} exists in S_{n}: a code needs at least 2 codewords"
        )
        return out
    out = max_code(n, d0, budget, target=target)
    if out.exact and out.size < target:
        out.certificate = (
            f"no code of size {target} with d >= {d0} exists in S_{n} "
            f"(exhaustive search, {out.nodes} nodes)"
        )
    return out


@dataclass
class LemmaReport:
    """Brute-force check of the weight bound for permutations starting with s+1."""

    n: int
    bound: int
    checked: int
    equality_cases: dict[int, int]
    violations: list[str]
    # equality cases that fail "strictly decreasing on positions 2..n-1" read over 2..n
    literal_mismatches: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "checked": self.checked,
            "equality_cases": {str(k): v for k, v in self.equality_cases.items()},
            "violations": list(self.violations),
            "literal_mismatches": self.literal_mismatches,
            "passed": self.passed,
        }


def _emo_equality_shape(images: tuple[int, ...], s: int) -> bool:
    n = len(images)
    middle = images[1:n - 1]
    return images[-1] == s and all(x > y for x, y in zip(middle, middle[1:]))


def verify_lemma_emo(n: int) -> LemmaReport:
    """
    For every s in [n-1] and every permutation with first entry s+1 and last
    entry >= s, check weight <= C(n-1, 2) + 1, with equality exactly when
    the last entry is s and positions 2..n-1 decrease.
    """
    if not 2 <= n <= 8:
        raise ValueError(f"lemma check supports 2 <= n <= 8, got {n}")
    bound = (n - 1) * (n - 2) // 2 + 1
    checked = 0
    equality: dict[int, int] = {s: 0 for s in range(1, n)}
    violations: list[str] = []
    literal = 0
    for p in enumerate_sn(n):
        im = p.images
        s = im[0] - 1
        if s < 1 or im[-1] < s:
            continue
        checked += 1
        w = weight(p)
        if w > bound:
            violations.append(f"{p!r}: weight {w} > {bound}")
            continue
        shape = _emo_equality_shape(im, s)
        if (w == bound) != shape:
            violations.append(f"{p!r}: weight {w}, equality shape {shape}")
        if w == bound:
            equality[s] += 1
            if not all(im[i] > im[i + 1] for i in range(1, n - 1)):
                literal += 1
    return LemmaReport(n, bound, checked, equality, violations, literal)


def emo_extremal(t: int, s: int) -> Permutation:
    """
    The permutation of S_{t+1} with first entry s+1, last entry s and the
    remaining values decreasing in between.
    """
    if not 1 <= s <= t:
        raise ValueError(f"s={s} outside 1..{t}")
    rest = sorted((v for v in range(1, t + 2) if v not in (s, s + 1)), reverse=True)
    return Permutation((s + 1, *rest, s))


@dataclass
class Claim2Row:
    t: int
    left: Permutation
    right: Permutation
    distance: int
    cap: int
    threshold: int

    @property
    def passed(self) -> bool:
        return self.distance <= self.cap < self.threshold


def claim2_pair(t: int) -> tuple[Permutation, Permutation]:
    """
    The two words ``[t-1, t+1, t, t-3, ..., 1, t-2]`` and
    ``[t+1, t-1, t-2, ..., 1, t]`` of S_{t+1}, written out literally.
    """
    if t < 3:
        raise ValueError(f"t must be >= 3, got {t}")
    left = (t - 1, t + 1, t, *range(t - 3, 0, -1), t - 2)
    right = (t + 1, *range(t - 1, 0, -1), t)
    return Permutation(left), Permutation(right)


def verify_claim2(t_max: int) -> list[Claim2Row]:
    if not 3 <= t_max <= 50:
        raise ValueError(f"t_max must lie in 3..50, got {t_max}")
    rows = []
    for t in range(3, t_max + 1):
        left, right = claim2_pair(t)
        if left != emo_extremal(t, t - 2) or right != emo_extremal(t, t):
            raise AssertionError(f"t={t}: literal words disagree with the extremal family")
        rows.append(Claim2Row(t, left, right, distance(left, right), 2 * t - 4, t * (t - 1) // 2 + 1))
    return rows
