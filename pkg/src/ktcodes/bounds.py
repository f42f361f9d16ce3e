"""
Inversion-count (Mahonian) numbers, Kendall-tau ball sizes and cardinality
bounds for permutation codes.

All counts are Python integers, so nothing overflows at large n.

>>> mahonian(4).row(4)
(1, 3, 5, 6, 5, 3, 1)
>>> sphere_packing_bound(4, 3), gv_guarantee(4, 2), averaging_bound(4, 2)
(6, 6, 12)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "BoundReport",
    "CubeBallComparison",
    "MahonianTable",
    "SingletonCase",
    "averaging_bound",
    "ball_size",
    "bound_report",
    "cube_vs_ball",
    "gv_guarantee",
    "mahonian",
    "singleton_bounds",
    "sphere_packing_bound",
]


def _pairs(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class MahonianTable:
    """Rows ``T(n, k)``, ``0 <= k <= n(n-1)/2``, for ``1 <= n <= max_degree``."""

    max_degree: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.max_degree:
            raise ValueError(f"row {n} outside table 1..{self.max_degree}")
        return self.rows[n - 1]

    def __call__(self, n: int, k: int) -> int:
        r = self.row(n)
        return r[k] if 0 <= k < len(r) else 0


_rows: list[tuple[int, ...]] = [(1,)]


def _extend_rows(n_max: int) -> None:
    while len(_rows) < n_max:
        prev = _rows[-1]
        n = len(_rows) + 1
        # T(n, k) = sum_{j=0}^{min(k, n-1)} T(n-1, k-j), via a sliding window sum
        out = []
        window = 0
        for k in range(_pairs(n) + 1):
            if k < len(prev):
                window += prev[k]
            if k - n >= 0 and k - n < len(prev):
                window -= prev[k - n]
            out.append(window)
        _rows.append(tuple(out))


def mahonian(n_max: int) -> MahonianTable:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _extend_rows(n_max)
    return MahonianTable(n_max, tuple(_rows[:n_max]))


@lru_cache(maxsize=None)
def _ball_prefix(n: int) -> tuple[int, ...]:
    row = mahonian(n).row(n)
    acc = []
    total = 0
    for v in row:
        total += v
        acc.append(total)
    return tuple(acc)


def ball_size(n: int, r: int) -> int:
    """Number of permutations within distance ``r`` of a fixed one in S_n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    prefix = _ball_prefix(n)
    return prefix[min(r, len(prefix) - 1)]


def _check_nd(n: int, d: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= d <= _pairs(n):
        raise ValueError(f"d={d} outside 1..{_pairs(n)} for n={n}")


def sphere_packing_bound(n: int, d: int) -> int:
    _check_nd(n, d)
    return math.factorial(n) // ball_size(n, (d - 1) // 2)


def gv_guarantee(n: int, d: int) -> int:
    """A size that some code with minimum distance >= d is guaranteed to reach."""
    _check_nd(n, d)
    return math.factorial(n) // ball_size(n, d - 1)


def averaging_bound(n: int, t: int) -> int:
    """``n!/t!``: the largest size of a code with minimum distance > C(t, 2)."""
    if not 1 <= t <= n:
        raise ValueError(f"t={t} outside 1..{n}")
    return math.factorial(n) // math.factorial(t)


def averaging_t(n: int, d: int) -> int:
    """Largest ``t <= n`` with ``C(t, 2) < d``, the sharpest averaging cap at distance d."""
    t = 1
    while t < n and _pairs(t + 1) < d:
        t += 1
    return t


@dataclass(frozen=True)
class SingletonCase:
    """
    Distance caps implied by the cardinality of a code.

    ``strict_t`` is the smallest t with ``M > n!/t!`` (cap ``C(t,2)``);
    ``exact_t`` is set when ``M == n!/t!`` (cap ``C(t,2) + 1``).
    """

    n: int
    cardinality: int
    strict_t: int
    strict_cap: int
    exact_t: int | None = None
    exact_cap: int | None = None

    @property
    def cap(self) -> int:
        caps = [self.strict_cap] + ([self.exact_cap] if self.exact_cap is not None else [])
        return min(caps)

    @property
    def in_standard_range(self) -> bool:
        """Whether every t used satisfies ``1 <= t <= n - 2``."""
        ts = [self.strict_t] + ([self.exact_t] if self.exact_t is not None else [])
        return all(1 <= t <= self.n - 2 for t in ts)

    def describe(self) -> str:
        parts = []
        if self.exact_t is not None:
            parts.append(f"case 2 (t={self.exact_t}): d <= {self.exact_cap}")
        parts.append(f"case 1 (t={self.strict_t}): d <= {self.strict_cap}")
        return "; ".join(parts)


def singleton_bounds(n: int, cardinality: int) -> SingletonCase:
    fact = math.factorial(n)
    if not 2 <= cardinality <= fact:
        raise ValueError(f"cardinality {cardinality} outside 2..{fact}")
    exact_t = None
    for t in range(1, n + 1):
        if fact // math.factorial(t) == cardinality:
            exact_t = t
            break
    strict_t = next(t for t in range(1, n + 1) if cardinality * math.factorial(t) > fact)
    return SingletonCase(
        n=n,
        cardinality=cardinality,
        strict_t=strict_t,
        strict_cap=_pairs(strict_t),
        exact_t=exact_t,
        exact_cap=None if exact_t is None else _pairs(exact_t) + 1,
    )


@dataclass(frozen=True)
class CubeBallComparison:
    n: int
    t: int
    cube: int
    radius: int
    ball: int
    # ball sizes at the floor and ceiling of C(t,2)/2; they differ only for odd C(t,2)
    ball_floor: int
    ball_ceil: int

    @property
    def larger(self) -> str:
        if self.cube > self.ball:
            return "cube"
        if self.cube < self.ball:
            return "ball"
        return "equal"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "cube": str(self.cube),
            "radius": self.radius,
            "ball": str(self.ball),
            "ball_ceil_radius": str(self.ball_ceil),
            "larger": self.larger,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CubeBallComparison:
        ball = int(data["ball"])
        return cls(data["n"], data["t"], int(data["cube"]), data["radius"], ball, ball,
                   int(data["ball_ceil_radius"]))


def cube_vs_ball(n: int, t: int) -> CubeBallComparison:
    """Compare the cube anticode of length t with the ball of radius floor(C(t,2)/2)."""
    if not 2 <= t <= n:
        raise ValueError(f"t={t} outside 2..{n}")
    c = _pairs(t)
    lo, hi = c // 2, (c + 1) // 2
    ball = ball_size(n, lo)
    return CubeBallComparison(
        n=n,
        t=t,
        cube=math.factorial(t),
        radius=lo,
        ball=ball,
        ball_floor=ball,
        ball_ceil=ball_size(n, hi),
    )


@dataclass(frozen=True)
class BoundReport:
    """
    All bounds for one parameter point.  ``d`` is the distance the row is
    about; for rows given by t it is ``C(t,2) + 1``.
    """

    n: int
    d: int
    t: int
    sphere_packing: int
    gilbert_varshamov: int
    singleton: str
    averaging: int
    provenance: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "t": self.t,
            "sphere_packing": str(self.sphere_packing),
            "gv": str(self.gilbert_varshamov),
            "singleton_case": self.singleton,
            "averaging": str(self.averaging),
        }

    @classmethod
    def from_dict(cls, data: dict) -> BoundReport:
        return cls(
            n=data["n"],
            d=data["d"],
            t=data["t"],
            sphere_packing=int(data["sphere_packing"]),
            gilbert_varshamov=int(data["gv"]),
            singleton=data["singleton_case"],
            averaging=int(data["averaging"]),
        )


def bound_report(n: int, d: int | None = None, t: int | None = None) -> BoundReport:
    """Evaluate every bound at ``(n, d)`` or at ``(n, t)`` with ``d = C(t,2) + 1``."""
    if (d is None) == (t is None):
        raise ValueError("give exactly one of d or t")
    if t is not None:
        if not 1 <= t <= n:
            raise ValueError(f"t={t} outside 1..{n}")
        d = _pairs(t) + 1
        if d > _pairs(n):
            raise ValueError(f"d=C({t},2)+1={d} exceeds the diameter {_pairs(n)} of S_{n}")
    else:
        _check_nd(n, d)
        t = averaging_t(n, d)
    avg = averaging_bound(n, t)
    sp = sphere_packing_bound(n, d)
    gv = gv_guarantee(n, d)
    singleton = singleton_bounds(n, avg).describe() if avg >= 2 else "n/a (|C| < 2)"
    return BoundReport(
        n=n,
        d=d,
        t=t,
        sphere_packing=sp,
        gilbert_varshamov=gv,
        singleton=singleton,
        averaging=avg,
        provenance={
            "sphere_packing": f"{n}! // ball_size({n}, {(d - 1) // 2})",
            "gv": f"{n}! // ball_size({n}, {d - 1})",
            "singleton_case": f"singleton_bounds({n}, {avg})",
            "averaging": f"{n}! // {t}!",
        },
    )
