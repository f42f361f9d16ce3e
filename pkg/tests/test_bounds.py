import json
import math

import pytest

from ktcodes import oracles
from ktcodes.bounds import (
    BoundReport,
    CubeBallComparison,
    averaging_bound,
    ball_size,
    bound_report,
    cube_vs_ball,
    gv_guarantee,
    mahonian,
    singleton_bounds,
    sphere_packing_bound,
)


def test_mahonian_rows():
    t = mahonian(4)
    assert t.row(1) == (1,)
    assert t.row(3) == (1, 2, 2, 1)
    assert t.row(4) == (1, 3, 5, 6, 5, 3, 1)
    assert t(4, 3) == 6 and t(4, 99) == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_mahonian_matches_enumeration(n):
    assert list(mahonian(n).row(n)) == oracles.weight_histogram(n)


def test_mahonian_invariants_large():
    table = mahonian(30)
    for n in range(1, 31):
        row = table.row(n)
        m = n * (n - 1) // 2
        assert len(row) == m + 1
        assert row[0] == row[m] == 1
        assert row == row[::-1]
        assert sum(row) == math.factorial(n)


def test_ball_size_examples():
    assert ball_size(3, 1) == 3
    assert ball_size(4, 2) == 9
    assert all(ball_size(n, 0) == 1 for n in range(1, 10))
    assert ball_size(6, 1) == 6
    assert ball_size(5, 10) == ball_size(5, 100) == 120


def test_ball_size_brute_force():
    for n in range(1, 7):
        for r in range(n * (n - 1) // 2 + 2):
            assert ball_size(n, r) == oracles.brute_ball_size(n, r)


def test_ball_size_monotone():
    for n in range(1, 12):
        sizes = [ball_size(n, r) for r in range(n * (n - 1) // 2 + 1)]
        assert sizes == sorted(sizes) and sizes[-1] == math.factorial(n)


def test_sphere_packing_examples():
    assert sphere_packing_bound(4, 3) == 6
    assert sphere_packing_bound(4, 5) == 2
    assert all(sphere_packing_bound(n, 1) == math.factorial(n) for n in range(2, 9))
    with pytest.raises(ValueError):
        sphere_packing_bound(4, 7)
    with pytest.raises(ValueError):
        sphere_packing_bound(4, 0)


def test_gv_examples():
    assert gv_guarantee(4, 2) == 6
    assert gv_guarantee(4, 3) == 2
    assert all(gv_guarantee(n, 1) == math.factorial(n) for n in range(2, 9))


def test_gv_never_exceeds_sphere_packing():
    for n in range(2, 15):
        for d in range(1, n * (n - 1) // 2 + 1):
            assert gv_guarantee(n, d) <= sphere_packing_bound(n, d)


def test_averaging_examples():
    assert averaging_bound(4, 2) == 12
    assert averaging_bound(5, 3) == 20
    assert all(averaging_bound(n, 1) == math.factorial(n) for n in range(1, 9))
    with pytest.raises(ValueError):
        averaging_bound(4, 5)


def test_singleton_examples():
    s = singleton_bounds(4, 12)
    assert s.exact_t == 2 and s.exact_cap == 2
    assert s.strict_t == 3 and s.strict_cap == 3
    assert s.cap == 2
    s = singleton_bounds(4, 24)
    assert s.exact_t == 1 and s.exact_cap == 1 and s.cap == 1
    s = singleton_bounds(4, 5)
    assert s.exact_t is None and s.strict_t == 3 and s.strict_cap == 3
    assert not s.in_standard_range
    with pytest.raises(ValueError):
        singleton_bounds(4, 1)
    with pytest.raises(ValueError):
        singleton_bounds(4, 25)


def test_cube_vs_ball_examples():
    r = cube_vs_ball(3, 3)
    assert (r.cube, r.radius, r.ball, r.larger) == (6, 1, 3, "cube")
    r = cube_vs_ball(6, 3)
    assert (r.cube, r.ball, r.larger) == (6, 6, "equal")
    r = cube_vs_ball(4, 2)
    assert (r.cube, r.radius, r.ball, r.larger) == (2, 0, 1, "cube")
    with pytest.raises(ValueError):
        cube_vs_ball(4, 1)


def test_bound_report_by_t_and_d():
    r = bound_report(4, t=2)
    assert r.d == 2 and r.averaging == 12 and r.sphere_packing == 24 and r.gilbert_varshamov == 6
    assert "case 2 (t=2): d <= 2" in r.singleton
    r = bound_report(4, d=1)
    assert r.sphere_packing == 24
    r = bound_report(4, d=5)
    assert r.sphere_packing == 2
    # d=5 > C(3,2): averaging cap 4!/3!
    assert r.t == 3 and r.averaging == 4
    with pytest.raises(ValueError):
        bound_report(4)


def test_bignum_bounds():
    r = bound_report(50, d=10)
    assert r.sphere_packing == math.factorial(50) // ball_size(50, 4)
    assert r.sphere_packing > 2**64
    assert r.gilbert_varshamov <= r.sphere_packing


def test_json_round_trips():
    for rep in (bound_report(5, t=3), bound_report(40, d=17)):
        again = BoundReport.from_dict(json.loads(json.dumps(rep.to_dict())))
        assert again == rep
    c = cube_vs_ball(9, 7)
    assert CubeBallComparison.from_dict(json.loads(json.dumps(c.to_dict()))) == c
