import pytest
from hypothesis import given, settings, strategies as st

from squaretile.plane import (
    HORIZONTAL,
    VERTICAL,
    Impossible,
    PlaneUnknown,
    Possible,
    Quadrant,
    WhirlSpec,
    base_66x64,
    pinwheel_patch,
    plane_odd_count_verdict,
    quadrant_whirl_patch,
    three_odds_patch,
    whirl_squares,
)
from squaretile.rectangles import solve
from squaretile.sequences import A, B, C, scale_seq
from squaretile.tiling import Placement, Rect, Tiling, Window, odd_census, verify


def spec23():
    return WhirlSpec.from_base(base_66x64(), 23)


def test_small_window_sees_only_the_base():
    got = quadrant_whirl_patch(spec23(), Quadrant((0, 0), 1, 1), Window(0, 0, 100, 100))
    scaled_base = {p.side * 23 for p in base_66x64().squares}
    assert got and all(p.side in scaled_base for p in got)
    assert all(p.x1 <= 1518 and p.y1 <= 1472 for p in got)


def test_larger_window_reaches_the_whirl():
    sides = {p.side for p in quadrant_whirl_patch(spec23(), Quadrant((0, 0), 1, 1), Window(0, 0, 5000, 5000))}
    assert {1472, 2990} <= sides


def test_disjoint_window_gives_nothing():
    assert quadrant_whirl_patch(spec23(), Quadrant((0, 0), 1, 1), Window(-50, -50, 0, 10)) == []
    assert quadrant_whirl_patch(spec23(), Quadrant((0, 0), -1, -1), Window(0, 0, 10, 10)) == []


@pytest.mark.parametrize("dx,dy", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
@pytest.mark.parametrize("axis", [HORIZONTAL, VERTICAL])
def test_quadrant_patch_covers_its_quarter(dx, dy, axis):
    spec = WhirlSpec.from_base(base_66x64(), 3, axis)
    q = Quadrant((7, -4), dx, dy)
    x0, x1 = (7, 2000) if dx > 0 else (-2000, 7)
    y0, y1 = (-4, 1500) if dy > 0 else (-1500, -4)
    w = Window(x0, y0, x1, y1)
    t = Tiling(w, quadrant_whirl_patch(spec, q, w))
    assert verify(t).passed


def test_whirl_sides_follow_the_sequence():
    sides = [s for _, _, s, _, _ in _take(whirl_squares(WhirlSpec.from_base(base_66x64())), 8)]
    assert sides == A.terms(17)[9:]
    b = [s for _, _, s, _, _ in _take(whirl_squares(WhirlSpec(6, 14)), 6)]
    assert b == B.terms(6)
    c = [s for _, _, s, _, _ in _take(whirl_squares(WhirlSpec(8, 16)), 6)]
    assert c == C.terms(6)


def _take(it, n):
    return [next(it) for _ in range(n)]


def test_whirl_spec_validation():
    with pytest.raises(ValueError):
        WhirlSpec(6, 14, first_growth_axis="diagonal")
    with pytest.raises(ValueError):
        WhirlSpec(64, 66, base=base_66x64())
    broken = Tiling(Rect(66, 64), base_66x64().squares[1:])
    with pytest.raises(ValueError):
        WhirlSpec.from_base(broken)
    with pytest.raises(ValueError):
        Quadrant((0, 0), 0, 1)


def test_pinwheel_example():
    t = pinwheel_patch(9, Window(-3000, -3000, 3000, 3000))
    r = verify(t)
    assert r.passed and odd_census(t) == (1, [9])


def test_pinwheel_inside_centre():
    t = pinwheel_patch(9, Window(2, 2, 5, 7))
    assert t.squares == (Placement(0, 0, 9),)


def test_pinwheel_rejects_even_centre():
    for x in (8, 0, -3):
        with pytest.raises(ValueError):
            pinwheel_patch(x, Window(-1, -1, 1, 1))


def test_pinwheel_rejects_clashing_scales():
    with pytest.raises(ValueError):
        pinwheel_patch(9, Window(-1, -1, 1, 1), scales=(1, 2, 25, 26))


def _quadrant_sides(x, window):
    out = []
    for k, q in zip((23, 24, 25, 26), [Quadrant((x, 0), 1, 1), Quadrant((x, x), -1, 1),
                                        Quadrant((0, x), -1, -1), Quadrant((0, 0), 1, -1)]):
        out.append({p.side for p in quadrant_whirl_patch(WhirlSpec.from_base(base_66x64(), k), q, window)})
    return out


def test_pinwheel_quadrant_sides_are_disjoint():
    groups = _quadrant_sides(9, Window(-20000, -20000, 20000, 20000))
    for i in range(4):
        for j in range(i + 1, 4):
            assert not groups[i] & groups[j]


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 400).map(lambda v: 2 * v + 1),
    st.integers(-10**4, 10**4),
    st.integers(-10**4, 10**4),
    st.integers(1, 10**4),
    st.integers(1, 10**4),
)
def test_pinwheel_windows_verify(x, x0, y0, w, h):
    t = pinwheel_patch(x, Window(x0, y0, x0 + w, y0 + h))
    r = verify(t)
    assert r.passed
    assert set(r.odd_sides) <= {x}


@settings(max_examples=40, deadline=None)
@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(1, 10**4), st.integers(1, 10**4))
def test_three_odds_windows_verify(x0, y0, w, h):
    win = Window(x0, y0, x0 + w, y0 + h)
    r = verify(three_odds_patch(win))
    assert r.passed
    assert set(r.odd_sides) <= {3, 5, 11}
    if x0 <= -5 and y0 <= 0 and x0 + w >= 6 and y0 + h >= 19:
        assert r.odd_sides == (3, 5, 11)


@settings(max_examples=25, deadline=None)
@given(st.integers(-3000, 3000), st.integers(-3000, 3000), st.integers(1, 3000), st.integers(1, 3000),
       st.integers(0, 5000), st.integers(0, 5000))
def test_windows_are_monotone(x0, y0, w, h, grow_x, grow_y):
    small = Window(x0, y0, x0 + w, y0 + h)
    big = Window(x0 - grow_x, y0 - grow_y, x0 + w + grow_x, y0 + h + grow_y)
    for build in (lambda win: pinwheel_patch(9, win), three_odds_patch):
        assert set(build(small).squares) <= set(build(big).squares)


def test_three_odds_example():
    t = three_odds_patch(Window(-2000, -2000, 2000, 2000))
    r = verify(t)
    assert r.passed and odd_census(t) == (3, [3, 5, 11])


def test_three_odds_inside_the_eleven():
    assert three_odds_patch(Window(-3, 5, 4, 12)).squares == (Placement(-5, 3, 11),)


def test_three_odds_sides_come_from_the_four_sequences():
    t = three_odds_patch(Window(-50000, -50000, 50000, 50000))
    pools = [set(s.terms(40)) for s in (B, C, scale_seq(A, 23), scale_seq(A, 24))]
    for p in t.squares:
        if p.side in (3, 5, 11):
            continue
        owners = [i for i, pool in enumerate(pools) if p.side in pool]
        assert len(owners) == 1
    assert verify(t).passed


def test_whirl_recurrence_inside_each_quadrant():
    q = Quadrant((9, 0), 1, 1)
    sides = [p.side for p in quadrant_whirl_patch(spec23(), q, Window(9, 0, 10**6, 10**6))]
    tail = sorted(s for s in sides if s >= 23 * 64)
    assert all(tail[i + 2] == tail[i + 1] + tail[i] for i in range(len(tail) - 2))


def test_plane_verdicts():
    assert plane_odd_count_verdict(1) == Possible(1, "pinwheel")
    assert plane_odd_count_verdict(2) == Impossible(2, 2)
    assert plane_odd_count_verdict(3) == Possible(3, "three-odds")
    for k in (0, 4, 5, 17):
        assert plane_odd_count_verdict(k) == PlaneUnknown(k)
    with pytest.raises(ValueError):
        plane_odd_count_verdict(-1)


def test_base_is_a_solver_result():
    assert base_66x64() == solve((2, 8, 14, 16, 18, 20, 28, 30, 36), 66, 64)
