from fractions import Fraction
from itertools import combinations
from math import comb, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torsion_cosets import LaurentPoly, polytope_summary, support
from torsion_cosets.errors import UnsupportedDimension
from torsion_cosets.newton import convex_hull_2d, edge_directions, normalized_volume


def test_support_examples(poly):
    assert support(poly("x + y - 1")).points == {(1, 0), (0, 1), (0, 0)}
    assert support(poly("x*y - 1")).points == {(1, 1), (0, 0)}
    assert support(poly("x^2*y^3 - 1")).points == {(2, 3), (0, 0)}


@pytest.mark.parametrize(
    "text, card, diam, vol, dirs",
    [
        ("x + y - 1", 3, 2, 1, {(1, 0), (0, 1), (1, -1)}),
        ("x*y - 1", 2, 2, 0, {(1, 1)}),
        ("x^2*y^3 - 1", 2, 13, 0, {(2, 3)}),
        ("x^2 + y^2 + y + 2", 4, 8, 4, {(1, 0), (0, 1), (1, -1)}),
        ("5", 1, 0, 0, set()),
    ],
)
def test_summary_examples(poly, text, card, diam, vol, dirs):
    s = polytope_summary(support(poly(text)))
    assert (s.card, s.sq_diameter, s.norm_volume_2d) == (card, diam, vol)
    assert s.edge_dirs == dirs


def test_higher_dimension_partial_summary():
    f = LaurentPoly({(1, 0, 0): 1, (0, 2, 1): 1, (0, 0, 0): -1}, 3)
    s = polytope_summary(support(f))
    assert (s.card, s.sq_diameter, s.norm_volume_2d) == (3, 6, None)
    with pytest.raises(UnsupportedDimension):
        normalized_volume(support(f))
    with pytest.raises(UnsupportedDimension):
        edge_directions(support(f))


point = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
supports = st.frozensets(point, min_size=1, max_size=9)


def _poly(points):
    return LaurentPoly({p: 1 for p in points}, 2)


@given(supports, point)
def test_translation_invariance(pts, shift):
    a = polytope_summary(support(_poly(pts)))
    moved = frozenset((x + shift[0], y + shift[1]) for x, y in pts)
    b = polytope_summary(support(_poly(moved)))
    assert (a.sq_diameter, a.norm_volume_2d, a.edge_dirs) == (
        b.sq_diameter,
        b.norm_volume_2d,
        b.edge_dirs,
    )


@given(supports)
def test_diameter_realized_and_maximal(pts):
    s = polytope_summary(support(_poly(pts)))
    dists = [(p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 for p, q in combinations(pts, 2)]
    assert s.sq_diameter == max(dists, default=0)


@given(supports)
def test_edges_primitive_and_normalized(pts):
    for d in polytope_summary(support(_poly(pts))).edge_dirs:
        assert gcd(*d) == 1
        first = next(x for x in d if x)
        assert first > 0


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@given(supports)
def test_hull_contains_every_point(pts):
    hull = convex_hull_2d(pts)
    assert set(hull) <= pts
    if len(hull) >= 3:
        for a, b in zip(hull, hull[1:] + hull[:1]):
            assert all(_cross(a, b, p) >= 0 for p in pts)
            # strictly convex: no collinear vertex kept
        for a, b, c in zip(hull, hull[1:] + hull[:1], hull[2:] + hull[:2]):
            assert _cross(a, b, c) > 0


@given(supports)
def test_volume_matches_pick_style_triangle_fan(pts):
    # oracle: max over triangulations is the hull area; a fan from a hull vertex realizes it
    hull = convex_hull_2d(pts)
    twice = sum(
        abs(_cross(hull[0], hull[i], hull[i + 1])) for i in range(1, len(hull) - 1)
    ) if len(hull) >= 3 else 0
    assert normalized_volume(support(_poly(pts))) == Fraction(twice)


@pytest.mark.parametrize("d", range(1, 8))
def test_dense_volume_and_card(d):
    pts = {(i, j): 1 for i in range(d + 1) for j in range(d + 1 - i)}
    s = polytope_summary(support(LaurentPoly(pts, 2)))
    assert s.norm_volume_2d == d * d
    assert s.card == comb(2 + d, d)


@given(st.integers(1, 3), st.integers(1, 5), st.data())
def test_card_bounded_by_monomial_count(n, d, data):
    mono = st.lists(st.integers(0, d), min_size=n, max_size=n).filter(lambda e: sum(e) <= d)
    terms = data.draw(st.lists(mono, min_size=1, max_size=12))
    f = LaurentPoly({tuple(e): 1 for e in terms}, n)
    assert polytope_summary(support(f)).card <= comb(n + d, d)
