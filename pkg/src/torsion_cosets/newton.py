"""Newton polytope data: support, 2-D hull, diameter, volume, edge directions."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from .errors import UnsupportedDimension, ZeroPolynomial


@dataclass(frozen=True)
class SupportSet:
    points: frozenset
    nvars: int


@dataclass(frozen=True)
class PolytopeSummary:
    card: int
    sq_diameter: int
    norm_volume_2d: Optional[Fraction] = None
    edge_dirs: Optional[frozenset] = None
    hull_vertices: Optional[tuple] = None

    def to_json(self):
        out = {"card": self.card, "sq_diameter": self.sq_diameter}
        if self.norm_volume_2d is not None:
            out["norm_volume_2d"] = str(self.norm_volume_2d)
            out["edge_dirs"] = sorted(list(d) for d in self.edge_dirs)
            out["hull_vertices"] = [list(v) for v in self.hull_vertices]
        return out


def support(f):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    return SupportSet(frozenset(f.terms), f.nvars)


def primitive(v):
    """Divide by the gcd of entries and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no direction")
    v = tuple(x // g for x in v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points):
    """Counter-clockwise hull vertices (monotone chain, collinear points dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def sq_diameter(points):
    pts = list(points)
    if len(pts) < 2:
        return 0
    return max(sum((a - b) ** 2 for a, b in zip(p, q)) for p, q in combinations(pts, 2))


def normalized_volume(s):
    """Twice the Euclidean area of the hull (lattice-normalized), n = 2 only."""
    if s.nvars != 2:
        raise UnsupportedDimension("normalized volume is implemented for n = 2 only")
    hull = convex_hull_2d(s.points)
    if len(hull) < 3:
        return Fraction(0)
    twice_area = 0
    for (x0, y0), (x1, y1) in zip(hull, hull[1:] + hull[:1]):
        twice_area += x0 * y1 - x1 * y0
    return Fraction(abs(twice_area))


def edge_directions(s):
    if s.nvars != 2:
        raise UnsupportedDimension("edge directions are implemented for n = 2 only")
    hull = convex_hull_2d(s.points)
    if len(hull) < 2:
        return frozenset()
    if len(hull) == 2:
        p, q = hull
        return frozenset([primitive((q[0] - p[0], q[1] - p[1]))])
    return frozenset(
        primitive((q[0] - p[0], q[1] - p[1])) for p, q in zip(hull, hull[1:] + hull[:1])
    )


def polytope_summary(s):
    if not s.points:
        raise ZeroPolynomial("empty support")
    card = len(s.points)
    diam = sq_diameter(s.points)
    if s.nvars != 2:
        return PolytopeSummary(card, diam)
    return PolytopeSummary(
        card,
        diam,
        normalized_volume(s),
        edge_directions(s),
        convex_hull_2d(s.points),
    )
