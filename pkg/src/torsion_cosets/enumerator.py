"""Maximal torsion cosets on plane curves V(f) in G_m^2.

Two routes find the torsion points: a brute-force scan over every
admissible order, and a scan restricted by the Galois sieve (resultants of
f against its sigma-twists). Positive-dimensional cosets come from the
edge directions of the Newton polygon.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .arith import (
    LaurentPoly,
    UniPoly,
    cyclotomic_factor_orders,
    eval_is_zero_at_torsion,
    poly_gcd,
    resultant,
    substitute_powers,
)
from .bounds import DEFAULT_BIT_BUDGET, Bound, bounds_report, codim_t, primes_product, uniform_t
from .cosets import (
    TorsionCoset,
    TorsionPoint,
    coset_contains,
    make_coset,
    maximal_filter,
    point_coset,
    subtorus_from_columns,
)
from .errors import BoundViolation, CapTooLarge, ZeroPolynomial
from .newton import polytope_summary, support
from .ntheory import egcd
from .scan import scan_order, scan_order_1d
from .sigma import SigmaPQ, case_signs, kernel_pq_check

log = logging.getLogger(__name__)

DEFAULT_GRID_BUDGET = 5 * 10**7

# (exponent, signs) of every sigma-twist used by the sieve: e = 2 covers
# cases a/b, e = 1 with a nontrivial sign covers case c.
SIEVE_PATTERNS = (
    (2, (1, 1)),
    (2, (1, -1)),
    (2, (-1, 1)),
    (2, (-1, -1)),
    (1, (1, -1)),
    (1, (-1, 1)),
    (1, (-1, -1)),
)


@dataclass
class EnumConfig:
    order_cap: Optional[int] = None
    use_aliev: bool = True
    p: int = 2
    q: int = 3
    sieve_enabled: bool = True
    grid_budget: int = DEFAULT_GRID_BUDGET
    bit_budget: int = DEFAULT_BIT_BUDGET
    backend: Optional[str] = None

    def __post_init__(self):
        if self.order_cap is not None and self.order_cap < 1:
            raise ValueError("order_cap must be >= 1")
        SigmaPQ(self.p, self.q)


@dataclass
class EnumResult:
    cosets: list
    count: int
    admissible_orders: list
    bound_check: dict
    bounds: object = None
    summary: object = None
    sieve: object = None
    points_scanned: int = 0

    def to_json(self):
        out = {
            "count": self.count,
            "cosets": [c.to_json() for c in self.cosets],
            "admissible_orders": {
                "count": len(self.admissible_orders),
                "max": max(self.admissible_orders) if self.admissible_orders else 0,
                "orders": list(self.admissible_orders),
            },
            "bound_check": {
                k: {"value": v.to_json(), "satisfied": ok} for k, (v, ok) in self.bound_check.items()
            },
            "torsion_points_found": self.points_scanned,
        }
        if self.bounds is not None:
            out["bounds"] = self.bounds.to_json()
        if self.summary is not None:
            out["polytope"] = self.summary.to_json()
        if self.sieve is not None:
            out["sieve"] = self.sieve.to_json()
        return out


def _require_plane_curve(f):
    if f.nvars != 2:
        raise ValueError("enumeration is implemented for bivariate polynomials only")
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial defines the whole torus")


def enumeration_t_max(summary, n, use_aliev=True):
    sq = max(summary.sq_diameter, 1)
    return max(uniform_t(sq, n), codim_t(sq, n, use_aliev))


def admissible_orders(summary, n, cfg=None):
    """Orders L dividing t * P_N for some t <= t_max, ascending.

    Since P_N is squarefree, the least such t is L / gcd(L, P_N).
    """
    cfg = cfg or EnumConfig()
    P = primes_product(summary.card)
    t_max = enumeration_t_max(summary, n, cfg.use_aliev)
    top = t_max * P
    if cfg.order_cap is None:
        if top * top > cfg.grid_budget:
            raise CapTooLarge(
                f"largest admissible order {top} implies a grid beyond the budget "
                f"{cfg.grid_budget}; pass an order cap"
            )
    else:
        top = min(top, cfg.order_cap)
    orders = [L for L in range(1, top + 1) if L // gcd(L, P) <= t_max]
    if cfg.order_cap is None:
        grid = sum(L**n for L in orders)
        if grid > cfg.grid_budget:
            raise CapTooLarge(f"enumeration grid {grid} exceeds the budget {cfg.grid_budget}")
    return orders


def brute_force_points(f, orders, pair_filter=None, backend=None):
    """Torsion points of V(f) of every listed order, sorted.

    ``pair_filter(L, o1, o2)`` optionally restricts which coordinate-order
    pairs are scanned.
    """
    if f.is_zero():
        raise ZeroPolynomial("brute force on the zero polynomial")
    out = []
    for L in orders:
        if f.nvars == 1:
            out.extend(TorsionPoint(L, (a,)) for a in scan_order_1d(f, L))
            continue
        flt = None if pair_filter is None else (lambda o1, o2, L=L: pair_filter(L, o1, o2))
        out.extend(TorsionPoint(L, ab) for ab in scan_order(f, L, flt, backend))
    return sorted(set(out))


def _laurent_uni(terms):
    """UniPoly from ``{exponent: coeff}`` after shifting to exponent 0."""
    lo = min(terms)
    hi = max(terms)
    return UniPoly([terms.get(k, 0) for k in range(lo, hi + 1)])


def detect_positive_cosets(f, summary=None):
    """One-dimensional torsion cosets contained in V(f).

    For each primitive edge direction m of the Newton polygon, the cosets
    ``{x**m = zeta}`` are parametrised as ``t -> zeta**u * t**c`` with
    ``<m, u> = 1`` and ``<m, c> = 0``; f vanishes on one exactly when each
    group of terms with equal ``<c, e>`` vanishes at ``zeta``.
    """
    _require_plane_curve(f)
    summary = summary or polytope_summary(support(f))
    found = []
    for m in sorted(summary.edge_dirs):
        _, u1, u2 = egcd(m[0], m[1])
        u = (u1, u2)
        c = (-m[1], m[0])
        groups = {}
        for e, coef in f.terms.items():
            s = c[0] * e[0] + c[1] * e[1]
            k = u[0] * e[0] + u[1] * e[1]
            groups.setdefault(s, {})
            groups[s][k] = groups[s].get(k, 0) + coef
        G = UniPoly()
        for terms in groups.values():
            G = poly_gcd(G, _laurent_uni(terms))
        G = G.shift_down(G.valuation())
        if G.degree < 1:
            continue
        torus = subtorus_from_columns(c)
        for M in sorted(cyclotomic_factor_orders(G)):
            for j in range(M):
                if gcd(j, M) != 1:
                    continue
                if not all(
                    eval_is_zero_at_torsion(_group_poly(terms), (j,), M)
                    for terms in groups.values()
                ):
                    raise AssertionError("gcd root failed exact re-check")
                base = TorsionPoint(M, (j * u[0], j * u[1]))
                found.append(make_coset(base, torus))
    return sorted(set(found), key=TorsionCoset.sort_key)


def _group_poly(terms):
    return LaurentPoly({(k,): v for k, v in terms.items()}, 1)


@dataclass
class PatternInfo:
    """Candidate coordinate orders for one sigma-twist; None = unconstrained."""

    x_orders: Optional[frozenset]
    y_orders: Optional[frozenset]


@dataclass
class SieveResult:
    patterns: dict
    positive_dim: bool
    orders: frozenset = field(default_factory=frozenset)

    def allows(self, L, o1, o2):
        e, signs = case_signs(L, (o1, o2))
        info = self.patterns[(e, signs)]
        return (info.x_orders is None or o1 in info.x_orders) and (
            info.y_orders is None or o2 in info.y_orders
        )

    def to_json(self):
        def enc(s):
            return None if s is None else sorted(s)

        return {
            "orders": sorted(self.orders),
            "positive_dimensional_flag": self.positive_dim,
            "patterns": [
                {
                    "exponent": e,
                    "signs": list(signs),
                    "x_orders": enc(info.x_orders),
                    "y_orders": enc(info.y_orders),
                }
                for (e, signs), info in sorted(self.patterns.items())
            ],
        }


def _eliminate(f, g, var_index):
    """Candidate orders for the coordinate *not* eliminated; None if the
    resultant vanishes identically."""
    other = 1 - var_index
    if f.degree_in(var_index) == 0:
        # f itself is univariate in the other variable
        h = _laurent_uni({e[other]: c for e, c in f.terms.items()})
        return frozenset(cyclotomic_factor_orders(h.shift_down(h.valuation())))
    R = resultant(f, g, var_index)
    if R.is_zero():
        return None
    return frozenset(cyclotomic_factor_orders(R))


def sieve_ab(f):
    """Coordinate orders allowed by the sigma-twists of f.

    A torsion point w of order L on V(f) also lies on ``f(s1*x**e, s2*y**e)``
    with (e, s) from the point's Galois case, so its x-coordinate order
    divides the resultant in y and its y-coordinate order the one in x.
    """
    _require_plane_curve(f)
    dx, dy = f.degree_in(0), f.degree_in(1)
    patterns = {}
    union = set()
    flag = False
    for e, signs in SIEVE_PATTERNS:
        g = substitute_powers(f, signs, e)
        if dx == 0 and dy == 0:
            # a monomial has no zeros in the torus
            info = PatternInfo(frozenset(), frozenset())
        else:
            info = PatternInfo(
                _eliminate(f, g, 1) if dx > 0 else None,
                _eliminate(f, g, 0) if dy > 0 else None,
            )
        for s in (info.x_orders, info.y_orders):
            if s is None:
                flag = True
            else:
                union |= s
        patterns[(e, signs)] = info
    return SieveResult(patterns, flag, frozenset(union))


def _bound_checks(count, report):
    checks = {
        "bound_ab": report.bound_ab,
        "bound_abc": report.bound_abc,
        "schmidt": Bound(None, report.schmidt_log),
    }
    if report.bound_abc_toric is not None:
        checks["bound_abc_toric"] = report.bound_abc_toric
    return {k: (b, b.satisfied_by(count)) for k, b in checks.items()}


def curve_bounds(f, summary, cfg):
    return bounds_report(
        2,
        max(f.total_degree(), 1),
        1,
        cfg.p,
        cfg.q,
        card=summary.card,
        sq_diameter=summary.sq_diameter,
        norm_volume=summary.norm_volume_2d,
        aliev=cfg.use_aliev,
        bit_budget=cfg.bit_budget,
    )


def _absorb(points, positive):
    return [w for w in points if not any(coset_contains(c, point_coset(w)) for c in positive)]


def enumerate_maximal_cosets(f, cfg=None):
    """All maximal torsion cosets of V(f) with orders in the admissible set.

    Raises BoundViolation if the count exceeds any computed bound.
    """
    cfg = cfg or EnumConfig()
    _require_plane_curve(f)
    summary = polytope_summary(support(f))
    orders = admissible_orders(summary, 2, cfg)
    positive = detect_positive_cosets(f, summary)
    sieve = sieve_ab(f) if cfg.sieve_enabled else None
    points = brute_force_points(f, orders, sieve.allows if sieve else None, cfg.backend)
    log.debug("%d torsion points over %d orders", len(points), len(orders))
    cosets = maximal_filter(positive + [point_coset(w) for w in _absorb(points, positive)])
    report = curve_bounds(f, summary, cfg)
    checks = _bound_checks(len(cosets), report)
    failed = [k for k, (_, ok) in checks.items() if not ok]
    if failed:
        raise BoundViolation(f"count {len(cosets)} exceeds {', '.join(failed)}")
    return EnumResult(
        cosets=cosets,
        count=len(cosets),
        admissible_orders=orders,
        bound_check=checks,
        bounds=report,
        summary=summary,
        sieve=sieve,
        points_scanned=len(points),
    )


def sample_coset_points(coset, levels=(1, 2, 3, 5, 7)):
    """Torsion points of a coset of rank <= 1, from ``t`` of small orders."""
    base, torus = coset.base, coset.torus
    if torus.rank > 1:
        raise ValueError("sampling implemented for rank <= 1")
    pts = {base}
    if torus.rank == 1:
        (col,) = torus.basis
        for k in levels:
            M = base.order * k
            lifted = base.lift(M)
            for s in range(M):
                pts.add(TorsionPoint(M, tuple(a + s * v for a, v in zip(lifted, col))))
    return sorted(pts)


def verification_checks(f, cfg=None):
    """Named pass/fail checks comparing the brute-force and sieve routes."""
    cfg = cfg or EnumConfig()
    _require_plane_curve(f)
    summary = polytope_summary(support(f))
    orders = admissible_orders(summary, 2, cfg)
    positive = detect_positive_cosets(f, summary)
    sieve = sieve_ab(f)
    sigma = SigmaPQ(cfg.p, cfg.q)
    points = brute_force_points(f, orders, None, cfg.backend)
    restricted = brute_force_points(f, orders, sieve.allows, cfg.backend)

    def covered(w):
        o1, o2 = w.coordinate_orders()
        if sieve.allows(w.order, o1, o2):
            return True
        return any(coset_contains(c, point_coset(w)) for c in positive)

    brute = maximal_filter(positive + [point_coset(w) for w in _absorb(points, positive)])
    sieved = maximal_filter(positive + [point_coset(w) for w in _absorb(restricted, positive)])
    sound = all(
        eval_is_zero_at_torsion(f, w.exps, w.order) for c in brute for w in sample_coset_points(c)
    )
    return {
        "sieve_covers_points": all(covered(w) for w in points),
        "kernel_pq": all(kernel_pq_check(w, sigma) for w in points),
        "methods_agree": brute == sieved,
        "cosets_lie_on_curve": sound,
    }


def verify_against_sieve(f, cfg=None):
    return all(verification_checks(f, cfg).values())
