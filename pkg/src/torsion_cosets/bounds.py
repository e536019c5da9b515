"""Closed-form bounds on the number of maximal torsion cosets.

Every bound is returned exactly as a Python int when it fits in the bit
budget, and always as a natural-log magnitude.
"""

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ToricUnavailable
from .ntheory import primes_upto

DEFAULT_BIT_BUDGET = 2**20
# primes_upto is a sieve; beyond this P_N is reported by log only
_PRIMES_SIEVE_LIMIT = 10**7


@dataclass(frozen=True)
class Bound:
    """A bound value: ``exact`` is None when it exceeds the bit budget."""

    exact: Optional[int]
    log: float

    def satisfied_by(self, count):
        if self.exact is not None:
            return count <= self.exact
        return count == 0 or math.log(count) <= self.log

    def to_json(self):
        if self.exact is None:
            return {"log_e": self.log}
        return int_to_str(self.exact)


def int_to_str(v):
    """Decimal string of an int of any size (lifts the interpreter's digit cap)."""
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return str(v)
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        return str(v)
    finally:
        sys.set_int_max_str_digits(old)


def _power_bound(base, exponent, bit_budget):
    """``base**exponent`` guarded by the bit budget."""
    log = exponent * math.log(base)
    if exponent * math.log2(base) > bit_budget:
        return Bound(None, log)
    return Bound(base**exponent, log)


def n_of_d(n, d):
    """Number of monomials of degree <= d in n variables: C(n+d, d)."""
    return math.comb(n + d, d)


def schmidt_bound_log(n, d):
    """Natural log of Schmidt's bound exp(3 N(d)^{3/2} log N(d))."""
    N = n_of_d(n, d)
    return 3.0 * N**1.5 * math.log(N)


def primes_product(N):
    """Product of all primes <= N (1 for N < 2)."""
    out = 1
    for p in primes_upto(N):
        out *= p
    return out


def _primes_product_bound(N, bit_budget):
    if N > _PRIMES_SIEVE_LIMIT:
        # theta(N) ~ N; only the magnitude is meaningful here
        return Bound(None, float(N))
    primes = primes_upto(N)
    log = math.fsum(math.log(p) for p in primes)
    if log / math.log(2) > bit_budget:
        return Bound(None, log)
    return Bound(primes_product(N), log)


def _ceil_k_pow_half_k(k):
    """ceil(k^(k/2)), exact."""
    if k % 2 == 0:
        return k ** (k // 2)
    return math.isqrt(k**k - 1) + 1


def exponent_bound(sq_diam, k, aliev=True):
    """Cap on the cofactor m for codimension-k cosets: D^{2k} (times k^{k/2} without Aliev)."""
    if sq_diam < 1 or k < 1:
        raise ValueError("sq_diam and k must be >= 1")
    m = sq_diam**k
    return m if aliev else m * _ceil_k_pow_half_k(k)


def uniform_t(sq_diam, n):
    """t_max = D^{n(n-1)}, written with the squared diameter."""
    return sq_diam ** (n * (n - 1) // 2)


def codim_t(sq_diam, n, aliev=True):
    """Largest per-codimension cap over k = 1..n."""
    return max(exponent_bound(sq_diam, k, aliev) for k in range(1, n + 1))


def uniform_exponent(sq_diam, n, card):
    return uniform_t(sq_diam, n) * primes_product(card)


def coset_bound_ab(d, n, dim_v, bit_budget=DEFAULT_BIT_BUDGET):
    """(d^2 3^n)^(2^(2 dim V))."""
    _check(d, n, dim_v)
    return _power_bound(d * d * 3**n, 2 ** (2 * dim_v), bit_budget)


def coset_bound_abc(d, n, dim_v, p=2, q=3, bit_budget=DEFAULT_BIT_BUDGET):
    """(d^3 (pq+1)^n)^(2^(3 dim V))."""
    _check(d, n, dim_v)
    if p == q:
        raise ValueError("p and q must be distinct")
    return _power_bound(d**3 * (p * q + 1) ** n, 2 ** (3 * dim_v), bit_budget)


def coset_bound_abc_toric(norm_volume, n, dim_v, p=2, q=3, bit_budget=DEFAULT_BIT_BUDGET):
    """The abc bound with deg V replaced by the normalized Newton volume."""
    vol = Fraction(norm_volume)
    if vol < 1:
        raise ToricUnavailable("Newton polytope is degenerate (volume 0)")
    if vol.denominator != 1:
        raise ValueError("normalized lattice volume must be an integer")
    return coset_bound_abc(int(vol), n, dim_v, p, q, bit_budget)


def _check(d, n, dim_v):
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    if not 0 <= dim_v <= n:
        raise ValueError("dim V must satisfy 0 <= dim V <= n")


def w_degrees(n, p=2, q=3):
    """(deg W1, dim W1, deg W2, dim W2)."""
    if p == q:
        raise ValueError("p and q must be distinct")
    return 3**n, n, (p * q + 1) ** n, 2 * n


def default_sq_diameter(n, d):
    """Squared diameter of the full degree-d simplex, the worst case when
    no Newton polytope is given."""
    return 2 * d * d if n >= 2 else d * d


def compare_bounds(n, d, dim_v, p=2, q=3, norm_volume=None):
    """Side-by-side log magnitudes with a winner per pairing (smaller wins)."""
    schmidt = schmidt_bound_log(n, d)
    ab = coset_bound_ab(d, n, dim_v, bit_budget=0).log
    abc = coset_bound_abc(d, n, dim_v, p, q, bit_budget=0).log
    out = {
        "log_schmidt": schmidt,
        "log_coset_ab": ab,
        "log_coset_abc": abc,
        "ab_vs_schmidt": "coset" if ab < schmidt else "schmidt",
        "abc_vs_schmidt": "coset" if abc < schmidt else "schmidt",
    }
    if norm_volume is not None and norm_volume >= 1:
        toric = coset_bound_abc_toric(norm_volume, n, dim_v, p, q, bit_budget=0).log
        out["log_coset_abc_toric"] = toric
        out["toric_vs_plain"] = "toric" if toric < abc else "plain"
    return out


@dataclass
class BoundsReport:
    n: int
    d: int
    dim_v: int
    p: int
    q: int
    n_of_d: int
    schmidt_log: float
    card: int
    sq_diameter: int
    primes_product: Bound
    t_uniform: int
    t_codim: int
    exponent_uniform: Bound
    exponent_codim: Bound
    bound_ab: Bound
    bound_abc: Bound
    bound_abc_toric: Optional[Bound]
    deg_w1: int
    dim_w1: int
    deg_w2: int
    dim_w2: int
    comparison: dict = field(default_factory=dict)

    def to_json(self):
        out = {}
        for k, v in self.__dict__.items():
            if isinstance(v, Bound):
                out[k] = v.to_json()
            elif v is None:
                out[k] = None
            elif isinstance(v, int) and v.bit_length() > 53:
                out[k] = int_to_str(v)
            else:
                out[k] = v
        return out


def bounds_report(
    n,
    d,
    dim_v,
    p=2,
    q=3,
    *,
    card=None,
    sq_diameter=None,
    norm_volume=None,
    aliev=True,
    bit_budget=DEFAULT_BIT_BUDGET,
):
    """Evaluate every bound for the given data.

    Without polytope data, ``card`` defaults to N(d) and the diameter to
    that of the full degree-d simplex.
    """
    nd = n_of_d(n, d)
    card = nd if card is None else card
    sq = default_sq_diameter(n, d) if sq_diameter is None else max(sq_diameter, 1)
    pn = _primes_product_bound(card, bit_budget)
    tu = uniform_t(sq, n)
    tc = codim_t(sq, n, aliev)

    def scaled(t):
        log = math.log(t) + pn.log
        if pn.exact is None or log / math.log(2) > bit_budget:
            return Bound(None, log)
        return Bound(t * pn.exact, log)

    toric = None
    if norm_volume is not None and norm_volume >= 1:
        toric = coset_bound_abc_toric(norm_volume, n, dim_v, p, q, bit_budget)
    dw1, mw1, dw2, mw2 = w_degrees(n, p, q)
    return BoundsReport(
        n=n,
        d=d,
        dim_v=dim_v,
        p=p,
        q=q,
        n_of_d=nd,
        schmidt_log=schmidt_bound_log(n, d),
        card=card,
        sq_diameter=sq,
        primes_product=pn,
        t_uniform=tu,
        t_codim=tc,
        exponent_uniform=scaled(tu),
        exponent_codim=scaled(tc),
        bound_ab=coset_bound_ab(d, n, dim_v, bit_budget),
        bound_abc=coset_bound_abc(d, n, dim_v, p, q, bit_budget),
        bound_abc_toric=toric,
        deg_w1=dw1,
        dim_w1=mw1,
        deg_w2=dw2,
        dim_w2=mw2,
        comparison=compare_bounds(n, d, dim_v, p, q, norm_volume),
    )
