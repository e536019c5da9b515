"""Galois power maps on roots of unity.

sigma is only ever needed on torsion data, so it is represented as a
multiplier on exponents in Z/L: sigma(zeta_L**e) = zeta_L**(c*e).
"""

from dataclasses import dataclass
from functools import lru_cache

from .cosets import TorsionPoint
from .ntheory import egcd, is_prime, split_prime_part


@dataclass(frozen=True)
class SigmaPQ:
    p: int = 2
    q: int = 3

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("p and q must be distinct")
        if not (is_prime(self.p) and is_prime(self.q)):
            raise ValueError("p and q must be prime")


@dataclass(frozen=True)
class CaseTag:
    tag: str
    sigma_exponent: int


def classify_case(K):
    """Case a (K odd): xi -> xi^2; case b (K = 2L, L odd): xi -> xi^(L+2);
    case c (K = 4L): xi -> xi^(2L+1)."""
    if K < 1:
        raise ValueError("K must be positive")
    if K % 2:
        return CaseTag("A", 2 % K)
    if K % 4 == 2:
        return CaseTag("B", (K // 2 + 2) % K)
    return CaseTag("C", (K // 2 + 1) % K)


def case_signs(order, coord_orders):
    """Sign pattern of the induced substitution for a point.

    In cases a/b the action on a coordinate of order L_i is
    ``w -> (-1)**(K/L_i) * w**2`` (exponent 2); in case c it is
    ``w -> (-1)**(K/L_i) * w`` (exponent 1). Returns ``(e, signs)``.
    """
    tag = classify_case(order).tag
    if tag == "A":
        return 2, tuple(1 for _ in coord_orders)
    signs = tuple(-1 if (order // L) % 2 else 1 for L in coord_orders)
    return (2 if tag == "B" else 1), signs


def functional_eq1_holds(w):
    """(sigma(w_i) - w_i^2)(sigma(w_i) + w_i^2) == 0 for each coordinate,
    with sigma from the point's own case (requires 4 not dividing the order)."""
    K = w.order
    if K % 4 == 0:
        raise ValueError("functional equation (1) covers cases a and b only")
    c = classify_case(K).sigma_exponent
    half = K // 2 if K % 2 == 0 else None
    for a in w.exps:
        diff = (c * a - 2 * a) % K
        if diff != 0 and diff != half:
            return False
    return True


@lru_cache(maxsize=4096)
def sigma_pq_multiplier(L, p, q):
    """c mod L with c = q mod p^s and c = p mod K0, where L = p^s * K0."""
    _, ps, K0 = split_prime_part(L, p)
    _, x, y = egcd(ps, K0)
    # x*ps + y*K0 = 1
    return (q * y * K0 + p * x * ps) % L


def sigma_pq_exponent(e, L, s):
    return (sigma_pq_multiplier(L, s.p, s.q) * e) % L


def kernel_pq_check(w, s):
    """Equation (2) on exponents: sigma^2(a) + pq*a == (p+q)*sigma(a) mod L."""
    L = w.order
    c = sigma_pq_multiplier(L, s.p, s.q)
    pq, ppq = s.p * s.q, s.p + s.q
    for a in w.exps:
        sa = c * a % L
        if (c * sa + pq * a - ppq * sa) % L:
            return False
    return True


def sigma_minus_p_kills(w, s):
    """(sigma - p) annihilates w; holds when the order is prime to p."""
    L = w.order
    c = sigma_pq_multiplier(L, s.p, s.q)
    return all((c * a - s.p * a) % L == 0 for a in w.exps)


def crt_split(w, p):
    """Split ``w`` into a p-power-order part and a prime-to-p part.

    With ``a*K0 + b*p^s == 1``: ``w1 = w**(a*K0)``, ``w2 = w**(b*p^s)``.
    """
    _, ps, K0 = split_prime_part(w.order, p)
    _, a, b = egcd(K0, ps)
    w1 = w ** (a * K0)
    w2 = w ** (b * ps)
    return w1, w2, a, b


__all__ = [
    "CaseTag",
    "SigmaPQ",
    "TorsionPoint",
    "case_signs",
    "classify_case",
    "crt_split",
    "functional_eq1_holds",
    "kernel_pq_check",
    "sigma_minus_p_kills",
    "sigma_pq_exponent",
    "sigma_pq_multiplier",
]
