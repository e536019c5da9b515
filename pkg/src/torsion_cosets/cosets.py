"""Torsion points, subtori and torsion cosets in canonical form.

A torsion point of order K is stored as an exponent vector ``a`` with
coordinates ``zeta_K**a_i``. A subtorus is the image of ``t -> t**M`` for a
saturated integer matrix ``M`` (columns = cocharacters), kept in Hermite
normal form so that equal subtori compare equal.
"""

from dataclasses import dataclass
from math import gcd

from .errors import RankDeficient
from .lattice import (
    canonical_rows,
    hnf_rows,
    inverse_unimodular,
    left_kernel,
    rank,
    reduce_mod_rows,
    saturate_columns,
    transpose,
)
from .ntheory import lcm


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """Cyclotomic point; ``order`` is always the exact order."""

    order: int
    exps: tuple

    def __post_init__(self):
        K = int(self.order)
        if K < 1:
            raise ValueError("order must be positive")
        exps = tuple(int(a) % K for a in self.exps)
        g = K
        for a in exps:
            g = gcd(g, a)
        object.__setattr__(self, "order", K // g)
        object.__setattr__(self, "exps", tuple(a // g for a in exps))

    @classmethod
    def identity(cls, n):
        return cls(1, (0,) * n)

    @property
    def n(self):
        return len(self.exps)

    def lift(self, K):
        """Exponents at level ``K`` (a multiple of the order)."""
        if K % self.order:
            raise ValueError("K must be a multiple of the point order")
        s = K // self.order
        return tuple(a * s for a in self.exps)

    def __mul__(self, other):
        K = lcm(self.order, other.order)
        return TorsionPoint(K, tuple(a + b for a, b in zip(self.lift(K), other.lift(K))))

    def __pow__(self, k):
        return TorsionPoint(self.order, tuple(a * k for a in self.exps))

    def inverse(self):
        return self ** -1

    def coordinate_orders(self):
        return tuple(self.order // gcd(self.order, a) for a in self.exps)


@dataclass(frozen=True)
class Subtorus:
    """Connected subtorus of G_m^n.

    ``basis`` holds the r cocharacter columns as canonical HNF rows.
    """

    basis: tuple
    n: int

    @property
    def rank(self):
        return len(self.basis)

    @property
    def matrix(self):
        """The n x r matrix whose columns generate the cocharacter lattice."""
        return transpose(self.basis, self.n) if self.basis else tuple(() for _ in range(self.n))

    @property
    def characters(self):
        """Basis of characters vanishing on the subtorus (saturated)."""
        if not self.basis:
            return tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n))
        return left_kernel(self.matrix)

    @classmethod
    def trivial(cls, n):
        return cls((), n)

    @classmethod
    def full(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    def contains_torus(self, other):
        chars = self.characters
        return all(
            sum(c * v for c, v in zip(chi, col)) == 0 for chi in chars for col in other.basis
        )

    def to_json(self):
        return [list(r) for r in self.matrix]


def saturate_and_canonicalize(M, n=None):
    """Subtorus generated by the columns of the n x r matrix ``M``, saturated
    (hence connected) and in Hermite normal form."""
    M = tuple(tuple(int(v) for v in row) for row in M)
    if n is None:
        n = len(M)
    if not M or not M[0]:
        return Subtorus.trivial(n)
    r = len(M[0])
    if rank(transpose(M)) < r:
        raise RankDeficient("subtorus generators are linearly dependent")
    return Subtorus(saturate_columns(M, n), n)


def subtorus_from_columns(*cols):
    n = len(cols[0])
    return saturate_and_canonicalize(transpose(cols), n)


def point_in_subtorus(w, T):
    K = w.order
    return all(sum(c * a for c, a in zip(chi, w.exps)) % K == 0 for chi in T.characters)


@dataclass(frozen=True)
class TorsionCoset:
    base: TorsionPoint
    torus: Subtorus

    @property
    def dimension(self):
        return self.torus.rank

    @property
    def order(self):
        return self.base.order

    def sort_key(self):
        return (-self.torus.rank, self.base.order, self.base.exps, self.torus.basis)

    def to_json(self):
        return {
            "order": self.base.order,
            "base": list(self.base.exps),
            "torus": self.torus.to_json(),
            "dimension": self.dimension,
        }


def make_coset(base, torus):
    """Canonical coset ``base * torus``.

    The base is replaced by the representative of least order (the coset's
    exponent), reduced to the canonical residue modulo the torus.
    """
    n = torus.n
    r = torus.rank
    if r == 0:
        return TorsionCoset(base, torus)
    if r == n:
        return TorsionCoset(TorsionPoint.identity(n), torus)
    K = base.order
    C = torus.matrix
    _, U = hnf_rows(C)
    chars = U[r:]
    V = inverse_unimodular(U)
    D = tuple(row[r:] for row in V)
    beta = [sum(c * a for c, a in zip(chi, base.exps)) % K for chi in chars]
    g = K
    for b in beta:
        g = gcd(g, b)
    Kq = K // g
    beta = [b // g for b in beta]
    rep = tuple(sum(d * b for d, b in zip(drow, beta)) for drow in D)
    lat = [tuple(Kq * int(i == j) for j in range(n)) for i in range(n)] + list(torus.basis)
    H = canonical_rows(tuple(lat))
    rep = reduce_mod_rows(rep, H)
    return TorsionCoset(TorsionPoint(Kq, rep), torus)


def point_coset(w):
    return TorsionCoset(w, Subtorus.trivial(w.n))


def coset_contains(c1, c2):
    """True iff the set ``c2`` is contained in ``c1``."""
    if not c1.torus.contains_torus(c2.torus):
        return False
    return point_in_subtorus(c2.base * c1.base.inverse(), c1.torus)


def maximal_filter(cosets):
    """Drop duplicates and every coset strictly inside another."""
    uniq = sorted(set(cosets), key=TorsionCoset.sort_key)
    keep = []
    for c in uniq:
        # equal-rank containment forces equality of canonical forms
        if not any(o.dimension > c.dimension and coset_contains(o, c) for o in keep):
            keep.append(c)
    return keep
