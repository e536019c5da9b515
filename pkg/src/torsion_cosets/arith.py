"""Exact rational, univariate and Laurent polynomial arithmetic.

Coefficients are :class:`fractions.Fraction` throughout. Univariate
polynomials are stored low degree first with no trailing zeros; the zero
polynomial has no coefficients. Laurent polynomials map integer exponent
vectors to nonzero rationals.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DegenerateElimination, ZeroPolynomial
from .ntheory import divisors, totient

Rat = Fraction


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Immutable univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def valuation(self):
        """Lowest exponent with a nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroPolynomial("valuation of the zero polynomial")

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        a, b = self.coeffs, _as_uni(other).coeffs
        n = max(len(a), len(b))
        return UniPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        a, b = self.coeffs, _as_uni(other).coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _as_uni(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        lc = other.lead()
        if len(rem) - 1 < dd:
            return UniPoly(), self
        quo = [Fraction(0)] * (len(rem) - dd)
        b = other.coeffs
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                c = c / lc
                quo[k - dd] = c
                for j in range(dd + 1):
                    rem[k - dd + j] -= c * b[j]
        return UniPoly(quo), UniPoly(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lead()
        return UniPoly(c / lc for c in self.coeffs)

    def shift_down(self, k):
        """Divide by ``x**k``; the low coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError("polynomial not divisible by x^k")
        return UniPoly(self.coeffs[k:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                parts.append(_term_str(c, "x^%d" % k if k > 1 else ("x" if k else "")))
        return _join_terms(parts)


def _as_uni(p):
    if isinstance(p, UniPoly):
        return p
    return UniPoly([p])


def poly_gcd(a, b):
    """Monic gcd in Q[x]; ``gcd(0, 0) == 0``."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@lru_cache(maxsize=None)
def cyclotomic_poly(K):
    """The K-th cyclotomic polynomial, obtained by dividing out proper divisors."""
    if K < 1:
        raise ValueError("K must be positive")
    num = UniPoly.monomial(K) - 1
    for d in divisors(K)[:-1]:
        q, r = divmod(num, cyclotomic_poly(d))
        assert r.is_zero()
        num = q
    return num


class LaurentPoly:
    """Multivariate Laurent polynomial over Q.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero Fractions.
    """

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms, nvars=None):
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(int(v) for v in e)
            if nvars is None:
                nvars = len(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length != {nvars}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        if nvars is None:
            raise ValueError("nvars required for the zero polynomial")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self!s}, nvars={self.nvars})"

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("mismatched number of variables")
            return other
        return LaurentPoly.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return LaurentPoly(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly(t, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = LaurentPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def min_exponents(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no support")
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def shifted(self):
        """Multiply by the monomial making every exponent nonnegative with
        each variable's minimum exponent equal to 0.

        Returns ``(g, shift)`` where ``g = x**shift * self``.
        """
        mins = self.min_exponents()
        shift = tuple(-m for m in mins)
        t = {tuple(a + s for a, s in zip(e, shift)): c for e, c in self.terms.items()}
        return LaurentPoly(t, self.nvars), shift

    def total_degree(self):
        """Total degree after clearing negative exponents and monomial factors."""
        g, _ = self.shifted()
        return max(sum(e) for e in g.terms)

    def degree_in(self, i):
        """Degree in variable ``i`` of the shifted polynomial."""
        g, _ = self.shifted()
        return max(e[i] for e in g.terms)

    def __call__(self, *point):
        acc = 0
        for e, c in self.terms.items():
            m = c
            for x, k in zip(point, e):
                m = m * x**k
            acc += m
        return acc

    def var_names(self):
        if self.nvars == 2:
            return ("x", "y")
        return tuple(f"x{i + 1}" for i in range(self.nvars))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.var_names()
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-v for v in e))):
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            parts.append(_term_str(self.terms[e], mono))
        return _join_terms(parts)


def _term_str(c, mono):
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    return sign, body


def _join_terms(parts):
    out = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out = body if sign == "+" else "-" + body
        else:
            out += f" {sign} {body}"
    return out


def substitute_powers(f, signs, e):
    """Return ``f(signs[0]*x1**e, ..., signs[n-1]*xn**e)``."""
    if len(signs) != f.nvars:
        raise ValueError("signs must have one entry per variable")
    t = {}
    for exp, c in f.terms.items():
        s = 1
        for sg, k in zip(signs, exp):
            if sg == -1 and k % 2:
                s = -s
        t[tuple(k * e for k in exp)] = s * c
    return LaurentPoly(t, f.nvars)


def eval_is_zero_at_torsion(f, a, K):
    """Decide exactly whether ``f(zeta_K**a[0], ..., zeta_K**a[n-1]) == 0``.

    The substitution gives a polynomial in ``t = zeta_K`` reduced mod
    ``t**K - 1``; it vanishes iff ``Phi_K`` divides the remainder.
    """
    if len(a) != f.nvars:
        raise ValueError("exponent vector length must equal nvars")
    if K < 1:
        raise ValueError("K must be positive")
    dense = [Fraction(0)] * K
    for e, c in f.terms.items():
        dense[sum(x * y for x, y in zip(a, e)) % K] += c
    return (UniPoly(dense) % cyclotomic_poly(K)).is_zero()


def _as_uni_in(f, var_index):
    """View a shifted bivariate polynomial as a list of x-polynomials
    (coefficients of powers of the eliminated variable)."""
    other = 1 - var_index
    deg = max(e[var_index] for e in f.terms)
    cols = [dict() for _ in range(deg + 1)]
    for e, c in f.terms.items():
        cols[e[var_index]][e[other]] = c
    return [UniPoly([d.get(k, 0) for k in range(max(d) + 1)]) if d else UniPoly() for d in cols]


def _det(rows):
    """Determinant of a square Fraction matrix by Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / p
                row_r, row_c = m[r], m[col]
                for k in range(col, n):
                    row_r[k] -= factor * row_c[k]
    return det


def _sylvester_det(fc, gc):
    """Resultant of two univariate polynomials given as coefficient lists
    (low degree first, formal degrees len-1)."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return _det(rows)


def _interpolate(xs, ys):
    """Newton interpolation through exact points."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        poly = poly * UniPoly([-xs[i], 1]) + coef[i]
    return poly


def resultant(f, g, var_index):
    """Sylvester resultant of bivariate Laurent polynomials eliminating
    variable ``var_index``, as a polynomial in the remaining variable.

    Negative exponents are first cleared by a monomial shift; the power of
    the remaining variable this introduces is divided back out as far as
    the result allows (coordinates live in the torus, so it carries no
    information).
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("resultant requires bivariate input")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    fs, f_shift = f.shifted()
    gs, g_shift = g.shifted()
    other = 1 - var_index
    fcols = _as_uni_in(fs, var_index)
    gcols = _as_uni_in(gs, var_index)
    m, n = len(fcols) - 1, len(gcols) - 1
    if m == 0 or n == 0:
        raise DegenerateElimination("input is constant in the eliminated variable")
    fdeg = max(p.degree for p in fcols if not p.is_zero())
    gdeg = max(p.degree for p in gcols if not p.is_zero())
    bound = n * fdeg + m * gdeg
    xs = [Fraction(k) for k in range(bound + 1)]
    ys = [_sylvester_det([p(x) for p in fcols], [p(x) for p in gcols]) for x in xs]
    res = _interpolate(xs, ys)
    if res.is_zero():
        return res
    introduced = n * f_shift[other] + m * g_shift[other]
    return res.shift_down(min(introduced, res.valuation()))


def cyclotomic_factor_orders(h):
    """All ``m`` with ``Phi_m | h``; ``h`` must be nonzero."""
    if h.is_zero():
        raise ZeroPolynomial("cyclotomic factors of the zero polynomial")
    deg = h.degree
    found = set()
    for m in range(1, 2 * deg * deg + 1):
        if totient(m) <= deg and (h % cyclotomic_poly(m)).is_zero():
            found.add(m)
    return found


def integer_coefficients(f):
    """Scale ``f`` by the lcm of denominators; return ``{exp: int}``."""
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for e, c in f.terms.items()}
