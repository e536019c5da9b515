"""Exact zero scans of a Laurent polynomial over torsion points of one order.

``f(zeta_L**a, zeta_L**b) == 0`` is decided with integer coordinates of
``zeta_L**k`` in a fixed Q-basis of Q(zeta_L): the tensor product over
``p**e || L`` of the power bases ``{zeta**i : i < phi(p**e)}``, where
``zeta_L**k`` maps to the tensor of ``zeta_{p**e}**(k mod p**e)``. Entries
are in {-1, 0, 1}. This realizes zeta_L as the product of the
zeta_{p**e}, a Galois conjugate of exp(2 pi i / L); vanishing of a rational
polynomial is conjugation-invariant, so the zero set is unchanged.

The compiled kernel is used when it was built; set
``TORSION_COSETS_BACKEND=python`` to force the numpy fallback.
"""

import os
from functools import lru_cache
from math import gcd

import numpy as np

from . import _scan_py
from .arith import eval_is_zero_at_torsion, integer_coefficients
from .ntheory import divisors, factorize, lcm

try:
    from . import _scan as _scan_c
except ImportError:  # extension not built
    _scan_c = None

HAVE_COMPILED = _scan_c is not None
BACKENDS = ("compiled", "python") if HAVE_COMPILED else ("python",)


def default_backend():
    env = os.environ.get("TORSION_COSETS_BACKEND", "").strip().lower()
    if env == "python" or not HAVE_COMPILED:
        return "python"
    return "compiled"


def _kernel(backend):
    backend = backend or default_backend()
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled scan kernel is not available")
        return _scan_c.scan_grid
    if backend == "python":
        return _scan_py.scan_grid
    raise ValueError(f"unknown backend {backend!r}")


@lru_cache(maxsize=64)
def _prime_power_table(p, e):
    pe = p**e
    step = p ** (e - 1)
    phi = step * (p - 1)
    tab = np.zeros((pe, phi), dtype=np.int8)
    for v in range(pe):
        j, u = v % step, v // step
        if u < p - 1:
            tab[v, j + step * u] = 1
        else:
            for w in range(p - 1):
                tab[v, j + step * w] = -1
    return tab


@lru_cache(maxsize=512)
def cyclotomic_basis(L):
    """``(L, phi(L))`` int8 matrix: row k holds the coordinates of zeta_L**k."""
    ks = np.arange(L)
    B = np.ones((L, 1), dtype=np.int8)
    for p, e in factorize(L):
        pe = p**e
        T = _prime_power_table(p, e)[ks % pe]
        B = (B[:, :, None] * T[:, None, :]).reshape(L, -1)
    B.setflags(write=False)
    return B


_PROJ_RANGE = 1 << 15


@lru_cache(maxsize=512)
def _projection(L):
    rng = np.random.default_rng(0x5EED + L)
    B = cyclotomic_basis(L).astype(np.int64)
    r = rng.integers(-_PROJ_RANGE, _PROJ_RANGE + 1, size=B.shape[1])
    proj = B @ r
    proj.setflags(write=False)
    return proj


def _classes(L):
    """Divisor-class index of gcd(a, L) for every a, plus coordinate orders."""
    divs = divisors(L)
    pos = {d: i for i, d in enumerate(divs)}
    cls = np.array([pos[gcd(a, L)] for a in range(L)], dtype=np.int64)
    orders = [L // d for d in divs]
    return cls, orders


def _allowed(L, orders, pair_filter):
    D = len(orders)
    allowed = np.zeros((D, D), dtype=np.uint8)
    for i, o1 in enumerate(orders):
        for j, o2 in enumerate(orders):
            if lcm(o1, o2) == L and (pair_filter is None or pair_filter(o1, o2)):
                allowed[i, j] = 1
    return allowed


def scan_order(f, L, pair_filter=None, backend=None):
    """All ``(a, b)`` of exact order ``L`` with ``f(zeta_L**a, zeta_L**b) == 0``.

    ``pair_filter(o1, o2)`` may further restrict by the coordinate orders.
    Returns a sorted list of pairs.
    """
    if f.nvars != 2:
        raise ValueError("scan_order expects a bivariate polynomial")
    cls, orders = _classes(L)
    allowed = _allowed(L, orders, pair_filter)
    if not allowed.any():
        return []
    icoef = integer_coefficients(f)
    items = sorted(icoef.items())
    total = sum(abs(c) for _, c in items)
    proj = _projection(L)
    if total * max(1, int(np.abs(proj).max())) >= 1 << 62:
        return _scan_exact(f, L, cls, orders, allowed)
    exps = np.array([[e[0] % L, e[1] % L] for e, _ in items], dtype=np.int64)
    coeffs = np.array([c for _, c in items], dtype=np.int64)
    basis = cyclotomic_basis(L)
    hits = _kernel(backend)(L, exps, coeffs, proj, basis, cls, allowed)
    return sorted((int(a), int(b)) for a, b in hits)


def _scan_exact(f, L, cls, orders, allowed):
    # coefficients too large for int64 accumulation
    out = []
    for a in range(L):
        for b in range(L):
            if allowed[cls[a], cls[b]] and eval_is_zero_at_torsion(f, (a, b), L):
                out.append((a, b))
    return out


def scan_order_1d(f, L):
    """Univariate analogue: all ``a`` of exact order ``L`` with f(zeta_L**a) == 0."""
    B = cyclotomic_basis(L).astype(np.int64)
    icoef = integer_coefficients(f)
    out = []
    for a in range(L):
        if gcd(a, L) != 1 and L != 1:
            continue
        acc = np.zeros(B.shape[1], dtype=object)
        for e, c in icoef.items():
            acc = acc + c * B[(a * e[0]) % L]
        if not acc.any():
            out.append(a)
    return out
