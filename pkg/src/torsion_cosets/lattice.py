"""Integer lattice helpers: row Hermite normal form, integer kernels,
saturation. Matrices are tuples of row tuples of ints."""

from fractions import Fraction

from .ntheory import egcd


def hnf_rows(A):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``. ``H`` is
    upper echelon, pivots positive, entries above a pivot reduced into
    ``[0, pivot)``, zero rows last.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(r) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    row = 0
    pivots = []
    for col in range(n):
        if row >= m:
            break
        for r in range(row + 1, m):
            if H[r][col]:
                a, b = H[row][col], H[r][col]
                g, x, y = egcd(a, b)
                ag, bg = a // g, b // g
                # 2x2 unimodular step [[x, y], [-b/g, a/g]]
                for M in (H, U):
                    r0, r1 = M[row], M[r]
                    M[row] = [x * u + y * v for u, v in zip(r0, r1)]
                    M[r] = [-bg * u + ag * v for u, v in zip(r0, r1)]
        if H[row][col] == 0:
            continue
        if H[row][col] < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
        piv = H[row][col]
        for r in range(row):
            q = H[r][col] // piv
            if q:
                H[r] = [u - q * v for u, v in zip(H[r], H[row])]
                U[r] = [u - q * v for u, v in zip(U[r], U[row])]
        pivots.append(col)
        row += 1
    return tuple(map(tuple, H)), tuple(map(tuple, U))


def rank(A):
    H, _ = hnf_rows(A)
    return sum(1 for r in H if any(r))


def transpose(A, ncols=None):
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def left_kernel(A):
    """Basis (rows) of ``{u in Z^m : u @ A == 0}``; always saturated."""
    H, U = hnf_rows(A)
    return tuple(U[i] for i, r in enumerate(H) if not any(r))


def canonical_rows(rows):
    """Canonical basis (nonzero HNF rows) of the lattice spanned by ``rows``."""
    if not rows:
        return ()
    H, _ = hnf_rows(rows)
    return tuple(r for r in H if any(r))


def saturate_columns(M, n):
    """Basis rows of the saturation of the lattice spanned by the columns of
    ``M`` (given as an n x r matrix), in canonical HNF."""
    if not M or not M[0]:
        return ()
    chars = left_kernel(M)
    if not chars:
        return canonical_rows(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    sat = left_kernel(transpose(chars))
    return canonical_rows(sat)


def inverse_unimodular(U):
    """Exact inverse of a unimodular integer matrix."""
    n = len(U)
    M = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(U)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c])
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    out = tuple(tuple(int(v) for v in row[n:]) for row in M)
    return out


def reduce_mod_rows(v, H):
    """Reduce ``v`` modulo the full-rank upper-echelon lattice ``H`` so each
    pivot coordinate lands in ``[0, pivot)``."""
    v = list(v)
    for row in H:
        col = next(i for i, x in enumerate(row) if x)
        q = v[col] // row[col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)
