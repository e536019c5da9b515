"""Vectorised fallback for the torsion-grid scan.

Contract shared with the compiled ``_scan`` module: return every pair
``(a, b)`` in ``[0, L)^2`` with ``allowed[cls[a], cls[b]]`` for which
``sum_i coeffs[i] * basis[(a*exps[i,0] + b*exps[i,1]) % L]`` is the zero
vector. ``proj = basis @ r`` for a random integer ``r`` serves as a cheap
necessary test before the full check.
"""

import numpy as np

_BLOCK = 1 << 16


def scan_grid(L, exps, coeffs, proj, basis, cls, allowed):
    exps = np.asarray(exps, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    cls = np.asarray(cls, dtype=np.int64)
    allowed = np.asarray(allowed, dtype=bool)
    bs = np.arange(L, dtype=np.int64)
    kb = (exps[:, 1, None] * bs[None, :]) % L  # (c, L)
    rows = max(1, _BLOCK // max(L, 1))
    found = []
    for a0 in range(0, L, rows):
        a_blk = np.arange(a0, min(L, a0 + rows), dtype=np.int64)
        mask = allowed[cls[a_blk][:, None], cls[None, :]]  # (A, L)
        if not mask.any():
            continue
        ka = (exps[:, 0, None] * a_blk[None, :]) % L  # (c, A)
        idx = ka[:, :, None] + kb[:, None, :]
        idx[idx >= L] -= L  # (c, A, L)
        s = np.einsum("i,iab->ab", coeffs, proj[idx])
        ai, bi = np.nonzero((s == 0) & mask)
        if ai.size == 0:
            continue
        sub = idx[:, ai, bi]  # (c, m)
        full = np.einsum("i,imj->mj", coeffs, basis[sub].astype(np.int64))
        ok = ~full.any(axis=1)
        if ok.any():
            found.append(np.stack([a_blk[ai[ok]], bi[ok]], axis=1))
    if not found:
        return np.zeros((0, 2), dtype=np.int64)
    return np.concatenate(found).astype(np.int64)
