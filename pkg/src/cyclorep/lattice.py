"""Vectorized evaluation of cyclotomic forms over lattice boxes.

Points are produced over the half-plane {y > 0} | {y = 0, x > 0}; the other
half follows from Phi_n(-x, -y) = Phi_n(x, y), phi(n) being even for n >= 3.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .cyclotomic import cyclo_coeffs

# upper bound on |intermediate| for which int64 Horner is exact
_INT64_SAFE = 2**62
BLOCK_POINTS = 1 << 20


def int64_safe(n: int, height: int) -> bool:
    coeffs = cyclo_coeffs(n).coeffs
    return sum(abs(c) for c in coeffs) * max(height, 1) ** (len(coeffs) - 1) < _INT64_SAFE


def eval_form(n: int, x: np.ndarray, y: np.ndarray, exact_int64: bool) -> np.ndarray:
    """Phi_n elementwise; int64 when ``exact_int64`` (caller checked the bound), else Python ints."""
    dtype = np.int64 if exact_int64 else object
    x = x.astype(dtype)
    y = y.astype(dtype)
    acc = np.zeros(x.shape, dtype=dtype)
    ypow = np.ones(x.shape, dtype=dtype)
    for c in reversed(cyclo_coeffs(n).coeffs):
        acc = acc * x
        if c:
            acc = acc + c * ypow
        ypow = ypow * y
    return acc


def row_blocks(height: int) -> list[tuple[int, int]]:
    """Split rows y = 0..height into half-open ranges of about BLOCK_POINTS points each."""
    width = 2 * height + 1
    rows = max(1, BLOCK_POINTS // width)
    return [(y0, min(y0 + rows, height + 1)) for y0 in range(0, height + 1, rows)]


def eval_block(n: int, height: int, rows: tuple[int, int], min_height: int = 1, exact=None):
    """(x, y, value) over rows[0] <= y < rows[1], |x| <= height, inside the half-plane."""
    if exact is None:
        exact = int64_safe(n, height)
    xs = np.arange(-height, height + 1, dtype=np.int64)
    ys = np.arange(rows[0], rows[1], dtype=np.int64)
    X, Y = np.meshgrid(xs, ys)
    X = X.ravel()
    Y = Y.ravel()
    keep = (Y > 0) | (X > 0)
    if min_height > 1:
        keep &= np.maximum(np.abs(X), Y) >= min_height
    X = X[keep]
    Y = Y[keep]
    return X, Y, eval_form(n, X, Y, exact)


def half_plane_blocks(n: int, height: int, min_height: int = 1):
    """Yield (x, y, value) blocks covering the half-plane box max(|x|,|y|) <= height.

    Points with max(|x|, |y|) < min_height are dropped; the origin never appears.
    """
    if height < max(min_height, 1):
        return
    exact = int64_safe(n, height)
    for rows in row_blocks(height):
        yield eval_block(n, height, rows, min_height, exact)


def values_at_most(n: int, height: int, limit: int, min_height: int = 1, workers: int = 1) -> list[np.ndarray]:
    """Per-block arrays of the half-plane values <= limit, in block order."""
    if height < max(min_height, 1):
        return []
    exact = int64_safe(n, height)

    def job(rows):
        _, _, V = eval_block(n, height, rows, min_height, exact)
        return V[V <= limit].astype(np.int64)

    blocks = row_blocks(height)
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(job, blocks))
    return [job(b) for b in blocks]
