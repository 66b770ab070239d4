"""Independent reference implementations used only by the tests.

None of these call into the package's factorization, coefficient or
enumeration code paths.
"""

from math import gcd, isqrt

import numpy as np


def trial_primes(limit):
    return [k for k in range(2, limit + 1) if all(k % d for d in range(2, isqrt(k) + 1))]


def gcd_totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _divmod_poly(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    assert not any(a), "remainder"
    return q


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


_CACHE = {}


def cyclo_by_recursion(n):
    """phi_n = (X^n - 1) / prod_{d | n, d < n} phi_d."""
    if n in _CACHE:
        return _CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _divmod_poly(poly, cyclo_by_recursion(d))
    _CACHE[n] = poly
    return poly


def form_value(coeffs, x, y):
    d = len(coeffs) - 1
    return sum(c * x**i * y ** (d - i) for i, c in enumerate(coeffs))


def box_values(n, box):
    """Exact values of Phi_n on the full square |x|,|y| <= box as an object array, with X, Y."""
    coeffs = cyclo_by_recursion(n)
    r = np.arange(-box, box + 1, dtype=object)
    X, Y = np.meshgrid(r, r)
    acc = np.zeros(X.shape, dtype=object)
    d = len(coeffs) - 1
    for i, c in enumerate(coeffs):
        if c:
            acc = acc + c * X**i * Y ** (d - i)
    return X, Y, acc


def _horner_float(coeffs, X, Y):
    acc = np.zeros(X.shape)
    ypow = np.ones(X.shape)
    for c in reversed(coeffs):
        acc = acc * X + c * ypow
        ypow = ypow * Y
    return acc


def brute_reps(m_max, n_max=200, box=30):
    """dict m -> set of (n, x, y), height >= 2, scanning every n <= n_max and the whole box.

    A float pass with the standard Horner error bound 2 d u sum|c_i x^i y^(d-i)|
    discards points that are certainly > m_max; survivors are checked exactly.
    """
    out = {m: set() for m in range(1, m_max + 1)}
    r = np.arange(-box, box + 1, dtype=np.float64)
    X, Y = np.meshgrid(r, r)
    H = np.maximum(np.abs(X), np.abs(Y))
    u = np.finfo(float).eps
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(3, n_max + 1):
            coeffs = cyclo_by_recursion(n)
            d = len(coeffs) - 1
            approx = _horner_float(coeffs, X, Y)
            mag = _horner_float([abs(c) for c in coeffs], np.abs(X), np.abs(Y))
            maybe = ~(approx - 4 * d * u * mag > m_max) & (H >= 2)
            for x, y in zip(X[maybe], Y[maybe]):
                v = form_value(coeffs, int(x), int(y))
                if 1 <= v <= m_max:
                    out[v].add((n, int(x), int(y)))
    return out


def lattice_count(N, n_max=300):
    """Triples (n, x, y), n >= 3, height >= 2, Phi_n(x,y) <= N, over boxes of half-width 2 N^(1/phi(n)) + 1."""
    total = 0
    for n in range(3, n_max + 1):
        coeffs = cyclo_by_recursion(n)
        d = len(coeffs) - 1
        if 3 ** (d // 2) > N:
            # height >= 2 forces a value >= (sqrt(3)/2 * 2)^d
            continue
        box = int(2 * N ** (1 / d)) + 1
        r = np.arange(-box, box + 1, dtype=np.int64)
        if sum(abs(c) for c in coeffs) * box**d < 2**62:
            for x in r:
                xs = np.full_like(r, x)
                acc = np.zeros_like(r)
                for i, c in enumerate(coeffs):
                    if c:
                        acc += c * xs**i * r ** (d - i)
                h = np.maximum(abs(x), np.abs(r))
                total += int(((acc <= N) & (h >= 2)).sum())
        else:
            X, Y, V = box_values(n, box)
            Hh = np.maximum(np.abs(X.astype(np.int64)), np.abs(Y.astype(np.int64)))
            total += int(((V <= N) & (Hh >= 2)).sum())
    return total
