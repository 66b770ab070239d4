"""Minimum c_n of phi_n over the reals, its minimizer t_n, and lower bounds for c_n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import factorize, is_prime, totient
from .cyclotomic import cyclo_coeffs, cyclo_deriv_real, cyclo_eval_real, form_eval, reduce_index
from .errors import DomainError

__all__ = [
    "FormMinimum",
    "cn",
    "tp_for_prime",
    "cn_lower_bounds",
    "form_lower_bound_check",
    "golden_section",
    "GRID_POINTS",
]

GRID_POINTS = 4096
EVAL_SLACK = 1e-12
INVPHI = (math.sqrt(5) - 1) / 2
INVPHI2 = (3 - math.sqrt(5)) / 2


@dataclass(frozen=True)
class FormMinimum:
    """Result of minimizing phi_n on [-1, 1].

    ``t_n`` follows the table convention: the minimizer of phi_core (over
    [-1, 0] when 4 | n), sign flipped when n = 2 * core. ``t_original`` is a minimizer of phi_n itself,
    recovered through ``substitution``. Both are None for powers of two.
    """

    index: int
    core: int
    c_n: float
    t_n: float | None
    abs_error: float
    t_core: float | None = None
    t_original: float | None = None
    substitution: str = ""


def golden_section(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Shrink [a, b] around a minimum of a unimodal f until b - a <= tol."""
    h = b - a
    if h <= tol:
        return a, b
    steps = int(math.ceil(math.log(tol / h) / math.log(INVPHI)))
    c = a + INVPHI2 * h
    d = a + INVPHI * h
    fc, fd = f(c), f(d)
    for _ in range(steps):
        if fc < fd:
            b, d, fd = d, c, fc
            h *= INVPHI
            c = a + INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h *= INVPHI
            d = a + INVPHI * h
            fd = f(d)
    return (a, d) if fc < fd else (c, b)


def _bisect_sign_change(g, lo: float, hi: float) -> tuple[float, float]:
    """Bracket a root of g with g(lo) <= 0 <= g(hi) down to float resolution."""
    glo = g(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        gm = g(mid)
        if gm == 0.0:
            return mid, mid
        if (gm < 0) == (glo < 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return lo, hi


def _grid_values(n: int, grid: np.ndarray) -> np.ndarray:
    coeffs = np.array(cyclo_coeffs(n).coeffs[::-1], dtype=np.float64)
    return np.polyval(coeffs, grid)


def _refine(n: int, lo: float, hi: float) -> tuple[float, float, float]:
    """Locate the minimum of phi_n inside [lo, hi]; returns (t, value, bracket width)."""
    f = lambda t: cyclo_eval_real(n, t)
    df = lambda t: cyclo_deriv_real(n, t)
    # golden section stops while function differences are still resolvable
    a, b = golden_section(f, lo, hi, 1e-6)
    a, b = max(a - 1e-6, lo), min(b + 1e-6, hi)
    if not (df(a) <= 0 <= df(b)):
        a, b = lo, hi
    if df(a) <= 0 <= df(b):
        a, b = _bisect_sign_change(df, a, b)
        t = 0.5 * (a + b)
        return t, f(t), b - a
    # minimum sits on an endpoint of the interval
    t = lo if f(lo) <= f(hi) else hi
    return t, f(t), 0.0


@lru_cache(maxsize=None)
def _core_minimum(core: int, upper: float = 1.0) -> tuple[float, float, float]:
    """Least value of phi_core on [-1, upper] as (t, value, bracket width)."""
    grid = np.linspace(-1.0, upper, GRID_POINTS)
    vals = _grid_values(core, grid)
    candidates = []
    last = len(grid) - 1
    for i in range(len(grid)):
        left = vals[i - 1] if i > 0 else np.inf
        right = vals[i + 1] if i < last else np.inf
        if vals[i] <= left and vals[i] <= right:
            candidates.append((grid[max(i - 1, 0)], grid[min(i + 1, last)]))
    best = None
    for lo, hi in candidates:
        t, v, width = _refine(core, float(lo), float(hi))
        if best is None or v < best[1]:
            best = (t, v, width)
    return best


def _real_root(v: float, k: int) -> float:
    if k == 1:
        return v
    return math.copysign(abs(v) ** (1.0 / k), v)


def cn(n: int) -> FormMinimum:
    """c_n = min of phi_n on [-1, 1], computed on the odd squarefree core of n.

    When 4 | n the substitution variable -X^e (e even) only covers t <= 0, so
    phi_core is minimized on [-1, 0] and c_n can exceed c_core.
    """
    n = int(n)
    if n < 3:
        raise DomainError(f"c_n is defined for n >= 3, got {n}")
    red = reduce_index(n)
    if red.power_of_two:
        return FormMinimum(n, 1, 1.0, None, 0.0, None, None, red.describe())
    half_line = red.exponent % 2 == 0
    t_core, c, width = _core_minimum(red.core, 0.0 if half_line else 1.0)
    t_n = -t_core if n == 2 * red.core else t_core
    t_orig = _real_root(red.sign * t_core, red.exponent)
    return FormMinimum(
        index=n,
        core=red.core,
        c_n=c,
        t_n=t_n,
        abs_error=width + EVAL_SLACK,
        t_core=t_core,
        t_original=t_orig,
        substitution=red.describe(),
    )


def tp_for_prime(p: int) -> tuple[float, float]:
    """Unique real critical point t_p of phi_p in ]-1, -1/2] and c_p = phi_p(t_p)."""
    p = int(p)
    if p == 2 or not is_prime(p):
        raise DomainError(f"tp_for_prime needs an odd prime, got {p}")
    df = lambda t: cyclo_deriv_real(p, t)
    lo, hi = _bisect_sign_change(df, -1.0, -0.5)
    t = 0.5 * (lo + hi)
    return t, cyclo_eval_real(p, t)


def cn_lower_bounds(n: int) -> tuple[float, float]:
    """(p_1^(-2^(r-2)), (sqrt(3)/2)^phi(n)); the first is 1 when n has no odd prime."""
    n = int(n)
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    odd = [p for p in factorize(n).primes if p != 2]
    r = len(odd)
    bound_p1 = 1.0 if r == 0 else odd[0] ** (-(2.0 ** (r - 2)))
    return bound_p1, (math.sqrt(3) / 2) ** totient(n)


def form_lower_bound_check(n: int, x: int, y: int) -> bool:
    """Whether Phi_n(x, y) >= (c_n - abs_error) * max(|x|, |y|)^phi(n), compared exactly."""
    m = cn(n)
    lower = Fraction(m.c_n) - Fraction(m.abs_error)
    h = max(abs(int(x)), abs(int(y)))
    return Fraction(form_eval(n, x, y)) >= lower * h ** totient(n)
