"""Cyclotomic polynomials with exact integer coefficients and their binary forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors, mobius, radical, totient
from .errors import ArithmeticConsistencyError, DomainError

__all__ = [
    "CyclotomicPoly",
    "BinaryFormEvaluation",
    "IndexReduction",
    "poly_mul",
    "poly_divmod",
    "cyclo_coeffs",
    "form_eval",
    "evaluate",
    "cyclo_eval_real",
    "cyclo_deriv_real",
    "reduce_index",
]


@dataclass(frozen=True)
class CyclotomicPoly:
    """phi_n with coefficients in ascending powers of X."""

    index: int
    degree: int
    coeffs: tuple[int, ...]

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


@dataclass(frozen=True)
class BinaryFormEvaluation:
    index: int
    x: int
    y: int
    value: int


def poly_mul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_divmod(a, b) -> tuple[list[int], list[int]]:
    """Schoolbook long division over the integers; ``b`` must be monic (leading 1)."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [0], rem
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        q = rem[k]
        if q:
            quot[k - db] = q
            for j in range(db + 1):
                rem[k - db + j] -= q * b[j]
    rem = rem[:db] or [0]
    return quot, rem


def _x_pow_minus_one(d: int) -> list[int]:
    return [-1] + [0] * (d - 1) + [1]


@lru_cache(maxsize=None)
def cyclo_coeffs(n: int) -> CyclotomicPoly:
    """phi_n(X) as the product of (X^d - 1)^mu(n/d) over the divisors d of n.

    Factors with exponent +1 are multiplied first, then the ones with exponent
    -1 are divided out; every division must leave a zero remainder.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"cyclotomic index must be >= 1, got {n}")
    num = [1]
    dens = []
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num = poly_mul(num, _x_pow_minus_one(d))
        elif mu == -1:
            dens.append(d)
    for d in dens:
        num, rem = poly_divmod(num, _x_pow_minus_one(d))
        if any(rem):
            raise ArithmeticConsistencyError(f"inexact division building phi_{n} by X^{d}-1")
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    deg = totient(n)
    if len(num) != deg + 1:
        raise ArithmeticConsistencyError(f"phi_{n} has degree {len(num) - 1}, expected {deg}")
    return CyclotomicPoly(n, deg, tuple(num))


def form_eval(n: int, x: int, y: int) -> int:
    """Exact value of the homogenized form Y^phi(n) * phi_n(X/Y) at (x, y); n >= 3."""
    if n < 3:
        raise DomainError(f"cyclotomic binary forms are used for n >= 3, got n={n}")
    coeffs = cyclo_coeffs(n).coeffs
    x, y = int(x), int(y)
    # homogeneous Horner: sum c_i x^i y^(d-i)
    acc = 0
    ypow = 1
    for c in reversed(coeffs):
        acc = acc * x + c * ypow
        ypow *= y
    return acc


def evaluate(n: int, x: int, y: int) -> BinaryFormEvaluation:
    return BinaryFormEvaluation(n, int(x), int(y), form_eval(n, x, y))


def cyclo_eval_real(n: int, t: float) -> float:
    """Floating-point phi_n(t) by Horner's rule on the exact coefficients."""
    acc = 0.0
    for c in reversed(cyclo_coeffs(n).coeffs):
        acc = acc * t + c
    return acc


def cyclo_deriv_real(n: int, t: float) -> float:
    """phi_n'(t), differentiated term by term from the exact coefficients."""
    coeffs = cyclo_coeffs(n).coeffs
    acc = 0.0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * t + i * coeffs[i]
    return acc


@dataclass(frozen=True)
class IndexReduction:
    """phi_n(X) = phi_core(sign * X**exponent).

    ``radical`` is R (odd primes of n, times 2 when n is even) and
    ``exponent`` is n / R. ``core`` is the odd squarefree part, or 1 when n
    is a power of two; in that case phi_n(X) = X**(n/2) + 1 and the
    ``sign``/``exponent`` pair describes phi_2 rather than phi_core.
    """

    n: int
    radical: int
    exponent: int
    core: int
    sign: int

    @property
    def power_of_two(self) -> bool:
        return self.core == 1

    def describe(self) -> str:
        if self.power_of_two:
            return f"phi_{self.n}(X) = phi_2(X^{self.exponent}) = X^{self.exponent} + 1"
        inner = "X" if self.exponent == 1 else f"X^{self.exponent}"
        steps = []
        if self.exponent != 1:
            steps.append(f"phi_{self.n}(X) = phi_{self.radical}({inner})")
        if self.sign < 0:
            steps.append(f"phi_{self.radical}(Y) = phi_{self.core}(-Y)")
        if not steps:
            return f"phi_{self.n} is its own core"
        return "; ".join(steps)


def reduce_index(n: int) -> IndexReduction:
    """Reduce n >= 3 to the odd squarefree core with c_n = c_core."""
    if n < 3:
        raise DomainError(f"reduce_index needs n >= 3, got {n}")
    R = radical(n)
    odd = R // 2 if R % 2 == 0 else R
    sign = -1 if (R % 2 == 0 and odd > 1) else 1
    if odd == 1:
        return IndexReduction(n, R, n // R, 1, 1)
    return IndexReduction(n, R, n // R, odd, sign)
