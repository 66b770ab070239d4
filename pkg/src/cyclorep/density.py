"""Integers represented by Phi_3, Phi_4 and the other cyclotomic forms, and their density constants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import FactoredInteger, factorize, primes_up_to, totient
from .errors import ArithmeticConsistencyError, DomainError, ResourceBudgetError
from .lattice import values_at_most
from .represent import count_triples_up_to, height_bound, indices_with_totient_at_most, max_totient

__all__ = [
    "FORMS",
    "VARIANTS",
    "SieveCounts",
    "ConstantsReport",
    "MultiplicityReport",
    "is_sum_of_two_squares",
    "is_loeschian",
    "is_both",
    "sieve_representable",
    "classify_by_factorization",
    "euler_product",
    "constants",
    "average_multiplicity",
    "L_MINUS4",
    "L_MINUS3",
    "L_12",
]

FORMS = ("phi3", "phi4", "both", "union34", "all")
VARIANTS = ("tilde", "restricted")
# membership arrays hold one byte per integer up to N
SIEVE_BUDGET = 10**8

L_MINUS4 = math.pi / 4
L_MINUS3 = math.pi / 3**1.5
L_12 = math.log(2 + math.sqrt(3)) / math.sqrt(3)


def _factored(f) -> FactoredInteger:
    f = factorize(f)
    if f.value < 1:
        raise DomainError("value must be >= 1")
    return f


def _even_exponents(f: FactoredInteger, bad) -> bool:
    return all(e % 2 == 0 for p, e in f.factors if bad(p))


def is_sum_of_two_squares(f) -> bool:
    """x^2 + y^2: every prime = 3 mod 4 divides to an even power."""
    return _even_exponents(_factored(f), lambda p: p % 4 == 3)


def is_loeschian(f) -> bool:
    """u^2 + uv + v^2: every prime = 2 mod 3 divides to an even power."""
    return _even_exponents(_factored(f), lambda p: p % 3 == 2)


def is_both(f) -> bool:
    f = _factored(f)
    direct = _even_exponents(f, lambda p: p % 12 != 1)
    if direct != (is_sum_of_two_squares(f) and is_loeschian(f)):
        raise ArithmeticConsistencyError(f"mod-12 test disagrees with the conjunction at {f.value}")
    return direct


@dataclass(frozen=True)
class SieveCounts:
    N: int
    variant: str
    count_phi3: int
    count_phi4: int
    count_both: int
    count_union34: int
    count_all: int


def _check_budget(N: int, budget: int | None):
    budget = SIEVE_BUDGET if budget is None else budget
    if N > budget:
        raise ResourceBudgetError(f"sieve limit {N} exceeds budget {budget}")


def _mark(N: int, n: int, min_height: int, workers: int, out: np.ndarray | None = None) -> np.ndarray:
    if out is None:
        out = np.zeros(N + 1, dtype=bool)
    for vals in values_at_most(n, height_bound(N, n), N, min_height, workers):
        out[vals] = True
    return out


def _lattice_sets(N: int, min_height: int, workers: int) -> dict[str, np.ndarray]:
    phi3 = _mark(N, 3, min_height, workers)
    phi4 = _mark(N, 4, min_height, workers)
    return {"phi3": phi3, "phi4": phi4, "both": phi3 & phi4, "union34": phi3 | phi4}


def classify_by_factorization(N: int, *, budget: int | None = None) -> dict[str, np.ndarray]:
    """Membership in the Phi_3 / Phi_4 value sets for 1..N from smallest-prime-factor tables.

    All indices are factored together: each round divides every unfinished
    index by its least prime factor, tracking the current prime and the parity
    of its exponent; a prime is judged once its exponent is complete.
    """
    N = int(N)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    _check_budget(N, budget)
    if N < 2:
        ones = np.array([False, True])
        return {"phi3": ones, "phi4": ones.copy(), "both": ones.copy(), "union34": ones.copy()}
    spf = primes_up_to(N).spf.astype(np.int64)
    rem = np.arange(N + 1, dtype=np.int64)
    cur = np.zeros(N + 1, dtype=np.int64)
    odd = np.zeros(N + 1, dtype=bool)
    bad4 = np.zeros(N + 1, dtype=bool)
    bad3 = np.zeros(N + 1, dtype=bool)
    bad12 = np.zeros(N + 1, dtype=bool)

    def settle(idx):
        q = cur[idx]
        bad4[idx] |= q % 4 == 3
        bad3[idx] |= q % 3 == 2
        bad12[idx] |= q % 12 != 1

    active = np.arange(2, N + 1, dtype=np.int64)
    while active.size:
        r = rem[active]
        p = spf[r]
        changed = p != cur[active]
        settle(active[changed & odd[active]])
        moved = active[changed]
        cur[moved] = p[changed]
        odd[moved] = False
        odd[active] ^= True
        rem[active] = r // p
        active = active[rem[active] > 1]
    settle(np.flatnonzero(odd))

    phi4 = ~bad4
    phi3 = ~bad3
    both = ~bad12
    for arr in (phi3, phi4, both):
        arr[0] = False
    if not np.array_equal(both, phi3 & phi4):
        raise ArithmeticConsistencyError("mod-12 classification disagrees with the conjunction")
    return {"phi3": phi3, "phi4": phi4, "both": both, "union34": phi3 | phi4}


def _all_restricted(N: int, base: dict[str, np.ndarray] | None, workers: int) -> np.ndarray:
    """Union over every n >= 3 of the height >= 2 value sets."""
    out = base["union34"].copy() if base is not None else _lattice_sets(N, 2, workers)["union34"]
    for n in indices_with_totient_at_most(max_totient(N)):
        if totient(n) > 2:
            _mark(N, n, 2, workers, out)
    return out


def sieve_representable(
    N: int,
    form: str = "all",
    variant: str = "restricted",
    *,
    method: str = "lattice",
    budget: int | None = None,
    workers: int = 1,
) -> tuple[np.ndarray, SieveCounts]:
    """Membership array (index m, 0..N) of the requested value set, plus counts for all forms.

    ``method="lattice"`` marks form values directly (height >= 1 for the tilde
    variant, >= 2 for restricted); ``method="factor"`` classifies 1..N by
    factorization and exists for the tilde Phi_3/Phi_4 sets only. The
    ``count_all`` field is always the restricted union over every n >= 3.
    """
    N = int(N)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if form not in FORMS:
        raise DomainError(f"unknown form {form!r}; expected one of {FORMS}")
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if method not in ("lattice", "factor"):
        raise DomainError(f"unknown method {method!r}")
    if variant == "tilde" and form == "all":
        raise DomainError("the tilde variant is defined for phi3/phi4 only")
    if method == "factor" and variant != "tilde":
        raise DomainError("factorization classification describes the tilde sets only")
    _check_budget(N, budget)

    if method == "factor":
        sets = classify_by_factorization(N, budget=budget)
    else:
        sets = _lattice_sets(N, 1 if variant == "tilde" else 2, workers)
    restricted = sets if variant == "restricted" else None
    all_set = _all_restricted(N, restricted, workers)
    sets["all"] = all_set
    counts = SieveCounts(
        N=N,
        variant=variant,
        count_phi3=int(sets["phi3"].sum()),
        count_phi4=int(sets["phi4"].sum()),
        count_both=int(sets["both"].sum()),
        count_union34=int(sets["union34"].sum()),
        count_all=int(all_set.sum()),
    )
    return sets[form], counts


@lru_cache(maxsize=4)
def _primes(bound: int) -> np.ndarray:
    return primes_up_to(bound).primes


def euler_product(residue_classes, prime_bound: int, exponent: float) -> tuple[float, float]:
    """prod over primes p <= prime_bound in the given classes of (1 - p^-2)^exponent.

    ``residue_classes`` is an iterable of (a, q) pairs. The tail estimate uses
    sum_{p > P} p^-2 ~ 1/(P log P) weighted by the share of primes in the classes.
    """
    prime_bound = int(prime_bound)
    if prime_bound < 100:
        raise DomainError(f"prime_bound must be >= 100, got {prime_bound}")
    classes = sorted({(int(a) % int(q), int(q)) for a, q in residue_classes})
    for a, q in classes:
        if math.gcd(a, q) != 1:
            raise DomainError(f"class {a} mod {q} is not coprime to its modulus")
    if not classes:
        return 1.0, 0.0
    p = _primes(prime_bound)
    mask = np.zeros(len(p), dtype=bool)
    for a, q in classes:
        mask |= p % q == a
    logs = np.log1p(-1.0 / p[mask].astype(np.float64) ** 2)
    value = math.exp(exponent * math.fsum(logs.tolist()))
    share = sum(1 / totient(q) for _, q in classes)
    tail = value * abs(exponent) * share / (prime_bound * math.log(prime_bound))
    return value, tail


@dataclass(frozen=True)
class ConstantsReport:
    """Leading density constants.

    ``kappa1`` is the constant as published; ``kappa1_lattice`` replaces the
    Phi_3 and Phi_6 lattice-count coefficient pi/sqrt(3) by the ellipse area
    2*pi/sqrt(3) of {x^2 + xy + y^2 <= 1}.
    """

    prime_bound: int
    alpha0_3: float
    alpha0_4: float
    beta0: float
    kappa1: float
    kappa1_lattice: float
    tail_error: dict = field(default_factory=dict)

    @property
    def alpha0(self) -> float:
        return self.alpha0_3 + self.alpha0_4


def constants(prime_bound: int = 10**7) -> ConstantsReport:
    prime_bound = int(prime_bound)
    if prime_bound < 10**4:
        raise DomainError(f"prime_bound must be >= 10^4, got {prime_bound}")
    prod3, err3 = euler_product({(2, 3)}, prime_bound, -0.5)
    prod4, err4 = euler_product({(3, 4)}, prime_bound, -0.5)
    prod12, err12 = euler_product({(5, 12), (7, 12), (11, 12)}, prime_bound, -0.5)

    a3 = prod3 / (2**0.5 * 3**0.25)
    a4 = prod4 / 2**0.5
    # H_2(1) * (L(1,-3) L(1,-4) L(1,12))^(1/4) / Gamma(1/4)
    b0 = (1.5**0.75) * (L_MINUS3 * L_MINUS4 * L_12) ** 0.25 / math.gamma(0.25) * prod12
    alpha0 = a3 + a4
    k1 = math.pi / alpha0 * (1 + 2 / math.sqrt(3))
    k1_lat = math.pi / alpha0 * (1 + 4 / math.sqrt(3))
    e3 = err3 / (2**0.5 * 3**0.25)
    e4 = err4 / 2**0.5
    tails = {
        "alpha0_3": e3,
        "alpha0_4": e4,
        "beta0": b0 / prod12 * err12,
        "kappa1": k1 * (e3 + e4) / alpha0,
        "kappa1_lattice": k1_lat * (e3 + e4) / alpha0,
    }
    return ConstantsReport(prime_bound, a3, a4, b0, k1, k1_lat, tails)


@dataclass(frozen=True)
class MultiplicityReport:
    N: int
    S_N: int
    A_N: int
    M_N: float
    ratio: float
    kappa1: float
    kappa1_lattice: float


def average_multiplicity(N: int, *, workers: int = 1, prime_bound: int = 10**6) -> MultiplicityReport:
    """S_N = a_1 + ... + a_N by lattice counting, A_N from the restricted union sieve, M_N = S_N / A_N.

    ``ratio`` is M_N / sqrt(log N), to be read against both kappa constants.
    """
    N = int(N)
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    _check_budget(N, None)
    S = count_triples_up_to(N)
    A = int(_all_restricted(N, None, workers).sum())
    M = S / A
    c = constants(prime_bound)
    return MultiplicityReport(N, S, A, M, M / math.sqrt(math.log(N)), c.kappa1, c.kappa1_lattice)
