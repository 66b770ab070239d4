import math

import numpy as np
import pytest

from cyclorep.arith import factorize
from cyclorep.density import (
    L_12,
    L_MINUS3,
    L_MINUS4,
    average_multiplicity,
    classify_by_factorization,
    constants,
    euler_product,
    is_both,
    is_loeschian,
    is_sum_of_two_squares,
    sieve_representable,
)
from cyclorep.errors import DomainError, ResourceBudgetError


def _two_squares(N):
    s = set()
    r = math.isqrt(N)
    for x in range(r + 1):
        for y in range(r + 1):
            if 0 < x * x + y * y <= N:
                s.add(x * x + y * y)
    return s


def _loeschian(N):
    s = set()
    r = math.isqrt(N) + 2
    for u in range(-r, r + 1):
        for v in range(-r, r + 1):
            q = u * u + u * v + v * v
            if 0 < q <= N:
                s.add(q)
    return s


@pytest.mark.parametrize("m, two, loe, both", [(5, True, False, False), (3, False, True, False), (45, True, False, False),
                                               (7, False, True, False), (12, False, True, False), (49, True, True, True),
                                               (13, True, True, True)])
def test_classifier_examples(m, two, loe, both):
    assert is_sum_of_two_squares(m) is two
    assert is_loeschian(m) is loe
    assert is_both(m) is both


def test_classifiers_against_scans():
    N = 5000
    two, loe = _two_squares(N), _loeschian(N)
    for m in range(1, N + 1):
        f = factorize(m)
        assert is_sum_of_two_squares(f) == (m in two)
        assert is_loeschian(f) == (m in loe)


def test_is_both_equivalence():
    for m in range(1, 10**5 + 1):
        assert is_both(m) == (is_sum_of_two_squares(m) and is_loeschian(m))


def test_sieve_examples():
    s, _ = sieve_representable(20, "phi4", "tilde")
    assert set(np.flatnonzero(s)) == {1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20}
    s, c = sieve_representable(20, "all", "restricted")
    assert set(np.flatnonzero(s)) == {3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 16, 17, 18, 19, 20}
    assert c.count_all == 15
    s, _ = sieve_representable(10, "both", "tilde")
    assert set(np.flatnonzero(s)) == _two_squares(10) & _loeschian(10)


def test_tilde_minus_restricted():
    for N in (100, 10**4):
        t, _ = sieve_representable(N, "phi4", "tilde")
        r, _ = sieve_representable(N, "phi4", "restricted")
        assert not (r & ~t).any()
        assert set(np.flatnonzero(t & ~r)) == {1, 2}


def test_factor_route_matches_scans():
    N = 3000
    sets = classify_by_factorization(N)
    assert set(np.flatnonzero(sets["phi4"])) == _two_squares(N)
    assert set(np.flatnonzero(sets["phi3"])) == _loeschian(N)


def test_threads_do_not_change_sieve():
    a, ca = sieve_representable(2 * 10**6, "all", "restricted")
    b, cb = sieve_representable(2 * 10**6, "all", "restricted", workers=4)
    assert np.array_equal(a, b) and ca == cb


def test_multiplicativity():
    s, _ = sieve_representable(90000, "phi4", "tilde")
    reps = np.flatnonzero(s[:301])
    for a in reps:
        for b in reps:
            assert s[a * b]


def test_density_decay():
    dens = [sieve_representable(10**k, "phi4", "tilde", method="factor")[1].count_phi4 / 10**k for k in range(3, 7)]
    assert all(a > b for a, b in zip(dens, dens[1:]))


def test_sieve_errors():
    with pytest.raises(DomainError):
        sieve_representable(10, "all", "tilde")
    with pytest.raises(DomainError):
        sieve_representable(10, "phi3", "restricted", method="factor")
    with pytest.raises(DomainError):
        sieve_representable(10, "phi5")
    with pytest.raises(ResourceBudgetError):
        sieve_representable(10**6, budget=10**5)


def test_euler_product_basics():
    assert euler_product(set(), 1000, -0.5) == (1.0, 0.0)
    v, tail = euler_product({(3, 4)}, 10**5, -0.5)
    direct = 1.0
    for p in range(3, 10**5 + 1):
        if p % 4 == 3 and all(p % q for q in range(3, math.isqrt(p) + 1, 2)):
            direct *= (1 - p**-2) ** -0.5
    assert v == pytest.approx(direct, rel=1e-13) and 0 < tail < 1e-5
    with pytest.raises(DomainError):
        euler_product({(2, 4)}, 1000, 1)


def test_tail_shrinks():
    small, big = constants(10**4), constants(10**6)
    for k in small.tail_error:
        assert big.tail_error[k] < small.tail_error[k]
    assert all(v > 0 for v in (big.alpha0_3, big.alpha0_4, big.beta0, big.kappa1))


def test_special_values():
    assert math.gamma(0.25) == pytest.approx(3.625609908221908, abs=1e-12)
    assert L_MINUS4 == pytest.approx(0.7853981633974483)
    assert L_MINUS3 == pytest.approx(0.6045997880780726)
    assert L_12 == pytest.approx(0.7603459963009954)


def test_constants_at_large_bound():
    c = constants(10**7)
    assert abs(c.alpha0_4 - 0.764223653589220) < 1e-6
    assert abs(c.alpha0_3 - 0.638909) < 1e-5
    assert abs(c.beta0 - 0.302316) < 1e-5
    assert c.alpha0 == pytest.approx(c.alpha0_3 + c.alpha0_4)
    assert c.kappa1 == pytest.approx(math.pi / c.alpha0 * (1 + 2 / math.sqrt(3)))


def test_average_multiplicity_small():
    r = average_multiplicity(20, prime_bound=10**4)
    assert (r.S_N, r.A_N) == (236, 15)
    r = average_multiplicity(3, prime_bound=10**4)
    assert (r.S_N, r.A_N, r.M_N) == (8, 1, 8.0)
    with pytest.raises(DomainError):
        average_multiplicity(2)
