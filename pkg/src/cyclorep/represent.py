"""Complete enumeration of representations m = Phi_n(x, y).

Finiteness comes from two exact consequences of c_n >= (sqrt(3)/2)^phi(n):
for max(|x|, |y|) >= 2, 3^(phi(n)/2) <= m, and every solution satisfies
3^(phi(n)/2) * max(|x|,|y|)^phi(n) <= 2^phi(n) * m. Floats only size the
loops; every accept/reject decision is an integer comparison.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import FactoredInteger, primes_up_to, totient
from .cyclotomic import form_eval
from .errors import ArithmeticConsistencyError, DomainError, ResourceBudgetError
from .lattice import half_plane_blocks

__all__ = [
    "Representation",
    "RepresentationReport",
    "max_totient",
    "candidate_indices",
    "indices_with_totient_at_most",
    "height_bound",
    "enumerate_representations",
    "enumeration_cost",
    "representation_tables",
    "count_triples_up_to",
    "small_value_triples",
    "m_h",
    "m_h_bruteforce",
    "FamilyWitnesses",
    "unbounded_family",
]

# budget on log2(m_s) for unbounded_family
FAMILY_MAX_BITS = 100_000
# lattice points (or solved rows, for the quadratic forms) per enumeration
ENUMERATION_BUDGET = 10**8
# middle coefficient s of x^2 + s*x*y + y^2 for the indices with phi(n) = 2
_QUADRATIC = {3: 1, 4: 0, 6: -1}
ROW_CHUNK = 1 << 20


@dataclass(frozen=True, order=True)
class Representation:
    n: int
    x: int
    y: int
    height: int
    value: int

    @classmethod
    def of(cls, n: int, x: int, y: int) -> Representation:
        x, y = int(x), int(y)
        return cls(n, x, y, max(abs(x), abs(y)), form_eval(n, x, y))


@dataclass(frozen=True)
class RepresentationReport:
    m: int
    reps: tuple[Representation, ...]

    @property
    def a_m(self) -> int:
        return len(self.reps)

    @property
    def b_m(self) -> int:
        return sum(1 for r in self.reps if totient(r.n) > 2)

    def by_index(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for r in self.reps:
            out.setdefault(r.n, []).append((r.x, r.y))
        return out


def max_totient(m: int) -> int:
    """Largest d with 3^d <= m^2, i.e. floor(2 log m / log 3) computed exactly."""
    if m < 1:
        return 0
    d = int(2 * math.log(m) / math.log(3))
    while 3 ** (d + 1) <= m * m:
        d += 1
    while d > 0 and 3**d > m * m:
        d -= 1
    return d


def indices_with_totient_at_most(d: int) -> list[int]:
    """All n >= 3 with phi(n) <= d, found by scanning n < 2.685 * d^1.161 + 2."""
    if d < 2:
        return []
    scan = math.ceil(2.685 * d**1.161) + 2
    return [n for n in range(3, scan + 1) if totient(n) <= d]


def candidate_indices(m: int) -> list[int]:
    """Indices n >= 3 that can carry a representation of m with height >= 2."""
    m = int(m)
    if m < 3:
        raise DomainError(f"candidate_indices needs m >= 3, got {m}")
    d = max_totient(m)
    scan = math.ceil(5.383 * math.log(m) ** 1.161) + 1
    return [n for n in range(3, scan + 1) if totient(n) <= d]


def height_bound(m: int, n: int) -> int:
    """Largest H with 3^(phi/2) * H^phi <= 2^phi * m (phi = phi(n) is even)."""
    m, n = int(m), int(n)
    if n < 3:
        raise DomainError(f"height_bound needs n >= 3, got {n}")
    if m < 1:
        return 0
    d = totient(n)
    lhs_base = 3 ** (d // 2)
    rhs = 2**d * m

    def ok(h: int) -> bool:
        return lhs_base * h**d <= rhs

    h = int(2 / math.sqrt(3) * math.exp(math.log(m) / d))
    while h > 0 and not ok(h):
        h -= 1
    while ok(h + 1):
        h += 1
    return h


def _expand(n: int, pairs) -> list[Representation]:
    out = []
    for x, y in pairs:
        out.append(Representation.of(n, x, y))
        out.append(Representation.of(n, -x, -y))
    return out


def _quadratic_pairs(m: int, n: int, H: int, min_height: int) -> list[tuple[int, int]]:
    """Half-plane solutions of x^2 + s*x*y + y^2 = m, solving for x row by row."""
    s = _QUADRATIC[n]
    out = set()
    for y0 in range(0, H + 1, ROW_CHUNK):
        y = np.arange(y0, min(y0 + ROW_CHUNK, H + 1), dtype=np.int64)
        # discriminant in x; 4m < 2^62 is guaranteed by the work budget
        D = 4 * m - (4 - s * s) * y * y
        y, D = y[D >= 0], D[D >= 0]
        r = np.floor(np.sqrt(D.astype(np.float64))).astype(np.int64)
        for _ in range(2):
            r -= r * r > D
            r += (r + 1) * (r + 1) <= D
        sq = r * r == D
        y, r = y[sq], r[sq]
        for sign in (1, -1):
            num = -s * y + sign * r
            even = num % 2 == 0
            for x, yy in zip((num[even] // 2).tolist(), y[even].tolist()):
                if (yy > 0 or x > 0) and max(abs(x), yy) >= min_height:
                    out.add((x, yy))
    return sorted(out)


def enumeration_cost(m: int, n: int) -> int:
    """Points visited for index n: rows for the quadratic forms, box size otherwise."""
    H = height_bound(m, n)
    return H + 1 if n in _QUADRATIC else (2 * H + 1) * (H + 1)


def _reps_for_index(m: int, n: int, min_height: int) -> list[Representation]:
    H = height_bound(m, n)
    if n in _QUADRATIC:
        pairs = _quadratic_pairs(m, n, H, min_height)
    else:
        pairs = []
        for X, Y, V in half_plane_blocks(n, H, min_height):
            hit = np.flatnonzero(V == m)
            pairs.extend((int(X[i]), int(Y[i])) for i in hit)
    reps = _expand(n, pairs)
    for r in reps:
        if r.value != m:
            raise ArithmeticConsistencyError(f"lattice value disagrees with exact Phi_{n}{(r.x, r.y)}")
    return reps


def enumerate_representations(
    m: int,
    min_height: int = 2,
    *,
    indices=None,
    workers: int = 1,
    budget: int | None = None,
) -> RepresentationReport:
    """Every (n, x, y) with n >= 3, max(|x|,|y|) >= min_height and Phi_n(x, y) = m.

    With min_height < 2 the set is infinite over all n (Phi_n(1, 0) = 1 for
    every n), so an explicit ``indices`` list is then required. The work grows
    like sqrt(m); ResourceBudgetError is raised above ``budget`` points.
    """
    m = int(m)
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if indices is None:
        if min_height < 2:
            raise DomainError("min_height < 2 needs an explicit list of indices")
        indices = candidate_indices(m) if m >= 3 else []
    indices = sorted(set(int(n) for n in indices))
    if any(n < 3 for n in indices):
        raise DomainError("indices must be >= 3")
    budget = ENUMERATION_BUDGET if budget is None else budget
    work = sum(enumeration_cost(m, n) for n in indices)
    if work > budget:
        raise ResourceBudgetError(f"enumerating m={m} visits {work} points, budget {budget}")
    task = lambda n: _reps_for_index(m, n, min_height)
    if workers > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(task, indices))
    else:
        parts = [task(n) for n in indices]
    reps = sorted({r for part in parts for r in part}, key=lambda r: (r.n, r.x, r.y))
    return RepresentationReport(m, tuple(reps))


def _triples_up_to(N: int, min_height: int, indices):
    """Yield (n, x, y, value) half-plane arrays restricted to value <= N."""
    for n in indices:
        for X, Y, V in half_plane_blocks(n, height_bound(N, n), min_height):
            keep = V <= N
            if keep.any():
                yield n, X[keep], Y[keep], V[keep]


def representation_tables(m_max: int, *, workers: int = 1) -> dict[str, list[tuple[int, int]]]:
    """Nonzero (m, a_m) and (m, b_m) for m <= m_max, from one sweep of all triples."""
    m_max = int(m_max)
    if m_max < 3:
        raise DomainError(f"m_max must be >= 3, got {m_max}")
    a = np.zeros(m_max + 1, dtype=np.int64)
    b = np.zeros(m_max + 1, dtype=np.int64)
    indices = indices_with_totient_at_most(max_totient(m_max))
    for n, _, _, V in _triples_up_to(m_max, 2, indices):
        counts = np.bincount(V.astype(np.int64), minlength=m_max + 1) * 2
        a += counts
        if totient(n) > 2:
            b += counts
    return {
        "a": [(m, int(a[m])) for m in range(1, m_max + 1) if a[m]],
        "b": [(m, int(b[m])) for m in range(1, m_max + 1) if b[m]],
    }


def count_triples_up_to(N: int, *, min_height: int = 2, min_totient: int = 0, indices=None) -> int:
    """Number of (n, x, y) with n >= 3, height >= min_height, phi(n) >= min_totient, Phi_n(x,y) <= N."""
    N = int(N)
    if N < 1:
        return 0
    if indices is None:
        indices = indices_with_totient_at_most(max_totient(N))
    indices = [n for n in indices if totient(n) >= min_totient]
    return sum(2 * len(V) for _, _, _, V in _triples_up_to(N, min_height, indices))


def _theta_threshold(theta, d: int) -> int:
    """floor(2^(theta*d)) for rational theta = p/q, exact via integer q-th roots."""
    th = Fraction(str(theta)) if isinstance(theta, float) else Fraction(theta)
    if not 0 < th < 1:
        raise DomainError(f"theta must lie in ]0, 1[, got {theta}")
    p, q = th.numerator, th.denominator
    target = 2 ** (p * d)
    g = int(2.0 ** float(th * d))
    while g**q > target:
        g -= 1
    while (g + 1) ** q <= target:
        g += 1
    return g


def small_value_triples(n_max: int, theta=None) -> list[Representation]:
    """Triples with 3 <= n <= n_max, height >= 2 and a small value.

    Without ``theta`` the condition is Phi_n(x, y) < 7^(phi(n)/2); with
    ``theta`` in ]0, 1[ it is Phi_n(x, y) <= 2^(theta * phi(n)).
    """
    out = []
    for n in range(3, int(n_max) + 1):
        d = totient(n)
        if theta is None:
            limit = 7 ** (d // 2) - 1
        else:
            limit = _theta_threshold(theta, d)
        if limit < 1:
            continue
        pairs = []
        for X, Y, V in half_plane_blocks(n, height_bound(limit, n), 2):
            hit = np.flatnonzero(V <= limit)
            pairs.extend((int(X[i]), int(Y[i])) for i in hit)
        out.extend(_expand(n, pairs))
    return sorted(out, key=lambda r: (r.n, r.x, r.y))


def m_h(h: int) -> int:
    """Smallest m represented with height >= h: (3h^2+1)/4 for odd h, 3h^2/4 for even h."""
    h = int(h)
    if h < 3:
        raise DomainError(f"m_h needs h >= 3, got {h}")
    return (3 * h * h + 1) // 4 if h % 2 else 3 * h * h // 4


def m_h_bruteforce(h: int) -> int:
    """Least value of Phi_n over all triples of height >= h, by complete enumeration of growing ranges."""
    h = int(h)
    if h < 3:
        raise DomainError(f"m_h needs h >= 3, got {h}")
    N = 8
    while True:
        indices = indices_with_totient_at_most(max_totient(N))
        best = None
        for _, _, _, V in _triples_up_to(N, h, indices):
            v = int(V.min())
            best = v if best is None else min(best, v)
        if best is not None:
            return best
        N *= 2


@dataclass(frozen=True)
class FamilyWitnesses:
    s: int
    k: int
    m: FactoredInteger
    witnesses: tuple[Representation, ...]

    @property
    def b_lower_bound(self) -> int:
        """Witnesses with phi(n) > 2, i.e. excluding the index-3 and index-6 ones."""
        return sum(1 for w in self.witnesses if totient(w.n) > 2)


def unbounded_family(s: int, *, max_bits: int = FAMILY_MAX_BITS) -> FamilyWitnesses:
    """m_s = 2^k_s with k_s = phi(3*5*...*p_s) and its 8 witnesses per odd prime l <= p_s."""
    s = int(s)
    if s < 2:
        raise DomainError(f"s must be >= 2, got {s}")
    limit = 64
    while True:
        odd = [int(p) for p in primes_up_to(limit).primes if p > 2]
        if len(odd) >= s:
            break
        limit *= 2
    odd = odd[:s]
    k = math.prod(p - 1 for p in odd)
    if k > max_bits:
        raise ResourceBudgetError(f"m_s = 2^{k} exceeds the {max_bits}-bit budget")
    m = FactoredInteger.from_factors([(2, k)])
    wit = []
    for ell in odd:
        t = k // (ell - 1)
        a = 2**t
        for n in (ell, 2 * ell):
            for x, y in ((0, a), (0, -a), (a, 0), (-a, 0)):
                r = Representation.of(n, x, y)
                if r.value != m.value:
                    raise ArithmeticConsistencyError(f"witness {r} does not represent 2^{k}")
                wit.append(r)
    return FamilyWitnesses(s, k, m, tuple(sorted(wit)))
