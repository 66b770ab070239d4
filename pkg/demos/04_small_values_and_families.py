"""
Small values, least values at a given height, and unbounded multiplicity
========================================================================
"""

# %%
# Triples below 7^(phi(n)/2) with height >= 2 all have height exactly 2.
from cyclorep import m_h, small_value_triples, unbounded_family
from cyclorep.represent import m_h_bruteforce

reps = small_value_triples(100)
print(len(reps), "triples; heights:", sorted({r.height for r in reps}))
print("Phi_3(1,-3) = 7 is excluded:", all((r.n, r.x, r.y) != (3, 1, -3) for r in reps))

# %%
# With a smaller threshold 2^(theta phi(n)) fewer triples survive.
print(len(small_value_triples(40, theta=0.5)), len(small_value_triples(40, theta=0.9)))

# %%
# The least m represented with height >= h has a closed form.
for h in range(3, 11):
    print(h, m_h(h), m_h_bruteforce(h))

# %%
# m = 2^k with k = phi(3 * 5 * ... * p_s) has at least 8(s - 1) representations with phi(n) > 2.
for s in (2, 3, 4):
    fam = unbounded_family(s)
    print(s, f"m = 2^{fam.k}", "b_m >=", fam.b_lower_bound)
