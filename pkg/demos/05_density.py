"""
How many integers are represented
=================================

Phi_4 = x^2 + y^2 and Phi_3 = x^2 + xy + y^2 dominate the count. Their value
sets are classified by prime factorization, which gives a second,
independent sieve.
"""

# %%
import math

import numpy as np

from cyclorep import constants, sieve_representable
from cyclorep.density import average_multiplicity

N = 10**5
for form in ("phi3", "phi4", "both"):
    a, _ = sieve_representable(N, form, "tilde", method="lattice")
    b, _ = sieve_representable(N, form, "tilde", method="factor")
    print(form, int(a.sum()), "routes agree:", bool(np.array_equal(a, b)))

# %%
# Counts of the restricted sets (height >= 2) and the union over all n.
_, c = sieve_representable(10**6)
print(c)

# %%
# Landau ratio count * sqrt(log N) / N creeps toward its limit from above.
c4 = constants(10**7)
for k in range(3, 8):
    _, s = sieve_representable(10**k, "phi4", "tilde", method="factor")
    print(10**k, s.count_phi4 * math.sqrt(math.log(10**k)) / 10**k)
print("limit:", c4.alpha0_4)

# %%
print(f"alpha0(3) = {c4.alpha0_3:.10f}, alpha0(4) = {c4.alpha0_4:.10f}, beta0 = {c4.beta0:.10f}")
print("tail estimates:", {k: f"{v:.1e}" for k, v in c4.tail_error.items()})

# %%
# Average number of representations per represented integer.
r = average_multiplicity(10**6)
print(r.S_N, r.A_N, r.M_N, r.ratio, r.kappa1, r.kappa1_lattice)
