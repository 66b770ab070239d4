"""
Cyclotomic polynomials and their binary forms
=============================================

Exact integer coefficients, homogeneous evaluation, and the reduction of
any index to its odd squarefree core.
"""

# %%
# Coefficients come from the Mobius product of (X^d - 1)^mu(n/d).
from cyclorep import cyclo_coeffs, form_eval, reduce_index, totient

for n in (3, 5, 12, 15, 105):
    p = cyclo_coeffs(n)
    print(f"phi_{n}: degree {p.degree}, coefficients {p.coeffs[:12]}{'...' if p.degree > 11 else ''}")

# %%
# phi_105 is the first one with a coefficient outside {-1, 0, 1}.
print(min(cyclo_coeffs(105).coeffs))

# %%
# The binary form Phi_n(x, y) = y^phi(n) phi_n(x / y) is evaluated with exact integers.
print(form_eval(5, 2, 3), form_eval(3, 1, -2), form_eval(4, 0, 7))
print([form_eval(5, k, -2 * k) // k**4 for k in range(1, 6)])  # always 11

# %%
# Every index reduces to a core: phi_n(X) = phi_core(sign * X^e).
for n in (6, 12, 45, 60, 64):
    print(n, totient(n), reduce_index(n).describe())
