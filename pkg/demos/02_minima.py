"""
Minimum of phi_n on the real line
=================================

Because phi_n is palindromic its infimum over R is reached on [-1, 1].
The value c_n controls how small Phi_n(x, y) can be at a given height.
"""

# %%
import numpy as np

from cyclorep import cn, cn_lower_bounds, tp_for_prime

for n in (3, 5, 7, 15, 35, 39, 60, 64):
    fm = cn(n)
    t = "-" if fm.t_n is None else f"{fm.t_n:+.6f}"
    print(f"n={n:3d} core={fm.core:3d} c_n={fm.c_n:.9f} t_n={t} err<={fm.abs_error:.1e}")

# %%
# For composite cores the minimizer can be positive. With 4 | n only t <= 0
# is reachable through the substitution, so c_60 is larger than c_15.
print(cn(15).c_n, cn(60).c_n)

# %%
# Primes: t_p is the unique critical point in ]-1, -1/2] and c_p = p t_p^(p-1).
for p in (3, 5, 53, 199):
    t, c = tp_for_prime(p)
    print(p, t, c, p * t ** (p - 1))

# %%
# Both lower bounds hold across a range of n.
ok = all(cn(n).c_n + 1e-9 >= max(cn_lower_bounds(n)) for n in range(3, 301))
print("lower bounds hold for 3 <= n <= 300:", ok)

# %%
# c_n for n = 3..60; the dips come from cores with several primes.
ns = np.arange(3, 61)
print(np.round([cn(int(n)).c_n for n in ns], 3))
