"""
Representing an integer by cyclotomic forms
===========================================

For m >= 1 only finitely many (n, x, y) with max(|x|, |y|) >= 2 give
Phi_n(x, y) = m, and the bounds are explicit enough to enumerate them all.
"""

# %%
from cyclorep import enumerate_representations, height_bound, representation_tables
from cyclorep.represent import candidate_indices

m = 13
print("indices to search:", candidate_indices(m))
print("height bounds:", {n: height_bound(m, n) for n in candidate_indices(m)})

# %%
rep = enumerate_representations(m)
print(f"a_{m} = {rep.a_m}, b_{m} = {rep.b_m}")
for n, pairs in rep.by_index().items():
    print(n, pairs)

# %%
# a_m and b_m for small m, from a single sweep over all triples.
t = representation_tables(100)
print("a_m:", t["a"][:15])
print("b_m:", t["b"])

# %%
# The quadratic forms are solved row by row, so moderately large m is cheap.
big = enumerate_representations(10**10 + 9)
print(big.a_m, big.b_m)
