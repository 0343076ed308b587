"""
Hessenberg functions, f_{i,j}, and alternating Schubert sums
============================================================
"""

# %%
from schubhess import (alternating_schubert_sum, corners, f_poly, hess_dimension,
                       minimal_missing, parse_hessenberg, remove_corner, render_grid,
                       verify_theorem, w_kij)

# %%
h = parse_hessenberg("(3,3,4,5,5)")
print(render_grid(h))
print("dimension:", hess_dimension(h))
print("corners:", " ".join(map(str, corners(h))))

# %%
# f_{i-1,j} written as an alternating sum over the permutations w_k^{(i,j)}.
i, j = 5, 2
for k in range(1, i - j + 1):
    print(f"w_{k}^({i},{j}) = {w_kij(i, j, k)}")
print("f_(4,2)             =", f_poly(i - 1, j))
print("alternating sum     =", alternating_schubert_sum(i, j))

# %%
for n in range(2, 9):
    print(verify_theorem(n).summary())

# %%
# Removing the corner (3,1) of h = (3,3,3): the shortest permutations whose cells
# meet the old variety but not the new one.
h = parse_hessenberg("(3,3,3)")
c = corners(h)[0]
print(remove_corner(h, c), sorted(map(str, minimal_missing(h, c))))
