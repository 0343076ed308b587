"""
The polynomial presentation: Gröbner bases and Hilbert series
=============================================================
"""

# %%
from schubhess import (Corner, alternating_schubert_sum, contains, f_poly, groebner, hess_dimension,
                       ideal_generators, normal_form, parse_hessenberg, remove_corner)
from schubhess.ideal import graded_quotient_dims, hilbert_from_basis

# %%
h = parse_hessenberg("(2,3,3)")
gens = ideal_generators(h)
G = groebner(gens, h.n)
print("generators:", [str(g) for g in gens])
print("reduced basis:", [str(g) for g in G])
print("Hilbert series:", hilbert_from_basis(G), "top degree", hess_dimension(h))
print("by linear algebra:", graded_quotient_dims(gens, h.n, 3))

# %%
# Dropping the corner (2,1) turns f_{1,1} = x1 from a nonzero class into zero.
c = (2, 1)
h2 = remove_corner(h, Corner(*c))
G2 = groebner(ideal_generators(h2), h.n)
f = f_poly(c[0] - 1, c[1])
print(f"{f} in I{h}:", contains(G, f), "  normal form", normal_form(f, G))
print(f"{f} in I{h2}:", contains(G2, f))
print("alternating sum reduces to", normal_form(alternating_schubert_sum(*c), G2))
