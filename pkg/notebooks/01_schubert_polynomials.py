"""
Schubert polynomials from divided differences
=============================================
"""

# %%
from schubhess import (divided_difference, longest, parse, reduced_word, schubert, swap_vars,
                       Permutation, embed)
from schubhess.permutation import all_permutations

# %%
# The divided difference d_i is (f - s_i f) / (x_i - x_{i+1}); the division is exact.
f = parse("x1^3*x2 - 2*x2*x3")
print("f        =", f)
print("s_1 f    =", swap_vars(f, 1))
print("d_1 f    =", divided_difference(f, 1))
print("d_1 d_1 f =", divided_difference(divided_difference(f, 1), 1))

# %%
# Start from the longest permutation and walk down.  Every Schubert polynomial
# of S_3:
for w in sorted(all_permutations(3), key=lambda w: (w.length, w.images)):
    print(f"{str(w):10} length {w.length}  word {reduced_word(w)}  S_w = {schubert(w)}")

# %%
# The polynomial does not care about the ambient S_n.
w = Permutation((1, 3, 2))
print(schubert(w), "==", schubert(embed(w, 6)))
print("top of S_5:", schubert(longest(5)))

# %%
# Coefficients are nonnegative integers, not always 0 or 1.
big = schubert(Permutation((1, 3, 2, 6, 5, 4)))
print(len(big), "terms, largest coefficient", max(big.coefficients()))
