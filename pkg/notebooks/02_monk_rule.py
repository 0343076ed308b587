"""
Monk's rule
===========

Multiplying by S_{s_r} = x1 + ... + x_r expands into Schubert polynomials
indexed by w t_{pq}, each one length step above w.
"""

# %%
from schubhess import Permutation, monk_expand, schubert
from schubhess.schubert import monk_sum, schubert_simple

# %%
w = Permutation((1, 4, 2, 3))
for r in range(1, 5):
    exp = monk_expand(r, w)
    terms = sorted(str(t.stripped()) for t in exp.terms)
    print(f"r={r}: t_pq = {exp.transpositions()}  ->  {terms}")
    assert schubert_simple(r) * schubert(w) == monk_sum(exp)

# %%
# The same check as a sweep, through the verification API.
from schubhess.verify import verify_monk

print(verify_monk(4).summary())
