"""Schubert polynomials, divided differences and regular nilpotent Hessenberg combinatorics."""

from .hessenberg import (Corner, HessenbergFunction, alternating_schubert_sum, cell_intersects,
                         corners, enumerate_hessenberg, f_poly, f_via_chain, hess_dimension,
                         ideal_generators, minimal_missing, parse_hessenberg, remove_corner,
                         render_grid, verify_theorem, w_kij)
from .ideal import GroebnerBasis, contains, groebner, hilbert_series, normal_form
from .permutation import (Permutation, compose, embed, identity, inverse, length, longest,
                          parse_permutation, reduced_word, simple, transposition)
from .polynomial import Polynomial, divided_difference, exact_divide_linear, parse, swap_vars, var
from .report import VerificationReport
from .schubert import MonkExpansion, monk_expand, schubert

__version__ = "0.1.0"
