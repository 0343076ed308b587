import itertools

import pytest

from schubhess.hessenberg import (Corner, HessenbergFunction, alternating_schubert_sum,
                                  cell_intersects, corners, enumerate_hessenberg, f_poly,
                                  f_via_chain, hess_dimension, ideal_generators,
                                  minimal_missing, parse_hessenberg, remove_corner,
                                  removable_corners, render_grid, verify_theorem, w_kij)
from schubhess.permutation import Permutation, all_permutations, identity, length
from schubhess.polynomial import ZERO, divided_difference, parse, var
from schubhess.schubert import schubert


def H(*vals):
    return HessenbergFunction(vals)


def P(*img):
    return Permutation(img)


def is_hessenberg(vals):
    n = len(vals)
    return (all(j <= v <= n for j, v in enumerate(vals, start=1))
            and all(a <= b for a, b in zip(vals, vals[1:])))


def corner_oracle(h):
    # cell-by-cell: shaded (i, j) with neither (i+1, j) nor (i, j-1) shaded
    shaded = lambda i, j: 1 <= i <= h.n and 1 <= j <= h.n and i <= h(j)
    return [Corner(i, j) for j in range(1, h.n + 1) for i in range(1, h.n + 1)
            if shaded(i, j) and not shaded(i + 1, j) and not shaded(i, j - 1)]


# -- Hessenberg functions ----------------------------------------------------

@pytest.mark.parametrize("bad", [(2, 1), (1, 1), (3, 3, 2), (1, 4, 4), ()])
def test_invalid_functions_rejected(bad):
    with pytest.raises(ValueError):
        HessenbergFunction(bad)


def test_parse_hessenberg():
    assert parse_hessenberg("(3,3,4,5,5)") == H(3, 3, 4, 5, 5)
    assert str(H(2, 3, 3)) == "(2,3,3)"
    with pytest.raises(ValueError, match="weakly increasing"):
        parse_hessenberg("(3,2,3)")
    with pytest.raises(ValueError):
        parse_hessenberg("[1,2]")


def test_enumeration():
    assert list(enumerate_hessenberg(1)) == [H(1)]
    assert [h.values for h in enumerate_hessenberg(3)] == [
        (1, 2, 3), (1, 3, 3), (2, 2, 3), (2, 3, 3), (3, 3, 3)]
    for n in range(1, 6):
        brute = [v for v in itertools.product(range(1, n + 1), repeat=n) if is_hessenberg(v)]
        assert [h.values for h in enumerate_hessenberg(n)] == brute


def test_dimension():
    for n in range(1, 6):
        assert hess_dimension(HessenbergFunction(tuple(range(1, n + 1)))) == 0
        assert hess_dimension(HessenbergFunction((n,) * n)) == n * (n - 1) // 2
    assert hess_dimension(H(3, 3, 4, 5, 5)) == 5


def test_corners_examples():
    assert corners(H(2, 3, 3)) == [Corner(2, 1), Corner(3, 2)]
    assert corners(H(1, 2, 3)) == [Corner(1, 1), Corner(2, 2), Corner(3, 3)]
    assert removable_corners(H(1, 2, 3)) == []
    # recomputed from the cell-by-cell oracle
    assert corners(H(3, 3, 4, 5, 5)) == [Corner(3, 1), Corner(4, 3), Corner(5, 4)]


def test_corners_match_oracle():
    for n in range(1, 7):
        for h in enumerate_hessenberg(n):
            assert corners(h) == sorted(corner_oracle(h), key=lambda c: c.j)


def test_remove_corner():
    assert remove_corner(H(2, 3, 3), Corner(2, 1)) == H(1, 3, 3)
    assert remove_corner(H(3, 3, 3), Corner(3, 1)) == H(2, 3, 3)
    with pytest.raises(ValueError):
        remove_corner(H(1, 2, 3), Corner(1, 1))
    with pytest.raises(ValueError):
        remove_corner(H(3, 3, 3), Corner(3, 2))


def test_remove_corner_properties():
    for n in range(2, 7):
        for h in enumerate_hessenberg(n):
            gens = ideal_generators(h)
            for c in removable_corners(h):
                h2 = remove_corner(h, c)
                assert hess_dimension(h2) == hess_dimension(h) - 1
                gens2 = ideal_generators(h2)
                diff = [k for k in range(n) if gens[k] != gens2[k]]
                assert diff == [c.j - 1]
                assert gens[c.j - 1] == f_poly(c.i, c.j)
                assert gens2[c.j - 1] == f_poly(c.i - 1, c.j)


def test_render_grid():
    assert render_grid(H(1, 2, 3)) == "###\n.##\n..#"
    assert render_grid(H(4, 4, 4, 4)) == "\n".join(["####"] * 4)
    assert render_grid(H(3, 3, 4, 5, 5)).splitlines() == [
        "#####", "#####", "#####", "..###", "...##"]


# -- f polynomials --------------------------------------------------------------

def test_f_poly_examples():
    x = var
    assert f_poly(1, 1) == x(1)
    assert f_poly(2, 1) == x(1) ** 2 - x(1) * x(2)
    for i in range(1, 7):
        assert f_poly(i, i) == sum((x(k) for k in range(1, i + 1)), ZERO)
    for n in range(2, 7):
        expected = x(1)
        for l in range(2, n + 1):
            expected = expected * (x(1) - x(l))
        assert f_poly(n, 1) == expected
    with pytest.raises(ValueError):
        f_poly(1, 2)
    with pytest.raises(ValueError):
        f_poly(2, 0)


def test_f_poly_degrees():
    for i in range(1, 8):
        for j in range(1, i + 1):
            f = f_poly(i, j)
            assert f.is_homogeneous() and f.degree() == i - j + 1


def test_generators():
    for n in range(1, 6):
        assert ideal_generators(HessenbergFunction(tuple(range(1, n + 1)))) == [
            f_poly(j, j) for j in range(1, n + 1)]
    assert ideal_generators(H(2, 3, 3)) == [f_poly(2, 1), f_poly(3, 2), f_poly(3, 3)]
    for n in range(1, 7):
        for h in enumerate_hessenberg(n):
            for j, g in enumerate(ideal_generators(h), start=1):
                assert g.degree() == h(j) - j + 1


def test_divided_difference_identities():
    for i in range(2, 9):
        for j in range(1, i):
            assert divided_difference(f_poly(i, j), j) == f_poly(i, j + 1)
            assert divided_difference(f_poly(i, j), i) == -f_poly(i - 1, j)


def test_chain():
    for n in range(1, 7):
        assert f_via_chain(n, 1, n) == f_poly(n, 1)
        if n > 1:
            assert f_via_chain(n - 1, 1, n) == -divided_difference(f_poly(n, 1), n)
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                assert f_via_chain(i, j, n) == f_poly(i, j)


# -- w_k^{(i,j)} and the alternating sum ---------------------------------------------

def test_w_kij_examples():
    assert w_kij(2, 1, 1) == P(2, 1)
    assert w_kij(3, 1, 1) == P(3, 1, 2)
    assert w_kij(3, 1, 2) == P(2, 3, 1)
    assert w_kij(3, 1, 1, n=5) == P(3, 1, 2, 4, 5)
    with pytest.raises(ValueError):
        w_kij(3, 1, 3)
    with pytest.raises(ValueError):
        w_kij(2, 2, 1)


def test_w_kij_lengths_and_values():
    for i in range(2, 8):
        for j in range(1, i):
            for k in range(1, i - j + 1):
                w = w_kij(i, j, k)
                assert length(w) == i - j
                # the values at positions j and i are consecutive
                assert w(j) == i - k + 1 and w(i) == i - k


def test_alternating_sum_examples():
    assert alternating_schubert_sum(2, 1) == var(1) == f_poly(1, 1)
    assert alternating_schubert_sum(3, 1) == schubert(P(3, 1, 2)) - schubert(P(2, 3, 1))
    assert alternating_schubert_sum(3, 1) == parse("x1^2 - x1*x2")
    for i in range(2, 7):
        assert alternating_schubert_sum(i, i - 1) == schubert(w_kij(i, i - 1, 1))


def test_verify_theorem_small():
    r = verify_theorem(2)
    assert r.cases == 1 and r.ok
    r = verify_theorem(5)
    assert r.cases == 10 and r.ok
    with pytest.raises(ValueError):
        verify_theorem(1)


def test_degree_bookkeeping():
    for i in range(2, 8):
        for j in range(1, i):
            assert f_poly(i - 1, j).degree() == i - j
            for k in range(1, i - j + 1):
                assert schubert(w_kij(i, j, k)).degree() == i - j


# -- cell criterion and the minimal missing cells ---------------------------------------

def test_cell_intersects_examples():
    for w in all_permutations(4):
        assert cell_intersects(H(4, 4, 4, 4), w)
    assert cell_intersects(H(3, 3, 3), P(3, 1, 2))
    assert not cell_intersects(H(2, 3, 3), P(3, 1, 2))
    for n in range(1, 6):
        assert cell_intersects(HessenbergFunction(tuple(range(1, n + 1))), identity(n))
    with pytest.raises(ValueError):
        cell_intersects(H(2, 2), identity(3))


def test_minimal_missing_examples():
    assert minimal_missing(H(3, 3, 3), Corner(3, 1)) == {P(3, 1, 2), P(2, 3, 1)}
    assert minimal_missing(H(2, 3, 3), Corner(2, 1)) == {P(2, 1, 3)}
    with pytest.raises(ValueError):
        minimal_missing(H(1, 2, 3), Corner(1, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_minimal_missing_matches_w_kij(n):
    for h in enumerate_hessenberg(n):
        for c in removable_corners(h):
            expected = {w_kij(c.i, c.j, k, n) for k in range(1, c.i - c.j + 1)}
            assert minimal_missing(h, c) == expected
