import pytest

from schubhess.permutation import (Permutation, all_permutations, embed, identity, length,
                                   longest, simple, transposition)
from schubhess.polynomial import ONE, ZERO, parse, var
from schubhess.schubert import (cache_size, clear_cache, ddo_rule_check, monk_expand, monk_sum,
                                schubert, schubert_along, schubert_simple)
from schubhess.hessenberg import w_kij

from conftest import descending_chains


def P(*img):
    return Permutation(img)


def test_small_values():
    assert schubert(identity(4)) == ONE
    assert schubert(identity(1)) == ONE
    assert schubert(longest(3)) == parse("x1^2*x2")
    assert schubert(P(2, 1, 3)) == var(1)
    # hand-derived: d_2(x1^2 x2) and d_1(x1^2 x2)
    assert schubert(P(3, 1, 2)) == parse("x1^2")
    assert schubert(P(2, 3, 1)) == parse("x1*x2")
    assert schubert(P(1, 3, 2)) == parse("x1 + x2")


def test_top_polynomial():
    for n in range(1, 7):
        expected = ONE
        for k in range(1, n):
            expected = expected * var(k) ** (n - k)
        assert schubert(longest(n)) == expected


@pytest.mark.parametrize("r", range(1, 6))
def test_simple_reflections(r):
    expected = sum((var(k) for k in range(1, r + 1)), ZERO)
    assert schubert_simple(r) == expected
    assert schubert(simple(r, 7)) == expected


def test_ddo_rule_small():
    assert ddo_rule_check(P(2, 1, 3), 1) == ONE
    assert ddo_rule_check(P(1, 2, 3), 1) == ZERO
    with pytest.raises(ValueError):
        ddo_rule_check(P(1, 2, 3), 3)


def test_ddo_rule_exhaustive_s5():
    count = 0
    for w in all_permutations(5):
        for i in range(1, 5):
            d = ddo_rule_check(w, i)
            if w(i) > w(i + 1):
                assert d == schubert(w * simple(i, 5))
            else:
                assert d == ZERO
            count += 1
    assert count == 480


def test_word_independence_s5():
    for w in all_permutations(5):
        values = {schubert_along(w, word) for word in descending_chains(w)}
        values.add(schubert(w))
        assert len(values) == 1, w


def test_schubert_along_rejects_bad_chains():
    with pytest.raises(ValueError):
        schubert_along(P(2, 1, 3), [1, 1])
    with pytest.raises(ValueError):
        schubert_along(P(2, 1, 3), [1])


def test_homogeneity_s5():
    for w in all_permutations(5):
        s = schubert(w)
        assert s.is_homogeneous() and s.degree() == length(w)


def test_stability_s4():
    for w in all_permutations(4):
        clear_cache()
        direct = schubert(w)
        clear_cache()
        assert schubert(embed(w, 6)) == direct


def test_only_uses_first_n_minus_1_variables():
    for w in all_permutations(5):
        assert schubert(w).nvars <= 4


def test_positivity_s6():
    for w in all_permutations(6):
        assert all(c > 0 for c in schubert(w).coefficients())


def test_cache_shared_across_degrees():
    clear_cache()
    schubert(P(2, 1, 3))
    size = cache_size()
    schubert(embed(P(2, 1), 6))
    assert cache_size() == size


def test_monk_examples():
    exp = monk_expand(1, P(2, 1, 3))
    assert {t.stripped() for t in exp.terms} == {P(3, 1, 2)}
    assert var(1) * var(1) == monk_sum(exp)
    for n in range(2, 5):
        exp = monk_expand(1, identity(n))
        assert monk_sum(exp) == var(1)
        assert {t.stripped() for t in exp.terms} == {P(2, 1)}


def test_monk_transpositions_listing():
    exp = monk_expand(2, P(1, 3, 2))
    assert exp.transpositions() == [(1, 3), (2, 4)]


def test_monk_q_bound_is_not_truncating():
    # compare against a much larger embedding
    for w in all_permutations(4):
        for r in range(1, 5):
            small = {t.stripped() for t in monk_expand(r, w).terms}
            big = monk_expand(r, embed(w, 8))
            assert small == {t.stripped() for t in big.terms}


@pytest.mark.parametrize("n", [3, 4])
def test_monk_soundness(n):
    for w in all_permutations(n):
        for r in range(1, n + 1):
            exp = monk_expand(r, w)
            assert len(exp.terms) == len(set(exp.terms))
            assert all(length(t) == length(w) + 1 for t in exp.terms)
            assert schubert_simple(r) * schubert(w) == monk_sum(exp)


def _case_terms(n):
    """The three case families for S_{s_r} * S_{w_k^{(n-1,1)}}, written out as listed."""
    T = lambda p, q: transposition(p, q, n)
    W = lambda k: embed(w_kij(n - 1, 1, k), n)
    out = {}
    for k in range(1, n - 1):
        out[(1, k)] = {W(1) * T(1, n)} if k == 1 else {W(k) * T(1, n - k)}
        if k == 1:
            out[(n - 2, k)] = {W(1) * T(1, n), W(1) * T(n - 2, n - 1)}
        elif k != n - 2:
            out[(n - 2, k)] = {W(k) * T(n - k - 1, n - 1), W(k) * T(n - 2, n)}
        else:
            out[(n - 2, k)] = {W(k) * T(n - 2, n)}
        if k == 1:
            out[(n - 1, k)] = {W(1) * T(1, n), W(1) * T(n - 1, n)}
        else:
            out[(n - 1, k)] = {W(k) * T(n - 2, n), W(k) * T(n - 1, n)}
    return out


@pytest.mark.parametrize("n", [4, 5])
def test_monk_case_families(n):
    for (r, k), expected in _case_terms(n).items():
        got = {t.stripped() for t in monk_expand(r, w_kij(n - 1, 1, k)).terms}
        assert got == {t.stripped() for t in expected}, (r, k)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_case_relabelling_identities(n):
    T = lambda p, q: transposition(p, q, n)
    W = lambda k: embed(w_kij(n - 1, 1, k), n)
    assert W(1) * T(1, n) == w_kij(n, 1, 1)
    for k in range(1, n - 1):
        assert W(k) * T(n - 1, n) == w_kij(n, 1, k + 1)
    for k in range(1, n - 2):
        assert W(k + 1) * T(1, n - k - 1) == W(k) * T(n - k - 1, n - 1)


def test_concurrent_cache_is_consistent():
    from concurrent.futures import ThreadPoolExecutor
    clear_cache()
    perms = list(all_permutations(5))
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(schubert, perms))
    clear_cache()
    assert results == [schubert(w) for w in perms]
