"""
Exhaustive identity sweeps.  Each ``verify_*`` returns a
:class:`~schubhess.report.VerificationReport`; failing cases carry the inputs
and both sides as text.
"""

from __future__ import annotations

import time
from typing import Callable

from .hessenberg import (alternating_schubert_sum, enumerate_hessenberg, f_poly, f_via_chain,
                         ideal_generators, minimal_missing, remove_corner, removable_corners,
                         verify_theorem, w_kij)
from .ideal import contains, groebner
from .parallel import ordered_map
from .permutation import all_permutations, length, simple
from .polynomial import divided_difference
from .report import VerificationReport
from .schubert import monk_expand, monk_sum, schubert

__all__ = ["CHECKS", "BUDGETS", "run_check", "verify_theorem", "verify_ddo",
           "verify_chain", "verify_monk", "verify_lemma42", "verify_nonvanish"]


def _timed(report: VerificationReport, start: float) -> VerificationReport:
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _ddo_case(case):
    kind, i, j = case
    if kind == "forward":
        expected, actual = f_poly(i, j + 1), divided_difference(f_poly(i, j), j)
    else:
        expected, actual = -f_poly(i - 1, j), divided_difference(f_poly(i, j), i)
    return expected == actual, str(expected), str(actual)


def verify_ddo(n: int, jobs: int = 1) -> VerificationReport:
    """d_j f_{i,j} = f_{i,j+1} and d_i f_{i,j} = -f_{i-1,j} for i <= n."""
    start = time.perf_counter()
    report = VerificationReport("ddo", {"n": n})
    cases = [("forward", i, j) for i in range(2, n + 1) for j in range(1, i)]
    cases += [("down", i, j) for i in range(2, n + 1) for j in range(1, i)]
    for (kind, i, j), (ok, e, a) in zip(cases, ordered_map(_ddo_case, cases, jobs)):
        report.record(ok, identity=kind, i=i, j=j, expected=e, actual=a)
    return _timed(report, start)


def _chain_case(case):
    i, j, n = case
    expected, actual = f_poly(i, j), f_via_chain(i, j, n)
    return expected == actual, str(expected), str(actual)


def verify_chain(n: int, jobs: int = 1) -> VerificationReport:
    """Every f_{i,j}, j <= i <= n, is recovered from f_{n,1} by divided differences."""
    start = time.perf_counter()
    report = VerificationReport("chain", {"n": n})
    cases = [(i, j, n) for i in range(1, n + 1) for j in range(1, i + 1)]
    for (i, j, _), (ok, e, a) in zip(cases, ordered_map(_chain_case, cases, jobs)):
        report.record(ok, i=i, j=j, expected=e, actual=a)
    return _timed(report, start)


def _monk_case(case):
    r, w = case
    exp = monk_expand(r, w)
    lhs = schubert(simple(r, r + 1)) * schubert(w)
    rhs = monk_sum(exp)
    lengths_ok = all(length(t) == length(w) + 1 for t in exp.terms)
    return lhs == rhs and lengths_ok, str(lhs), str(rhs)


def verify_monk(n: int, jobs: int = 1, max_r: int | None = None) -> VerificationReport:
    """S_{s_r} * S_w against Monk's rule for every w in S_n and r < n (or r <= max_r)."""
    start = time.perf_counter()
    top = n - 1 if max_r is None else max_r
    report = VerificationReport("monk", {"n": n, "max_r": top})
    cases = [(r, w) for w in all_permutations(n) for r in range(1, top + 1)]
    for (r, w), (ok, e, a) in zip(cases, ordered_map(_monk_case, cases, jobs)):
        report.record(ok, r=r, w=w, expected=e, actual=a)
    return _timed(report, start)


def _lemma_case(case):
    h, c = case
    expected = {w_kij(c.i, c.j, k, h.n) for k in range(1, c.i - c.j + 1)}
    actual = minimal_missing(h, c)
    fmt = lambda ws: " ".join(sorted(map(str, ws)))
    return expected == actual, fmt(expected), fmt(actual)


def verify_lemma42(n: int, jobs: int = 1) -> VerificationReport:
    """Brute-force minimal missing cells equal the w_k^{(i,j)} for every removable corner."""
    start = time.perf_counter()
    report = VerificationReport("lemma42", {"n": n})
    cases = [(h, c) for h in enumerate_hessenberg(n) for c in removable_corners(h)]
    for (h, c), (ok, e, a) in zip(cases, ordered_map(_lemma_case, cases, jobs)):
        report.record(ok, h=h, corner=c, expected=e, actual=a)
    return _timed(report, start)


def _nonvanish_case(h):
    G = groebner(ideal_generators(h), h.n)
    out = []
    for c in removable_corners(h):
        h2 = remove_corner(h, c)
        G2 = groebner(ideal_generators(h2), h.n)
        f = f_poly(c.i - 1, c.j)
        out.append((c, "f_(i-1,j) not in I(h)", not contains(G, f)))
        out.append((c, "f_(i-1,j) in I(h')", contains(G2, f)))
        out.append((c, "alternating sum in I(h')",
                    contains(G2, alternating_schubert_sum(c.i, c.j))))
    return out


def verify_nonvanish(n: int, jobs: int = 1) -> VerificationReport:
    """Membership facts behind removing a corner, decided by Gröbner bases."""
    start = time.perf_counter()
    report = VerificationReport("nonvanish", {"n": n})
    hs = list(enumerate_hessenberg(n))
    for h, results in zip(hs, ordered_map(_nonvanish_case, hs, jobs)):
        for c, claim, ok in results:
            report.record(ok, h=h, corner=c, claim=claim)
    return _timed(report, start)


CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "theorem": verify_theorem,
    "ddo": verify_ddo,
    "chain": verify_chain,
    "monk": verify_monk,
    "lemma42": verify_lemma42,
    "nonvanish": verify_nonvanish,
}

# largest supported n for each sweep
BUDGETS = {"theorem": 8, "ddo": 8, "chain": 8, "monk": 5, "lemma42": 6, "nonvanish": 4}

MINIMUM_N = {"theorem": 2, "ddo": 1, "chain": 1, "monk": 1, "lemma42": 1, "nonvanish": 1}


def run_check(name: str, n: int, jobs: int = 1, unsupported: bool = False) -> VerificationReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    if n < MINIMUM_N[name]:
        raise ValueError(f"{name} needs n >= {MINIMUM_N[name]}")
    if n > BUDGETS[name] and not unsupported:
        raise ValueError(f"n={n} exceeds the budget n <= {BUDGETS[name]} for {name}")
    return CHECKS[name](n, jobs=jobs)
