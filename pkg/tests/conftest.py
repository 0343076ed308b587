import random

from hypothesis import settings, strategies as st

from schubhess.polynomial import Polynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def random_polynomial(rng: random.Random, nvars: int = 5, max_terms: int = 8,
                      max_exp: int = 4, coeff: int = 9) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[mono] = rng.randint(-coeff, coeff)
    return Polynomial(terms)


def random_homogeneous(rng: random.Random, degree: int, nvars: int = 5,
                       max_terms: int = 6) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * nvars
        for _ in range(degree):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = rng.choice([c for c in range(-7, 8) if c])
    return Polynomial(terms)


monomials = st.lists(st.integers(0, 4), min_size=0, max_size=5).map(tuple)
polynomials = st.dictionaries(monomials, st.integers(-20, 20), max_size=20).map(Polynomial)


def descending_chains(w, limit=3):
    """Up to ``limit`` distinct length-decreasing chains of simple steps from w_0 down to w."""
    n = w.n
    target = n * (n - 1) // 2 - sum(
        1 for a in range(n) for b in range(a + 1, n) if w.images[a] > w.images[b])
    chains = []

    def walk(cur, word):
        if len(chains) >= limit:
            return
        if len(word) == target:
            if cur == w.images:
                chains.append(tuple(word))
            return
        for i in range(n - 1, 0, -1):
            if cur[i - 1] > cur[i]:
                nxt = list(cur)
                nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
                walk(tuple(nxt), word + [i])

    walk(tuple(range(n, 0, -1)), [])
    return chains


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
