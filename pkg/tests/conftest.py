"""Independent oracles shared by the test modules.

Nothing here calls into the code paths being checked: permutations are
enumerated directly and standardization is recomputed by counting.
"""

import random
from itertools import permutations
from pathlib import Path

import pytest

from dqsym.fqsym import Biword, Element
from dqsym.qpoly import QPoly

GOLDEN = Path(__file__).parent / "golden"


def std_by_counting(w):
    return tuple(1 + sum(1 for j, y in enumerate(w) if y < x or (y == x and j < i))
                 for i, x in enumerate(w))


def brute_convolution(alpha, beta):
    """Scan the whole symmetric group; returns {gamma: whether n sits in the prefix}."""
    k, n = len(alpha), len(alpha) + len(beta)
    out = {}
    for g in permutations(range(1, n + 1)):
        if std_by_counting(g[:k]) == tuple(alpha) and std_by_counting(g[k:]) == tuple(beta):
            out[g] = n in g[:k]
    return out


def psi_u_by_choices(u):
    """
    Expand the nested bracket by hand: letter i is appended on the right
    (coefficient 1) or prepended on the left (coefficient -q).
    Returns {(colors, positions): {degree: coefficient}}.
    """
    states = [((u[0],), (1,), 0, 1)]
    for i, c in enumerate(u[1:], 2):
        nxt = []
        for colors, pos, deg, sign in states:
            nxt.append((colors + (c,), pos + (i,), deg, sign))
            nxt.append(((c,) + colors, (i,) + pos, deg + 1, -sign))
        states = nxt
    out = {}
    for colors, pos, deg, sign in states:
        d = out.setdefault((colors, pos), {})
        d[deg] = d.get(deg, 0) + sign
    return out


def element_from_choices(table):
    terms = {}
    for (colors, pos), degs in table.items():
        top = max(degs) if degs else 0
        terms[Biword(pos, colors)] = QPoly([degs.get(k, 0) for k in range(top + 1)])
    return Element(terms)


def bip(top, bottom, coeff=1):
    """Biword literal written as color word over permutation."""
    t = tuple(int(x) for x in str(top))
    b = tuple(int(x) for x in str(bottom))
    return Element({Biword(b, t): coeff})


def random_element(rng, max_weight=3, n_terms=3, colors=3, max_deg=2, nonempty=True):
    terms = {}
    for _ in range(n_terms):
        k = rng.randint(1 if nonempty else 0, max_weight)
        sigma = tuple(rng.sample(range(1, k + 1), k))
        cols = tuple(rng.randint(1, colors) for _ in range(k))
        coeff = QPoly([rng.randint(-2, 2) for _ in range(rng.randint(1, max_deg + 1))])
        terms[Biword(sigma, cols)] = coeff
    return Element(terms)


@pytest.fixture
def rng():
    return random.Random(20260418)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
