import cmath
import itertools
from collections import Counter

import pytest

from oachar import direct_product, from_labels, make_cyclic, make_s3

# The two S3 arrays, written column by column exactly as printed (runs as
# columns, factors as rows) and transposed here.
EXAMPLE1_COLUMNS = [
    "e x y e x y a b c a b c",
    "1 1 1 0 0 0 0 0 0 1 1 1",
    "0 0 0 1 1 1 0 0 0 1 1 1",
]
EXAMPLE2_COLUMNS = [
    "e e e e x y x y x y x y a b c a b c a b c a b c",
    "0 0 1 1 0 0 0 0 1 1 1 1 0 0 0 0 0 0 1 1 1 1 1 1",
    "0 1 0 1 0 0 1 1 0 0 1 1 0 0 0 1 1 1 0 0 0 1 1 1",
    "0 1 1 0 0 0 1 1 1 1 0 0 1 1 1 0 0 0 0 0 0 1 1 1",
]


def transpose(rows):
    return [" ".join(col) for col in zip(*(r.split() for r in rows))]


@pytest.fixture(scope="session")
def S3():
    return make_s3()


@pytest.fixture(scope="session")
def Z2():
    return make_cyclic(2)


@pytest.fixture(scope="session")
def example1():
    g = direct_product([make_s3(), make_cyclic(2), make_cyclic(2)])
    return from_labels(g, transpose(EXAMPLE1_COLUMNS))


@pytest.fixture(scope="session")
def example2():
    g = direct_product([make_s3()] + [make_cyclic(2)] * 3)
    return from_labels(g, transpose(EXAMPLE2_COLUMNS))


@pytest.fixture(scope="session")
def halffrac():
    g = direct_product([make_cyclic(2)] * 3)
    return from_labels(g, ["0 0 0", "0 1 1", "1 0 1", "1 1 0"])


# -- independent oracles --------------------------------------------------

def brute_strength(design):
    """Strength from the run list alone: every t-column submatrix must list
    every level combination equally often."""
    runs = design.runs()
    orders = [f.order for f in design.group.factors]
    t = 0
    for r in range(1, design.k + 1):
        for cols in itertools.combinations(range(design.k), r):
            cnt = Counter(tuple(run[c] for c in cols) for run in runs)
            total = 1
            for c in cols:
                total *= orders[c]
            if len(cnt) != total or len(set(cnt.values())) != 1:
                return t
        t = r
    return t


def brute_abelian_gwlp(design):
    """A_j for cyclic factors straight from the defining sums, looping over
    every character index u and every element x of G."""
    orders = [f.order for f in design.group.factors]
    N = design.N
    A = [0.0] * design.k
    elems = list(itertools.product(*(range(s) for s in orders)))
    for u in elems:
        J = 0j
        for x in elems:
            o = design.O(x)
            if o:
                phase = sum(ui * xi / s for ui, xi, s in zip(u, x, orders))
                J += o * cmath.exp(-2j * cmath.pi * phase)
        w = sum(1 for ui in u if ui)
        if w:
            A[w - 1] += abs(J) ** 2 / N**2
    return A


def brute_weight(chi, group):
    """Rank of the complement of the largest factorial subgroup inside
    ker(chi), by enumerating every index subset and every element."""
    from oachar import FactorIndexSet

    deg = chi(group.identity)
    inside = []
    for r in range(group.k + 1):
        for S in itertools.combinations(range(1, group.k + 1), r):
            idx = FactorIndexSet(S, group.k)
            members = itertools.product(*(group.factors[i - 1].elements() for i in S))
            if all(abs(chi(group.embed(y, idx)) - deg) <= 1e-9 for y in members):
                inside.append(set(S))
    largest = max(inside, key=len)
    # the largest one must contain every other, otherwise "largest" is ill-defined
    assert all(S <= largest for S in inside)
    base = tuple(i for i in range(1, group.k + 1) if i not in largest)
    return len(base), base
