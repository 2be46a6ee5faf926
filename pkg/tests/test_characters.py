import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_weight
from oachar.characters import (
    ClassFunction,
    KernelError,
    character_table,
    cyclic_characters,
    fourier_expand,
    generic_character_table,
    inner_product,
    kernel,
    principal_character,
    product_characters,
    reconstruct,
    restrict_to_base,
    weight_and_base,
)
from oachar.groups import FactorIndexSet, direct_product, hamming_weight, make_cyclic, make_from_table, make_s3


def perm_group(perms, labels=None):
    perms = [tuple(p) for p in perms]
    lookup = {p: i for i, p in enumerate(perms)}
    table = [[lookup[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]
    return make_from_table(len(perms), table, labels)


def s4():
    return perm_group(sorted(itertools.permutations(range(4))))


def d4():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    elems = {(0, 1, 2, 3)}
    frontier = list(elems)
    while frontier:
        p = frontier.pop()
        for q in (r, s):
            pq = tuple(p[q[i]] for i in range(4))
            if pq not in elems:
                elems.add(pq)
                frontier.append(pq)
    return perm_group(sorted(elems))


def s3_as_table():
    s3 = make_s3()
    return make_from_table(6, s3.table, s3.labels)


def sorted_rows(values):
    r = np.round(values, 8) + 0.0
    return sorted(tuple(zip(row.real.tolist(), row.imag.tolist())) for row in r)


def table_residuals(table):
    g = table.group
    sizes = np.asarray(g.classes.sizes, dtype=float)
    V = table.values
    gram = (V * sizes) @ V.conj().T / g.order
    row = np.abs(gram - np.eye(len(V))).max()
    col_gram = V.conj().T @ V
    col = np.abs(col_gram - np.diag(g.order / sizes)).max()
    deg = abs(np.sum(table.degrees**2) - g.order)
    return row, col, deg


# -- cyclic and product tables ---------------------------------------------

def test_cyclic_characters_examples():
    t2 = cyclic_characters(2)
    assert t2[1](1) == pytest.approx(-1)
    t1 = cyclic_characters(1)
    assert len(t1) == 1 and t1[0].is_principal
    t6 = cyclic_characters(6)
    assert t6[1](3) == pytest.approx(-1)
    assert t6.principal == 0
    assert t6[1](1) == pytest.approx(np.exp(2j * np.pi / 6))


def test_product_klein_table():
    g = direct_product([make_cyclic(2)] * 2)
    t = character_table(g)
    assert len(t) == 4
    assert np.allclose(np.abs(t.values.real), 1) and np.allclose(t.values.imag, 0)
    assert t[t.principal].parts == (0, 0)


def test_product_s3_z2_degrees():
    g = direct_product([make_s3(), make_cyclic(2)])
    t = character_table(g)
    assert sorted(np.round(t.degrees).astype(int)) == [1, 1, 1, 1, 2, 2]
    assert np.sum(t.degrees**2) == pytest.approx(12)


def test_product_rejects_mismatched_tables():
    g = direct_product([make_s3(), make_cyclic(2)])
    with pytest.raises(ValueError):
        product_characters(g, [character_table(make_cyclic(2)), character_table(make_s3())])


def test_principal_times_principal():
    g = direct_product([make_s3(), make_cyclic(3)])
    t = character_table(g)
    assert t.principal == 0
    assert t[0].parts == (0, 0) and t[0].is_principal


def test_product_ordering_is_deterministic():
    g = direct_product([make_s3(), make_cyclic(2), make_cyclic(2)])
    t = product_characters(g, [character_table(f) for f in g.factors])
    assert [c.label for c in t] == [c.label for c in character_table(g)]
    assert list(t.weights) == sorted(t.weights)


# -- generic algorithm -------------------------------------------------------

def test_generic_s3_table():
    g = make_s3()
    t = generic_character_table(g)
    assert list(np.round(t.degrees).astype(int)) == [1, 1, 2]
    sgn = t[1]
    assert sgn(g.parse_label("a")) == pytest.approx(-1)
    assert sgn(g.parse_label("x")) == pytest.approx(1)
    assert sorted_rows(t.values) == sorted_rows(character_table(g).values)
    assert max(table_residuals(t)) < 1e-9


def test_generic_on_table_copy_of_s3():
    t = character_table(s3_as_table())
    assert sorted_rows(t.values) == sorted_rows(character_table(make_s3()).values)


@pytest.mark.parametrize("s", range(1, 13))
def test_generic_matches_cyclic(s):
    g = make_cyclic(s)
    gen = generic_character_table(g)
    assert len(gen) == s
    assert sorted_rows(gen.values) == sorted_rows(cyclic_characters(s).values)
    assert max(table_residuals(gen)) < 1e-9


def test_generic_trivial_group():
    t = generic_character_table(make_cyclic(1))
    assert len(t) == 1 and t[0].is_principal


@pytest.mark.parametrize(
    "group, degrees",
    [(s4(), [1, 1, 2, 3, 3]), (d4(), [1, 1, 1, 1, 2]), (make_from_table(4, [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]), [1, 1, 1, 1])],
    ids=["S4", "D4", "V4"],
)
def test_generic_nonabelian_degrees(group, degrees):
    t = generic_character_table(group)
    assert sorted(np.round(t.degrees).astype(int)) == degrees
    assert max(table_residuals(t)) < 1e-9


def test_generic_seed_independent():
    a = generic_character_table(s4(), seed=0)
    b = generic_character_table(s4(), seed=12345)
    assert np.allclose(a.values, b.values)


@pytest.mark.parametrize(
    "group",
    [make_s3(), make_cyclic(7), s4(), direct_product([make_s3(), make_cyclic(2), make_cyclic(2)]),
     direct_product([make_cyclic(2), make_cyclic(3), make_cyclic(4)]), direct_product([d4(), make_cyclic(3)])],
    ids=lambda g: g.name,
)
def test_orthogonality_relations(group):
    t = character_table(group)
    assert len(t) == len(group.classes)
    row, col, deg = table_residuals(t)
    assert row < 1e-9 and col < 1e-8 and deg < 1e-9


# -- inner products and expansions --------------------------------------------

def test_inner_product_examples():
    t = character_table(make_s3())
    for i, j in itertools.product(range(3), repeat=2):
        assert inner_product(t[i], t[j]) == pytest.approx(float(i == j), abs=1e-12)
    one = principal_character(make_s3())
    assert inner_product(one, one) == pytest.approx(1)
    with pytest.raises(ValueError):
        inner_product(one, principal_character(make_cyclic(2)))


def test_fourier_expand_constants():
    g = direct_product([make_s3(), make_cyclic(2)])
    t = character_table(g)
    mu = fourier_expand(principal_character(g))
    assert mu[t.principal] == pytest.approx(1) and np.allclose(np.delete(mu, t.principal), 0)
    mu = fourier_expand(ClassFunction(g, np.full(len(g.classes), 3.5)))
    assert mu[t.principal] == pytest.approx(3.5) and np.allclose(np.delete(mu, t.principal), 0)


@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_fourier_round_trip_s3(vals):
    f = ClassFunction(make_s3(), vals)
    t = character_table(make_s3())
    back = reconstruct(fourier_expand(f), t)
    assert np.abs(back.values - f.values).max() < 1e-9


# -- kernels, weights, restriction -----------------------------------------------

def test_kernel_examples():
    g = make_s3()
    t = character_table(g)
    assert kernel(t[0]) == set(g.elements())
    assert {g.label(x) for x in kernel(t[1])} == {"e", "x", "y"}
    gen = generic_character_table(g)
    assert {g.label(x) for x in kernel(gen[1])} == {"e", "x", "y"}
    assert kernel(cyclic_characters(2)[1]) == {0}


@pytest.mark.parametrize(
    "group",
    [make_s3(), d4(), s4(), direct_product([make_s3(), make_cyclic(2), make_cyclic(2)]), direct_product([make_cyclic(4), make_cyclic(6)])],
    ids=lambda g: g.name,
)
def test_kernels_are_normal_subgroups(group):
    elems = list(group.elements())
    for chi in character_table(group):
        ker = kernel(chi)
        assert group.identity in ker
        for a in ker:
            assert group.inverse(a) in ker
            for b in ker:
                assert group.multiply(a, b) in ker
            for h in elems:
                assert group.multiply(group.multiply(h, a), group.inverse(h)) in ker


def test_weight_examples():
    g = direct_product([make_s3(), make_cyclic(2)])
    t = character_table(g)
    assert weight_and_base(t[t.principal], g)[0] == 0
    sgn = next(c for c in t if c.label == "sgn*chi0")
    w, base = weight_and_base(sgn, g)
    assert w == 1 and base.indices == (1,)
    assert brute_weight(sgn, g) == (1, (1,))


@pytest.mark.parametrize(
    "group",
    [direct_product([make_s3(), make_cyclic(2), make_cyclic(2)]), direct_product([make_cyclic(2), make_cyclic(3), make_cyclic(4)])],
    ids=lambda g: g.name,
)
def test_weight_shortcut_matches_exhaustive_search(group):
    t = character_table(group)
    for chi, w in zip(t, t.weights):
        weight, base = weight_and_base(chi, group)
        assert (weight, base.indices) == brute_weight(chi, group)
        assert w == weight
        assert (weight == 0) == chi.is_principal


ABELIAN_48 = [
    fs
    for r in (1, 2, 3, 4)
    for fs in itertools.combinations_with_replacement([2, 3, 4, 6], r)
    if np.prod(fs) <= 48
]


@pytest.mark.parametrize("orders", ABELIAN_48, ids=lambda fs: "x".join(f"Z{s}" for s in fs))
def test_weight_equals_hamming_weight_of_index(orders):
    g = direct_product([make_cyclic(s) for s in orders])
    for chi in character_table(g):
        # parts are the per-factor indices u, which are elements of Z_s
        assert weight_and_base(chi, g)[0] == hamming_weight(chi.parts, g)


def test_restrict_to_base():
    g = direct_product([make_s3(), make_cyclic(2)])
    t = character_table(g)
    one = restrict_to_base(t[t.principal], FactorIndexSet((1, 2), 2))
    assert one.is_principal
    sgn = next(c for c in t if c.label == "sgn*chi0")
    r = restrict_to_base(sgn, FactorIndexSet((1,), 2))
    s3_sgn = character_table(make_s3())[1]
    assert np.allclose(r.values, s3_sgn.values)
    full = next(c for c in t if c.label == "std*chi1")
    same = restrict_to_base(full, FactorIndexSet((1, 2), 2))
    assert np.allclose(same.values, full.values)
    with pytest.raises(KernelError):
        restrict_to_base(full, FactorIndexSet((1,), 2))
    assert restrict_to_base(t[t.principal], FactorIndexSet((), 2)).group.order == 1


def test_restriction_irreducible():
    g = direct_product([make_s3(), make_cyclic(2), make_cyclic(3)])
    for chi in character_table(g):
        _, base = weight_and_base(chi, g)
        r = restrict_to_base(chi, base)
        assert inner_product(r, r) == pytest.approx(1)
