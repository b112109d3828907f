import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import as_perms, group_and_lattice
from sigmagroups.groups import (
    GroupError,
    NamedFamilySpec,
    OrderCapExceeded,
    Permutation,
    PermutationParseError,
    center,
    classify_p_group,
    commutator_subgroup,
    core_in,
    direct_product,
    group_from_generators,
    is_abelian,
    is_nilpotent,
    is_normal,
    make_family,
    normal_closure,
    normalizer,
    parse_permutation,
    prime_factorization,
    product_set,
    quotient_group,
)


def perm(text, degree):
    return parse_permutation(text, degree)


def test_parse_and_print_round_trip():
    p = perm("(1 2 3)(4 5)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(1 2 3)(4 5)"
    assert perm(str(p), 5) == p
    assert perm("(1,2,3)(4,5)", 5) == p
    assert str(Permutation.identity(3)) == "()"


@pytest.mark.parametrize("text", ["(1 2", "(0 1)", "(1 6)", "(1 1 2)", "(a b)"])
def test_parse_rejects_bad_cycles(text):
    with pytest.raises(PermutationParseError):
        parse_permutation(text, 5)


def test_product_applies_left_factor_first():
    a, b = perm("(1 2)", 3), perm("(2 3)", 3)
    # 1 -> 2 under a, then 2 -> 3 under b
    assert (a * b).images[0] == 2
    assert (a * b).images == oracles.compose(a.images, b.images)


def test_prime_factorization():
    assert prime_factorization(1) == {}
    assert prime_factorization(360) == {2: 3, 3: 2, 5: 1}
    assert prime_factorization(97) == {97: 1}


@pytest.mark.parametrize("spec,order", [
    (NamedFamilySpec("cyclic", (6,)), 6),
    (NamedFamilySpec("dihedral", (4,)), 8),
    (NamedFamilySpec("dihedral", (2,)), 4),
    (NamedFamilySpec("symmetric", (4,)), 24),
    (NamedFamilySpec("alternating", (5,)), 60),
    (NamedFamilySpec("quaternion"), 8),
    (NamedFamilySpec("modular_p", (2, 4)), 16),
    (NamedFamilySpec("modular_p", (3, 3)), 27),
    (NamedFamilySpec("from_generators", (3, ["(1 2 3)"])), 3),
    (NamedFamilySpec("direct_product", (NamedFamilySpec("cyclic", (2,)), NamedFamilySpec("symmetric", (3,)))), 12),
])
def test_family_orders(spec, order):
    G = make_family(spec)
    assert G.order == order
    assert G.is_latin_square() and G.is_associative()


def test_modular_group_relations():
    # nonabelian of order 16 with an element of order 8
    G = make_family(NamedFamilySpec("modular_p", (2, 4)))
    assert not is_abelian(G)
    assert G.element_orders.max() == 8


def test_unknown_family_and_bad_params():
    with pytest.raises(GroupError):
        make_family(NamedFamilySpec("sporadic", (1,)))
    with pytest.raises(GroupError):
        make_family(NamedFamilySpec("modular_p", (4, 3)))
    with pytest.raises(GroupError):
        make_family(NamedFamilySpec("cyclic", (0,)))


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        make_family(NamedFamilySpec("symmetric", (5,)), order_cap=100)


def test_table_matches_permutation_composition(small):
    _, G, _ = small
    perms = [p.images for p in G.element_perms]
    assert len(set(perms)) == G.order
    rng = np.random.default_rng(1)
    for a, b in rng.integers(0, G.order, size=(200, 2)):
        assert perms[G.table[a, b]] == oracles.compose(perms[a], perms[b])
    assert perms[0] == tuple(range(len(perms[0])))
    assert all(oracles.compose(perms[x], perms[G.inverse[x]]) == perms[0] for x in range(G.order))


def test_element_orders_match_oracle(small):
    _, G, _ = small
    assert [oracles.elem_order(p.images) for p in G.element_perms] == list(G.element_orders)


def test_direct_product_table():
    A = make_family(NamedFamilySpec("cyclic", (2,)))
    B = make_family(NamedFamilySpec("symmetric", (3,)))
    P = direct_product(A, B)
    assert P.order == 12 and P.is_associative()
    for (g, h), (x, y) in itertools.product(itertools.product(range(2), range(6)), repeat=2):
        assert P.table[g * 6 + h, x * 6 + y] == A.table[g, x] * 6 + B.table[h, y]


def test_normality_core_closure_against_oracle(small):
    name, G, L = small
    subs = list(L.nodes)[:40]
    whole = as_perms(G, G.full_bits)
    for H in subs:
        Hp = as_perms(G, H.bits)
        assert is_normal(G, H) == oracles.is_normal(Hp, whole)
        N = normalizer(G, H)
        assert as_perms(G, N.bits) == frozenset(g for g in whole if all(oracles.conjugate(h, g) in Hp for h in Hp))
        assert as_perms(G, core_in(G, G.whole(), H).bits) == oracles.core(Hp, whole)
        closure = as_perms(G, normal_closure(G, H).bits)
        conj = {oracles.conjugate(h, g) for h in Hp for g in whole}
        assert closure == oracles.closure(list(conj), len(next(iter(whole))))


def test_product_set_and_quotient():
    G, L = group_and_lattice("S4")
    V = next(L.nodes[i] for i in L.nodes_of_order(4) if L.normal_flags[i])
    Q, proj = quotient_group(G, V)
    assert Q.order == 6 and not is_abelian(Q)
    # the projection is a homomorphism
    for a in range(G.order):
        for b in range(G.order):
            assert proj[G.table[a, b]] == Q.table[proj[a], proj[b]]
    H = L.nodes[L.nodes_of_order(3)[0]]
    assert len(product_set(G, V, H)) == 12
    with pytest.raises(GroupError):
        quotient_group(G, H)


def test_commutators_center_nilpotency():
    S4, _ = group_and_lattice("S4")
    assert len(commutator_subgroup(S4)) == 12
    assert len(center(S4)) == 1
    assert not is_nilpotent(S4)
    Q8, _ = group_and_lattice("Q8")
    assert len(center(Q8)) == 2 and is_nilpotent(Q8)
    C3Q8, _ = group_and_lattice("C3xQ8")
    assert is_nilpotent(C3Q8)


@pytest.mark.parametrize("name,tag", [
    ("C8", "cyclic"), ("C1", "cyclic"), ("C2xC4", "cyclic_times_p"), ("C2xC2", "cyclic_times_p"),
    ("Q8", "quaternion"), ("M(2,4)", "modular"), ("M(2,3)", "modular"), ("D8", "modular"),
    ("C2xD4", "other"), ("C4xC4", "other"), ("D16", "other"), ("C2xQ8", "other"),
])
def test_classify_p_group(name, tag):
    G, _ = group_and_lattice(name)
    assert classify_p_group(G) == tag


def test_classify_abelian_against_invariants():
    for name in ("C2xC4", "C4xC4", "C2xD4", "C2xC8", "C3xC3", "C9"):
        G, _ = group_and_lattice(name)
        inv = oracles.abelian_invariants(as_perms(G, G.full_bits))
        expected = ("cyclic" if len(inv) == 1
                    else "cyclic_times_p" if len(inv) == 2 and inv[1] == min(oracles.prime_divisors(G.order))
                    else "other")
        assert classify_p_group(G) == expected, name


def test_classify_rejects_non_p_group():
    G, _ = group_and_lattice("S3")
    with pytest.raises(GroupError):
        classify_p_group(G)


small_perm = st.permutations(range(5)).map(lambda xs: Permutation(tuple(xs)))


@settings(max_examples=60, deadline=None)
@given(st.lists(small_perm, min_size=1, max_size=3))
def test_closure_matches_oracle(gens):
    G = group_from_generators(gens)
    expected = oracles.closure([g.images for g in gens], 5)
    assert {p.images for p in G.element_perms} == expected
    assert G.is_latin_square()
    assert G.is_associative(sample=500)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_perm, min_size=1, max_size=2), st.data())
def test_generated_subgroup_is_closed(gens, data):
    from sigmagroups.groups import generated_subgroup
    G = group_from_generators(gens)
    seed = data.draw(st.sets(st.integers(0, G.order - 1), max_size=3))
    H = generated_subgroup(G, G.subset(seed))
    assert H.is_subgroup()
    assert as_perms(G, H.bits) == oracles.closure([G.element_perms[i].images for i in seed], 5)
