import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import ORACLE_GROUPS, as_perms, group_and_lattice, oracle_subgroups
from sigmagroups import bits
from sigmagroups.catalog import prime_partitions
from sigmagroups.groups import parse_permutation
from sigmagroups.sigma import MINIMAL, ONE, is_sigma_nilpotent, parse_partition
from sigmagroups.subnormal import (
    NORMAL,
    SIGMA_PRIMARY,
    SubnormalWitness,
    depth_set_bits,
    is_irreducible_pair,
    is_sigma_subnormal,
    is_subnormal,
    m_sigma,
    sigma_subnormal_nodes,
    subnormal_nodes,
    verify_subnormal_witness,
)


def _classes(part):
    return [tuple(range(2, 200))] if part.universal else part.classes


def test_subnormal_matches_oracle(small):
    name, G, L = small
    expected = oracles.subnormal_set(as_perms(G, G.full_bits), oracle_subgroups(name))
    reached = subnormal_nodes(L)
    for i in range(len(L)):
        inside = as_perms(G, L.masks[i]) in expected
        assert bool((reached >> i) & 1) == inside
        assert is_subnormal(G, L.nodes[i]) == inside


def test_sigma_subnormal_matches_oracle(small):
    name, G, L = small
    whole = as_perms(G, G.full_bits)
    for part in prime_partitions(G.primes) + [ONE]:
        expected = oracles.sigma_subnormal_set(whole, oracle_subgroups(name), _classes(part))
        got = {as_perms(G, L.masks[i]) for i in bits.iter_bits(sigma_subnormal_nodes(L, part))}
        assert got == expected, part.text


def test_every_witness_verifies(small):
    _, G, L = small
    for part in prime_partitions(G.primes):
        for i in range(len(L)):
            w = is_sigma_subnormal(G, L, part, L.nodes[i])
            if w is None:
                continue
            assert verify_subnormal_witness(G, part, L.nodes[i], w)
            assert w.chain[0] == L.nodes[i] and w.chain[-1] == G.whole()


def test_tampered_subnormal_witness_fails():
    G, L = group_and_lattice("S4")
    V = next(i for i in L.nodes_of_order(4) if L.normal_flags[i])
    H = next(i for i in L.nodes_of_order(2) if (L.down[V] >> i) & 1)
    w = is_sigma_subnormal(G, L, MINIMAL, L.nodes[H])
    assert verify_subnormal_witness(G, MINIMAL, L.nodes[H], w)
    assert set(w.step_kinds) == {NORMAL}
    # skip the middle step: H is not normal in S4
    short = SubnormalWitness((w.chain[0], w.chain[-1]), (NORMAL,))
    assert not verify_subnormal_witness(G, MINIMAL, L.nodes[H], short)
    wrong_kind = SubnormalWitness(w.chain, ("bogus",) * len(w.step_kinds))
    assert not verify_subnormal_witness(G, MINIMAL, L.nodes[H], wrong_kind)
    # any step has sigma-primary quotient when there is a single class
    one_step = SubnormalWitness((w.chain[0], w.chain[-1]), (SIGMA_PRIMARY,))
    assert verify_subnormal_witness(G, ONE, L.nodes[H], one_step)


def test_transposition_not_subnormal_in_s4():
    G, L = group_and_lattice("S4")
    t = G.index_of(parse_permutation("(1 2)", 4))
    H = L.nodes[L.index[1 | (1 << t)]]
    assert not is_subnormal(G, H)
    assert is_sigma_subnormal(G, L, MINIMAL, H) is None
    assert is_sigma_subnormal(G, L, ONE, H) is not None
    # it is 3-maximal
    assert (depth_set_bits(L, 3) >> L.node_of(H)) & 1


def test_m_sigma_values():
    G, L = group_and_lattice("S4")
    assert m_sigma(G, L, MINIMAL) == 4
    assert m_sigma(G, L, ONE) == 1
    assert m_sigma(G, L, parse_partition("2,3")) == 1
    C1, L1 = group_and_lattice("C1")
    assert m_sigma(C1, L1, MINIMAL) == 0
    C6, L6 = group_and_lattice("C6")
    assert m_sigma(C6, L6, MINIMAL) == 1


def test_m_sigma_matches_oracle(small):
    name, G, L = small
    if G.order == 1:
        return
    whole = as_perms(G, G.full_bits)
    subs = oracle_subgroups(name)
    for part in prime_partitions(G.primes):
        good = oracles.sigma_subnormal_set(whole, subs, _classes(part))
        n = 1
        while not oracles.n_maximal(whole, subs, n) <= good:
            n += 1
        assert m_sigma(G, L, part) == n


def test_irreducible_pair():
    G, L = group_and_lattice("S3")
    c3 = L.nodes[L.nodes_of_order(3)[0]]
    c2 = L.nodes[L.nodes_of_order(2)[0]]
    assert is_irreducible_pair(G, L, c2, c3)
    assert is_irreducible_pair(G, L, c3, c2)
    c2b = L.nodes[L.nodes_of_order(2)[1]]
    # two transpositions do not permute
    assert not is_irreducible_pair(G, L, c2, c2b)
    # permutable, but the trivial group is not maximal in C4
    C4, L4 = group_and_lattice("C4")
    assert not is_irreducible_pair(C4, L4, C4.trivial(), C4.whole())


def test_normal_chain_implies_sigma_chain(small):
    _, G, L = small
    for part in prime_partitions(G.primes):
        assert subnormal_nodes(L) & ~sigma_subnormal_nodes(L, part) == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ORACLE_GROUPS), st.data())
def test_closure_properties(name, data):
    G, L = group_and_lattice(name)
    part = data.draw(st.sampled_from(prime_partitions(G.primes)))
    S = sigma_subnormal_nodes(L, part)
    nodes = list(bits.iter_bits(S))
    a = data.draw(st.sampled_from(nodes))
    b = data.draw(st.sampled_from(nodes))
    k = data.draw(st.integers(0, len(L) - 1))
    # intersections and joins stay inside
    assert (S >> L.meet(a, b)) & 1 and (S >> L.join(a, b)) & 1
    # intersecting with any subgroup K gives something sigma-subnormal in K
    assert (sigma_subnormal_nodes(L, part, top=k) >> L.meet(a, k)) & 1
    # transitivity through a
    for c in bits.iter_bits(sigma_subnormal_nodes(L, part, top=a)):
        assert (S >> c) & 1


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "D4xS3", "C2xA4"])
def test_depth_hypothesis_propagates(name):
    G, L = group_and_lattice(name)
    for part in prime_partitions(G.primes):
        S = sigma_subnormal_nodes(L, part)
        for n in range(1, L.max_depth + 1):
            if depth_set_bits(L, n) & ~S == 0:
                assert depth_set_bits(L, n + 1) & ~S == 0
                for m in bits.iter_bits(depth_set_bits(L, n - 1)) if n > 1 else []:
                    from sigmagroups.sigma import is_sigma_nilpotent_node
                    assert is_sigma_nilpotent_node(L, part, m)
    assert is_sigma_nilpotent(G, L, ONE)
