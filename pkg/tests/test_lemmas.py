import numpy as np
import pytest

from conftest import group_and_lattice
from sigmagroups import bits
from sigmagroups.groups import classify_p_group
from sigmagroups.harness import analyze_case
from sigmagroups.lattice import enumerate_subgroups, frattini_subgroup
from sigmagroups.lemmas import (
    Tally,
    check_group_lemmas,
    check_sigma_core_lemmas,
    check_sigma_subnormal_lemmas,
    quotients_for,
    subgroup_group,
    sylow_nodes,
)
from sigmagroups.sigma import MINIMAL, is_sigma_dispersive
from sigmagroups.subnormal import sigma_subnormal_nodes


def test_tally_records_violations():
    t = Tally()
    t.check("x", True)
    t.check("x", False, group="G")
    assert t.instances == {"x": 2}
    assert t.violations == [{"lemma": "x", "group": "G"}]


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "D4xS3", "C2xA4", "M(2,4)", "A5", "C3xQ8"])
def test_lemma_checks_hold(name):
    G, L = group_and_lattice(name)
    t = Tally()
    case = analyze_case(G, L, MINIMAL)
    check_sigma_subnormal_lemmas(L, MINIMAL, t, quotients_for(L))
    check_sigma_core_lemmas(L, MINIMAL, case, t)
    check_group_lemmas(L, t)
    assert t.violations == []
    assert sum(t.instances.values()) > 0


def test_quotients_are_homomorphic_images():
    G, L = group_and_lattice("S4")
    qs = quotients_for(L)
    assert sorted(Q.order for _, Q, _, _ in qs) == [2, 6]
    for n, Q, LQ, proj in qs:
        assert len(LQ) == len(enumerate_subgroups(Q))
        a, b = np.meshgrid(np.arange(G.order), np.arange(G.order))
        assert (proj[G.table[a, b]] == Q.table[proj[a], proj[b]]).all()


def test_quotient_preserves_sigma_subnormality():
    G, L = group_and_lattice("S4")
    S = sigma_subnormal_nodes(L, MINIMAL)
    for n, Q, LQ, proj in quotients_for(L):
        SQ = sigma_subnormal_nodes(LQ, MINIMAL)
        for a in bits.iter_bits(S):
            image = np.zeros(Q.order, dtype=bool)
            image[proj[bits.to_indices(L.masks[a], G.order)]] = True
            assert (SQ >> LQ.index[bits.from_bool(image)]) & 1


def test_sylow_types():
    G, L = group_and_lattice("SL(2,3)")
    (s2,) = sylow_nodes(L, 2)
    assert L.normal_flags[s2]
    assert classify_p_group(subgroup_group(L, s2)) == "quaternion"
    G, L = group_and_lattice("S4")
    tags = {classify_p_group(subgroup_group(L, s)) for s in sylow_nodes(L, 2)}
    assert tags == {"modular"}
    assert len(sylow_nodes(L, 3)) == 4


def test_frattini_quotient_tower():
    # C8 / Phi = C2 and both have Sylow towers; SL(2,3) / Phi = A4
    for name, q in [("C8", 2), ("SL(2,3)", 12), ("M(2,4)", 4)]:
        G, L = group_and_lattice(name)
        phi = frattini_subgroup(G, L)
        assert G.order // len(phi) == q
        assert is_sigma_dispersive(G, L, MINIMAL) is not None
