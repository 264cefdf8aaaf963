import pytest

from sepdepth.errors import CapExceeded, ElementNotInGroup, NotASubgroup
from sepdepth.permgroup import (FiniteGroup, Permutation, all_subgroups,
                                alternating_group, center, centralizer,
                                conjugacy_classes, cyclic_group,
                                cyclic_subgroups, depth1_group,
                                derived_subgroup, dihedral_group,
                                direct_product, enumerate_closure,
                                extraspecial_27, h_orbits, hz_condition,
                                is_normal, lemma_S_via_centralizers,
                                property_S, quaternion_group,
                                right_transversal, symmetric_group)


class TestPermutation:
    def test_composition_applies_right_factor_first(self):
        p = Permutation((1, 0, 2))
        q = Permutation((0, 2, 1))
        # (p*q)(x) = p(q(x))
        assert (p * q).images == (1, 2, 0)
        assert (q * p).images == (2, 0, 1)

    def test_inverse_and_order(self):
        c = Permutation.from_cycles(4, [[0, 1, 2, 3]])
        assert c.order() == 4
        assert (c * c.inverse()).is_identity()

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))


def test_enumerate_closure_cap():
    gens = symmetric_group(4).generators
    with pytest.raises(CapExceeded):
        enumerate_closure(gens, cap=10)


def test_standard_group_orders():
    assert symmetric_group(4).order == 24
    assert alternating_group(5).order == 60
    assert dihedral_group(7).order == 14
    assert quaternion_group(4).order == 8
    assert quaternion_group(8).order == 16
    assert cyclic_group(12).order == 12
    assert extraspecial_27().order == 27
    assert direct_product(symmetric_group(3), cyclic_group(2)).order == 12


def test_exponents():
    assert symmetric_group(5).exponent() == 60
    assert extraspecial_27().exponent() == 3
    assert quaternion_group(4).exponent() == 4


def test_conjugacy_class_sizes():
    sizes = [len(c) for c in conjugacy_classes(symmetric_group(3))]
    assert sizes == [1, 2, 3]
    sizes4 = [len(c) for c in conjugacy_classes(symmetric_group(4))]
    assert sizes4 == [1, 3, 6, 6, 8]
    assert len(conjugacy_classes(quaternion_group())) == 5
    assert len(conjugacy_classes(alternating_group(5))) == 5
    assert len(conjugacy_classes(extraspecial_27())) == 11


def test_classes_partition_group():
    G = dihedral_group(6)
    classes = conjugacy_classes(G)
    assert sum(len(c) for c in classes) == G.order
    assert len({g for c in classes for g in c}) == G.order


def test_center_and_centralizer():
    Q = quaternion_group()
    assert center(Q).order == 2
    a = next(p for p in Q.elements if p.order() == 4)
    assert centralizer(Q, a).order == 4
    with pytest.raises(ElementNotInGroup):
        centralizer(Q, Permutation.identity(Q.degree + 1))


def test_subgroup_validation():
    G = symmetric_group(3)
    with pytest.raises(NotASubgroup):
        G.subgroup([Permutation.identity(5)])


def test_right_transversal():
    G = symmetric_group(4)
    H = G.subgroup([Permutation.from_cycles(4, [[0, 1, 2]])])
    reps = right_transversal(G, H)
    assert len(reps) == H.index == 8
    assert reps[0].is_identity()
    cosets = {frozenset(h * r for h in H.elements) for r in reps}
    assert len(cosets) == 8


def test_h_orbits_refine_classes():
    G = quaternion_group()
    H = G.subgroup([next(p for p in G.elements if p.order() == 4)])
    orbits = h_orbits(G, H)
    classes = conjugacy_classes(G)
    assert len(orbits) == 6 > len(classes) == 5
    for orb in orbits:
        assert any(set(orb) <= set(c) for c in classes)


def test_property_s_examples():
    G = quaternion_group()
    H = G.subgroup([next(p for p in G.elements if p.order() == 4)])
    assert not property_S(G, H)
    assert property_S(G, G.full_subgroup())
    GX = direct_product(symmetric_group(3), cyclic_group(2))
    HX = GX.subgroup(list(GX.generators[:2]))
    assert property_S(GX, HX)


def test_property_s_matches_centralizer_criterion():
    for G in (symmetric_group(3), symmetric_group(4), quaternion_group(),
              dihedral_group(4), alternating_group(4)):
        for H in all_subgroups(G):
            assert property_S(G, H) == lemma_S_via_centralizers(G, H)


def test_depth1_and_hz():
    Q = quaternion_group()
    Hz = Q.subgroup(list(center(Q).elements))
    assert depth1_group(Q, Hz)             # central subgroup
    assert depth1_group(Q, Q.trivial_subgroup())
    Hi = Q.subgroup([next(p for p in Q.elements if p.order() == 4)])
    assert not depth1_group(Q, Hi)
    GX = direct_product(symmetric_group(3), cyclic_group(2))
    HX = GX.subgroup(list(GX.generators[:2]))
    assert hz_condition(GX, HX)
    assert depth1_group(GX, HX)
    assert not hz_condition(Q, Q.trivial_subgroup())


def test_hz_implies_property_s():
    for G in (symmetric_group(4), quaternion_group(), dihedral_group(6)):
        for H in all_subgroups(G):
            if hz_condition(G, H):
                assert property_S(G, H)
                assert depth1_group(G, H)


def test_normality():
    G = symmetric_group(3)
    A3 = G.subgroup([Permutation((1, 2, 0))])
    S2 = G.subgroup([Permutation((1, 0, 2))])
    assert is_normal(G, A3)
    assert not is_normal(G, S2)


def test_derived_subgroups():
    assert derived_subgroup(symmetric_group(4)).order == 12
    assert derived_subgroup(alternating_group(4)).order == 4
    assert derived_subgroup(symmetric_group(3)).order == 3
    assert derived_subgroup(cyclic_group(6)).order == 1


def test_subgroup_harvests():
    assert len(all_subgroups(symmetric_group(3))) == 4
    assert len(all_subgroups(quaternion_group())) == 6
    assert len(all_subgroups(dihedral_group(4))) == 8
    assert len(all_subgroups(alternating_group(4))) == 5
    # abelian group: conjugation dedup keeps all three C2s
    assert len(all_subgroups(direct_product(cyclic_group(2),
                                            cyclic_group(2)))) == 5
    assert len(cyclic_subgroups(symmetric_group(4))) == 5
