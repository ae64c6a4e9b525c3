import pytest

from tspaces.algebra import cyclic, left_zero, right_zero_product
from tspaces.corpus import all_topologies, strict_groups
from tspaces.tgg import (
    canonical_instances,
    identity_map_e,
    inversion_map,
    multiplication_map,
    rees_eq1_violation,
    validate_tgg,
)
from tspaces.topology import FiniteSpace, discrete, is_continuous


def all_flags(g):
    r = g.report
    return (r.hausdorff, r.m1_continuous, r.m2_continuous, r.e_continuous, r.eq1_holds, r.eq2_holds)


def test_right_zero_product_discrete_is_well_formed():
    g = validate_tgg(right_zero_product(cyclic(2), 2))
    assert all(all_flags(g)) and g.well_formed


def test_left_zero_two_discrete_is_well_formed():
    g = validate_tgg(left_zero(2))
    assert all(all_flags(g))


def test_rees_sandwich_violation_is_kept_as_relaxed():
    g = rees_eq1_violation()
    assert g is not None
    assert not g.report.eq1_holds and not g.well_formed
    assert g.report.hausdorff and g.report.m1_continuous and g.report.m2_continuous


def test_carrier_mismatch_rejected():
    with pytest.raises(ValueError):
        validate_tgg(cyclic(2), discrete(3))


def test_default_topology_is_discrete():
    assert validate_tgg(cyclic(3)).space.is_discrete


def test_canonical_corpus_contents():
    corpus = canonical_instances()
    assert {"C1", "C2", "C3", "C4", "V4", "LZ1", "LZ2", "LZ3", "RZ1", "RZ2", "RZ3",
            "RZP(C2,2)", "LZP(C2,2)", "RZP(C3,2)", "LZP(C3,2)"} <= set(corpus)
    rzp = corpus["RZP(C2,2)"].algebra
    assert sorted(rzp.names[e] for e in rzp.identity_set) == ["(0,a)", "(0,b)"]
    assert corpus["C3"].algebra.identity_set == frozenset({0})
    assert all(g.well_formed for g in corpus.values())


def test_eq1_implies_eq2_on_every_enumerated_group():
    for g in strict_groups(4):
        assert g.report.eq1_holds and g.report.eq2_holds


def test_structure_maps_continuity_on_non_discrete_topology():
    # C2 on the Sierpinski space: inversion is the identity, so continuous
    X = FiniteSpace((0b01, 0b11))
    g = validate_tgg(cyclic(2), X)
    assert is_continuous(inversion_map(g.algebra, X))
    assert is_continuous(identity_map_e(g.algebra, X))
    assert not g.report.hausdorff and not g.well_formed
    assert multiplication_map(g.algebra, X).dom.size == 4


def test_relaxed_topologies_keep_flags_consistent():
    for X in all_topologies(2):
        for alg in (cyclic(2), left_zero(2)):
            g = validate_tgg(alg, X)
            assert g.well_formed == (g.report.hausdorff and g.report.m1_continuous
                                     and g.report.m2_continuous and g.report.eq1_holds)
