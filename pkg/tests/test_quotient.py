import oracles
from tspaces.action import classify_action, validate_action
from tspaces.algebra import cyclic
from tspaces.corpus import actions, plane_analog, sign_instance, strict_groups, topologies_up_to_homeomorphism
from tspaces.quotient import build_quotient, orbit_partition, projection_profile, saturation_failures
from tspaces.tgg import validate_tgg
from tspaces.topology import discrete, is_continuous, map_predicates, members


def test_sign_partition():
    part = orbit_partition(sign_instance())
    assert [members(c) for c in part.classes] == [[0, 2], [1]]
    assert part.is_equivalence and not part.closure_taken


def test_sign_quotient_is_two_point_discrete():
    q = build_quotient(sign_instance())
    assert q.space.size == 2 and q.space.is_discrete


def test_transitive_action_has_single_class():
    for g in strict_groups(3):
        for a in actions(g, discrete(2)):
            if classify_action(a).transitive:
                assert orbit_partition(a).classes == (0b11,)


def test_trivial_action_quotient_is_a_copy():
    a = validate_action(validate_tgg(cyclic(2)), discrete(3), [[0, 1, 2], [0, 1, 2]])
    q = build_quotient(a)
    assert map_predicates(q.projection).homeomorphism
    p = projection_profile(q)
    assert p.open_map and p.closed_map and p.proper and p.quotient_hausdorff


def test_plane_analog_quotient_is_not_hausdorff():
    a = plane_analog()
    assert not a.strict and classify_action(a).perfect
    q = build_quotient(a)
    assert len(q.partition.classes) == 3
    z = q.projection(a.space.index("z"))
    assert q.space.nbhd[z] == q.space.full
    assert not projection_profile(q).quotient_hausdorff


def test_quotient_opens_match_oracle_for_every_small_action():
    for g in strict_groups(2):
        for n in (1, 2, 3):
            for X in topologies_up_to_homeomorphism(n):
                fam = frozenset(frozenset(members(u)) for u in X.opens())
                for a in actions(g, X):
                    q = build_quotient(a)
                    classes = [members(c) for c in q.partition.classes]
                    got = frozenset(frozenset(members(u)) for u in q.space.opens())
                    assert got == oracles.quotient_opens(n, fam, classes)
                    assert is_continuous(q.projection)
                    assert q.projection.image(a.space.full) == q.space.full


def test_orbit_relation_is_an_equivalence_on_every_corpus_action():
    for g in strict_groups(4):
        for n in (1, 2, 3):
            for a in actions(g, discrete(n)):
                part = orbit_partition(a)
                assert part.is_equivalence and not part.closure_taken


def test_saturation_identity_for_perfect_actions():
    for g in strict_groups(3):
        for n in (1, 2, 3):
            for X in topologies_up_to_homeomorphism(n):
                for a in actions(g, X):
                    if classify_action(a).perfect:
                        assert saturation_failures(a) == []


def test_strict_perfect_quotients_are_hausdorff():
    for g in strict_groups(3):
        for a in actions(g, discrete(3)):
            if classify_action(a).perfect:
                p = projection_profile(build_quotient(a))
                assert p.quotient_hausdorff and p.open_map
