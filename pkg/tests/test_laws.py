import pytest

from tspaces.corpus import plane_analog
from tspaces.dsl import parse_document, serialize_document
from tspaces.laws import (
    OUT_OF_SCOPE,
    REGISTRY,
    STATUSES,
    Bounds,
    Instance,
    check_l10,
    check_l11,
    check_l21,
    get_law,
    orbit_relation_audit,
    replay,
    run_all,
    run_law,
)

EXPECTED = {
    "L1": "Verified", "L2": "Verified", "L3": "Verified", "L4": "Verified",
    "L5": "DegenerateVerified", "L6": "Verified", "L7": "Verified",
    "L8": "DegenerateVerified", "L9": "DegenerateVerified", "L10": "DegenerateVerified",
    "L11": "DegenerateVerified", "L12": "DegenerateVerified", "L13": "DegenerateVerified",
    "L14": "DegenerateVerified", "L15": "DegenerateVerified", "L16": "Verified",
    "L17": "Verified", "L18": "Verified", "L19": "Verified", "L20": "Verified",
    "L21": "Verified", "L22": "Refuted",
}


@pytest.fixture(scope="module")
def default_run():
    return run_all(Bounds())


@pytest.fixture(scope="module")
def relaxed_reports():
    b = Bounds(max_group_order=3, max_space_size=3, relaxed=True)
    return {law.id: run_law(law.id, b) for law in REGISTRY if law.id != "L20"}


def test_registry_has_twenty_two_laws_in_order(default_run):
    reports, _ = default_run
    assert [r.id for r in reports] == [f"L{k}" for k in range(1, 23)]


def test_default_statuses(default_run):
    reports, summary = default_run
    assert {r.id: r.status for r in reports} == EXPECTED
    assert summary["Refuted"] == 1 and summary["Verified"] == 12
    assert summary["DegenerateVerified"] == 9


def test_no_verified_report_without_instances(default_run):
    for r in default_run[0]:
        if r.status in ("Verified", "DegenerateVerified"):
            assert r.instances_checked > 0


def test_refuted_witness_replays_bit_for_bit(default_run):
    for r in default_run[0]:
        if r.status == "Refuted":
            out = replay(r.id, r.witness)
            assert out.hypotheses and not out.conclusion
            again = Instance.from_document(parse_document(r.witness)).to_document()
            assert serialize_document(again) == r.witness


def test_theta_report_names_the_witness_triple(default_run):
    l22 = default_run[0][21]
    assert "s=+1, t=-1, x=-1" in l22.note
    assert "axiom (i)" in l22.note


def test_out_of_scope_entries(default_run):
    _, summary = default_run
    ids = [r["id"] for r in summary["out_of_scope"]]
    assert ids == ["L18-forward", "L-constant-rank"]
    assert all(r["status"] == "OutOfScope" for r in summary["out_of_scope"])
    assert run_law("L-constant-rank").status == "OutOfScope"


def test_unknown_law_id():
    with pytest.raises(KeyError):
        get_law("L99")
    with pytest.raises(KeyError):
        run_law("L0")


def test_statuses_are_known(default_run):
    assert all(r.status in STATUSES for r in default_run[0])


def test_degenerate_laws_are_marked(default_run):
    for r in default_run[0]:
        if r.status == "DegenerateVerified":
            assert "degenerate" in r.note
            assert r.counts["non_degenerate"] == 0


def test_relaxed_failures_are_informative_not_refuted(relaxed_reports):
    for law_id, r in relaxed_reports.items():
        if law_id == "L22":
            continue
        assert r.status != "Refuted", law_id
        if r.status == "Informative" and r.witness is not None:
            out = replay(law_id, r.witness)
            assert not out.hypotheses and not out.conclusion


def test_relaxed_mode_finds_hypothesis_necessity_evidence(relaxed_reports):
    informative = {k for k, r in relaxed_reports.items() if r.status == "Informative"}
    assert {"L7", "L11", "L15", "L17", "L19"} <= informative


def test_plane_analog_is_informative_for_quotient_laws():
    inst = Instance(action=plane_analog())
    out = check_l11(inst)
    assert not out.hypotheses and not out.conclusion
    assert not check_l10(inst).hypotheses


def test_small_bounds_never_refute_what_large_bounds_verify(default_run):
    small = {law.id: run_law(law.id, Bounds(2, 2)) for law in REGISTRY}
    large = {r.id: r for r in default_run[0]}
    for law_id, r in small.items():
        if r.status == "Refuted":
            assert large[law_id].status == "Refuted"
        assert r.instances_checked <= large[law_id].instances_checked


def test_orbit_relation_audit_has_no_false_positives():
    rows = orbit_relation_audit(Bounds())
    assert len(rows) == run_law("L21").instances_checked
    for row in rows:
        equivalence = row["reflexive"] and row["symmetric"] and row["transitive"]
        assert row["closure_taken"] == (not equivalence)
        assert row["symmetric"]


def test_l21_check_on_relaxed_instance():
    out = check_l21(Instance(action=plane_analog()))
    assert out.conclusion and not out.hypotheses


def test_out_of_scope_laws_have_no_check():
    assert all(law.check is None for law in OUT_OF_SCOPE)
    with pytest.raises(ValueError):
        replay("L18-forward", "")
