import json

import pytest

from tspaces.cli import main
from tspaces.corpus import negation_map, plane_analog, sign_instance
from tspaces.dsl import Document, action_decl, group_decl, map_decl, parse_document, serialize_document, space_decl

MISSING_PAIR = ("group G { elements: t0 ; table: t0 ; }\n"
                "space X { points: x0 x1 ; discrete }\n"
                "action A : G on X { t0 x0 -> x1 }\n")


@pytest.fixture
def sign_file(tmp_path):
    a = sign_instance()
    doc = Document((group_decl("T", a.group), space_decl("X", a.space),
                    action_decl("A", "T", "X", a.table),
                    map_decl("neg", "X", "X", negation_map()),
                    map_decl("id", "X", "X", (0, 1, 2)),
                    map_decl("zero", "X", "X", (1, 1, 1))))
    p = tmp_path / "sign.tsp"
    p.write_text(serialize_document(doc))
    return str(p)


@pytest.fixture
def plane_file(tmp_path):
    a = plane_analog()
    doc = Document((group_decl("T", a.group), space_decl("X", a.space), action_decl("A", "T", "X", a.table)))
    p = tmp_path / "plane.tsp"
    p.write_text(serialize_document(doc))
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(sign_file, capsys):
    code, out, _ = run(["validate", sign_file], capsys)
    assert code == 0 and out.strip().endswith("ok")


def test_validate_missing_pair_exits_two(tmp_path, capsys):
    p = tmp_path / "bad.tsp"
    p.write_text(MISSING_PAIR)
    code, _, err = run(["validate", str(p)], capsys)
    assert code == 2 and "MissingPair" in err and "3:" in err


def test_validate_not_a_topology_exits_two(tmp_path, capsys):
    p = tmp_path / "bad.tsp"
    p.write_text("space X { points: a b ; opens: {a} {b} }")
    code, _, err = run(["validate", str(p)], capsys)
    assert code == 2 and "NotATopology" in err


def test_validate_axiom_failure_exits_one(tmp_path, capsys):
    text = serialize_document(parse_document(
        "group T { elements: p m ; table: p p m m ; }\n"
        "space X { points: n z o ; discrete }\n"
        "action A : T on X { p n -> n p z -> z p o -> o m n -> o m z -> z m o -> n }\n"))
    p = tmp_path / "theta.tsp"
    p.write_text(text)
    code, out, _ = run(["validate", str(p)], capsys)
    assert code == 1 and "s(tx) != (st)x" in out


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(["validate", "/nonexistent/file.tsp"], capsys)
    assert code == 2 and "cannot read" in err


def test_bad_arguments_are_usage_errors(sign_file, capsys):
    assert run(["classify", sign_file], capsys)[0] == 2
    assert run(["classify", sign_file, "--action", "Nope"], capsys)[0] == 2
    assert run(["nosuchcommand"], capsys)[0] == 2


def test_classify(sign_file, capsys):
    code, out, _ = run(["classify", sign_file, "--action", "A"], capsys)
    assert code == 0
    assert "transitive: no" in out and "perfect: no" in out and "singular set: {0}" in out


def test_orbits(sign_file, capsys):
    code, out, _ = run(["orbits", sign_file, "--action", "A"], capsys)
    assert code == 0 and "classes: {-1 1} {0}" in out


def test_quotient_emit_round_trips(plane_file, tmp_path, capsys):
    out_path = tmp_path / "q.tsp"
    code, out, _ = run(["quotient", plane_file, "--action", "A", "--emit", str(out_path)], capsys)
    assert code == 0 and "quotient hausdorff: no" in out
    doc = parse_document(out_path.read_text())
    assert doc.space("Q").size == 3
    assert run(["validate", str(out_path)], capsys)[0] == 0


def test_dynamics_checks(sign_file, capsys):
    assert run(["dynamics", sign_file, "--action", "A", "--map", "id", "--check", "transitive"], capsys)[0] == 1
    assert run(["dynamics", sign_file, "--action", "A", "--map", "zero", "--check", "dense-orbit"], capsys)[0] == 1
    code, out, _ = run(["dynamics", sign_file, "--action", "A", "--map", "id", "--check", "t-transitive"], capsys)
    assert code == 1 and "U=" in out


def test_equivariance(sign_file, capsys):
    code, out, _ = run(["equivariance", sign_file, "--from", "A", "--to", "A", "--map", "neg"], capsys)
    assert code == 1 and "pseudoequivariant: yes" in out and "equivariant: no" in out
    assert run(["equivariance", sign_file, "--from", "A", "--to", "A", "--map", "id"], capsys)[0] == 0


def test_conjugacy(sign_file, capsys):
    argv = ["conjugacy", sign_file, "--f", "zero", "--g", "zero", "--h", "neg", "--from", "A", "--to", "A"]
    code, out, _ = run(argv, capsys)
    assert code == 0 and "T-conjugate: yes" in out
    argv = ["conjugacy", sign_file, "--f", "id", "--g", "id", "--h", "zero", "--from", "A", "--to", "A"]
    assert run(argv, capsys)[0] == 1


def test_laws_single(capsys):
    code, out, _ = run(["laws", "--law", "L3", "--max-group-order", "3"], capsys)
    assert code == 0 and "L3" in out and "Verified" in out


def test_laws_unknown_id(capsys):
    assert run(["laws", "--law", "L99"], capsys)[0] == 2


def test_laws_json_schema(tmp_path, capsys):
    out_path = tmp_path / "r.json"
    code, _, _ = run(["laws", "--law", "L22", "--json", str(out_path)], capsys)
    assert code == 1
    payload = json.loads(out_path.read_text())
    assert payload["schema_version"] == 1
    (report,) = payload["reports"]
    assert set(report) <= {"id", "status", "instances_checked", "witness", "note"}
    assert report["status"] == "Refuted"
    parse_document(report["witness"])


def test_search_prints_parseable_witness(capsys):
    code, out, _ = run(["search", "--goal", "t-transitive-not-transitive"], capsys)
    assert code == 0
    doc = parse_document(out)
    assert doc.names("map") == ["f"] and doc.action("A").space.size == 2


def test_search_without_witness_exits_one(capsys):
    code, out, _ = run(["search", "--goal", "orbit-relation-not-symmetric"], capsys)
    assert code == 1 and "no witness" in out


def test_search_bounds_beyond_capability(capsys):
    assert run(["search", "--goal", "pseudo-not-equivariant", "--max-group-order", "6"], capsys)[0] == 2


def test_fmt_is_idempotent(sign_file, capsys):
    code, first, _ = run(["fmt", sign_file], capsys)
    assert code == 0
    with open(sign_file) as fh:
        assert fh.read() == first
