import pytest

from tspaces.corpus import negation_map, plane_analog, sign_instance
from tspaces.dsl import (
    Document,
    DSLError,
    action_decl,
    group_decl,
    map_decl,
    parse_document,
    serialize_document,
    space_decl,
)
from tspaces.tgg import canonical_instances


def codes(text):
    with pytest.raises(DSLError) as info:
        parse_document(text)
    return [(d.code, d.line, d.col) for d in info.value.diagnostics]


def sign_document() -> Document:
    a = sign_instance()
    return Document((group_decl("T", a.group), space_decl("X", a.space),
                     action_decl("A", "T", "X", a.table), map_decl("neg", "X", "X", negation_map())))


SIGN_TEXT = """
# the sign instance
group T {
  elements: +1 -1 ;
  table:
    +1 +1
    -1 -1 ;
}
space X { points: -1 0 1 ; discrete }
action A : T on X {
  +1 -1 -> 1   +1 0 -> 0   +1 1 -> 1
  -1 -1 -> -1  -1 0 -> 0   -1 1 -> -1
}
map neg : X -> X { -1 -> 1 0 -> 0 1 -> -1 }
"""


def test_hand_written_sign_document_parses_to_valid_bundle():
    doc = parse_document(SIGN_TEXT)
    a = doc.action("A")
    assert a.table == sign_instance().table
    assert doc.map("neg").table == (2, 1, 0)
    assert doc == sign_document()


def test_round_trip_sign_document():
    doc = sign_document()
    text = serialize_document(doc)
    assert parse_document(text) == doc
    assert serialize_document(parse_document(text)) == text


def test_round_trip_canonical_instances():
    for name, g in canonical_instances().items():
        doc = Document((group_decl("G", g),))
        text = serialize_document(doc)
        back = parse_document(text)
        assert back == doc, name
        assert back.group("G").algebra.table == g.algebra.table
        assert serialize_document(back) == text


def test_round_trip_relaxed_space():
    a = plane_analog()
    doc = Document((group_decl("T", a.group), space_decl("X", a.space),
                    action_decl("A", "T", "X", a.table)))
    back = parse_document(serialize_document(doc))
    assert back.action("A").space.nbhd == a.space.nbhd


def test_empty_document():
    assert serialize_document(Document(())) == ""
    assert parse_document("") == Document(())
    assert parse_document("  # only a comment\n") == Document(())


def test_declarations_are_sorted():
    text = "space B { points: p ; discrete }\nspace A { points: q ; discrete }\n"
    assert [d.name for d in parse_document(text).items] == ["A", "B"]


def test_group_with_explicit_topology():
    doc = parse_document("group G { elements: e a ; table: e a a e ; opens: {} {e} {e a} }")
    g = doc.group("G")
    assert not g.space.is_discrete and not g.well_formed


def test_subbasis_space():
    doc = parse_document("space S { points: a b ; subbasis: {a} }")
    assert set(doc.space("S").opens()) == {0, 1, 3}


# ---------------------------------------------------------------- diagnostics

def test_missing_pair():
    text = ("group G { elements: t0 ; table: t0 ; }\n"
            "space X { points: x0 x1 ; discrete }\n"
            "action A : G on X { t0 x0 -> x1 }\n")
    assert [c[0] for c in codes(text)] == ["MissingPair"]


def test_not_a_topology():
    text = "space X { points: a b ; opens: {a} {b} }"
    assert [c[0] for c in codes(text)] == ["NotATopology"]


def test_broken_space_does_not_cascade():
    text = ("group G { elements: t ; table: t ; }\n"
            "space X { points: a b ; opens: {a} {b} }\n"
            "action A : G on X { t a -> a t b -> b }\n")
    assert [c[0] for c in codes(text)] == ["NotATopology"]


def test_unknown_name():
    text = "space X { points: a ; discrete }\nmap f : X -> Y { a -> a }"
    assert [c[0] for c in codes(text)] == ["UnknownName"]


def test_duplicate_pair():
    text = ("group G { elements: t ; table: t ; }\n"
            "space X { points: a ; discrete }\n"
            "action A : G on X { t a -> a t a -> a }\n")
    assert "DuplicatePair" in [c[0] for c in codes(text)]


def test_duplicate_declaration():
    text = "space X { points: a ; discrete }\nspace X { points: b ; discrete }"
    assert [c[0] for c in codes(text)] == ["DuplicateDeclaration"]


def test_table_size():
    assert [c[0] for c in codes("group G { elements: a b ; table: a b a ; }")] == ["TableSize"]


def test_syntax_error_reports_position_and_recovers():
    text = "space X { points a ; discrete }\nspace Y { points: b ; discrete }\nmap f : Y -> Q { b -> b }"
    got = codes(text)
    assert got[0][:2] == ("SyntaxError", 1)
    assert ("UnknownName", 3) in [c[:2] for c in got]


def test_diagnostics_carry_hint_and_token():
    with pytest.raises(DSLError) as info:
        parse_document("space X { points: a b ; opens: {a} {b} }")
    d = info.value.diagnostics[0]
    assert d.hint and d.token and d.line == 1 and d.col > 0
    assert str(d).startswith("1:")


def test_diagnostics_are_deterministic():
    text = ("space X { points: a a ; discrete }\n"
            "group G { elements: e ; table: e e ; }\n"
            "map f : Z -> Z { }\n")
    assert codes(text) == codes(text)
    assert len(codes(text)) >= 3
