"""Text format for groups, spaces, actions and maps.

::

    group G { elements: a b ; table: a a b b ; discrete }
    space X { points: p q ; subbasis: {p} }
    action A : G on X { a p -> p  a q -> p  b p -> q  b q -> q }
    map f : X -> X { p -> q  q -> q }

Tables are given by element name, row by row.  ``#`` starts a comment.
Parsing checks names, pair coverage and topologies; the algebraic axioms are
checked when a declaration is built into an object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .action import GenAction, validate_action
from .algebra import CayleyTable, validate_generalized_group
from .tgg import TopGenGroup, validate_tgg
from .topology import (
    FiniteSpace,
    NotATopology,
    SpaceMap,
    discrete,
    from_opens,
    from_subbasis,
    indiscrete,
    mask_of,
    members,
)

_TOKEN = re.compile(r"#[^\n]*|\s+|[{};:]|[^\s{};:#]+")
KEYWORDS = {"group", "space", "action", "map", "on", "elements", "table", "points",
            "opens", "subbasis", "discrete", "indiscrete", "->"}


@dataclass(frozen=True)
class Diagnostic:
    code: str
    line: int
    col: int
    token: str
    message: str
    hint: str

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.code}: {self.message} (at {self.token!r}); {self.hint}"


class DSLError(ValueError):
    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        s = m.group()
        if not s.startswith("#") and not s.isspace():
            out.append(Token(s, line, m.start() - line_start + 1))
        nl = s.count("\n")
        if nl:
            line += nl
            line_start = m.start() + s.rindex("\n") + 1
    return out


# ---------------------------------------------------------------- declarations

@dataclass(frozen=True)
class GroupDecl:
    name: str
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    space: FiniteSpace

    kind = "group"


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    space: FiniteSpace

    kind = "space"


@dataclass(frozen=True)
class ActionDecl:
    name: str
    group: str
    space: str
    table: tuple[tuple[int, ...], ...]

    kind = "action"


@dataclass(frozen=True)
class MapDecl:
    name: str
    dom: str
    cod: str
    table: tuple[int, ...]

    kind = "map"


Decl = Union[GroupDecl, SpaceDecl, ActionDecl, MapDecl]
_RANK = {"group": 0, "space": 1, "action": 2, "map": 3}


@dataclass(frozen=True)
class Document:
    items: tuple[Decl, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items",
                           tuple(sorted(self.items, key=lambda d: (_RANK[d.kind], d.name))))

    def _get(self, kind: str, name: str):
        for d in self.items:
            if d.kind == kind and d.name == name:
                return d
        raise KeyError(f"no {kind} named {name!r}")

    def names(self, kind: str) -> list[str]:
        return [d.name for d in self.items if d.kind == kind]

    def carrier(self, name: str) -> FiniteSpace:
        """Space declared as ``name``, or the carrier of the group ``name``."""
        if name in self.names("space"):
            return self._get("space", name).space
        return self._get("group", name).space

    def group(self, name: str) -> TopGenGroup:
        d = self._get("group", name)
        algebra = validate_generalized_group(CayleyTable(d.table, d.elements))
        return validate_tgg(algebra, d.space, name)

    def space(self, name: str) -> FiniteSpace:
        return self.carrier(name)

    def action(self, name: str) -> GenAction:
        d = self._get("action", name)
        return validate_action(self.group(d.group), self.carrier(d.space), d.table, name)

    def action_decl(self, name: str) -> ActionDecl:
        return self._get("action", name)

    def map(self, name: str) -> SpaceMap:
        d = self._get("map", name)
        return SpaceMap(self.carrier(d.dom), self.carrier(d.cod), d.table)


# ---------------------------------------------------------------- building documents

def group_decl(name: str, g: TopGenGroup) -> GroupDecl:
    return GroupDecl(name, g.names, g.algebra.table, g.space.renamed(g.names))


def space_decl(name: str, X: FiniteSpace) -> SpaceDecl:
    return SpaceDecl(name, X)


def action_decl(name: str, group: str, space: str, table) -> ActionDecl:
    return ActionDecl(name, group, space, tuple(tuple(r) for r in table))


def map_decl(name: str, dom: str, cod: str, f: SpaceMap | Sequence[int]) -> MapDecl:
    table = f.table if isinstance(f, SpaceMap) else tuple(f)
    return MapDecl(name, dom, cod, tuple(table))


# ---------------------------------------------------------------- parser

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.diags: list[Diagnostic] = []
        self.raw: list[dict] = []

    # token helpers
    def peek(self) -> Token | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise _Abort(self._eof("unexpected end of input", "close every block with '}'"))
        self.i += 1
        return tok

    def _eof(self, msg: str, hint: str) -> Diagnostic:
        last = self.toks[-1] if self.toks else Token("", 1, 1)
        return Diagnostic("SyntaxError", last.line, last.col + len(last.text), "<eof>", msg, hint)

    def expect(self, text: str, hint: str = "") -> Token:
        tok = self.next()
        if tok.text != text:
            raise _Abort(Diagnostic("SyntaxError", tok.line, tok.col, tok.text,
                                    f"expected {text!r}", hint or f"insert {text!r}"))
        return tok

    def name(self, what: str) -> Token:
        tok = self.next()
        if tok.text in ("{", "}", ";", ":") or tok.text in KEYWORDS:
            raise _Abort(Diagnostic("SyntaxError", tok.line, tok.col, tok.text,
                                    f"expected {what}", f"give a {what} before this token"))
        return tok

    def names_until(self, stop: str) -> list[Token]:
        out = []
        while True:
            tok = self.peek()
            if tok is None:
                raise _Abort(self._eof(f"missing {stop!r}", f"terminate the list with {stop!r}"))
            if tok.text == stop:
                self.i += 1
                return out
            out.append(self.name("name"))

    def sets(self) -> list[list[Token]]:
        out = []
        while self.peek() is not None and self.peek().text == "{":
            self.i += 1
            out.append(self.names_until("}"))
        return out

    # grammar
    def document(self) -> None:
        while self.peek() is not None:
            tok = self.peek()
            start = self.i
            try:
                if tok.text == "group":
                    self.group()
                elif tok.text == "space":
                    self.space()
                elif tok.text == "action":
                    self.action()
                elif tok.text == "map":
                    self.map()
                else:
                    self.i += 1
                    raise _Abort(Diagnostic("SyntaxError", tok.line, tok.col, tok.text,
                                            "expected a declaration",
                                            "start with group, space, action or map"))
            except _Abort as exc:
                self.diags.append(exc.diag)
                self.i = max(self.i, start + 1)
                # resume after the block that failed
                while self.peek() is not None and self.peek().text not in ("group", "space", "action", "map"):
                    self.i += 1

    def topology_clause(self, allow_indiscrete: bool):
        tok = self.peek()
        if tok is None or tok.text == "}":
            return ("discrete", [], tok)
        kw = self.next()
        if kw.text in ("discrete", "indiscrete"):
            if kw.text == "indiscrete" and not allow_indiscrete:
                raise _Abort(Diagnostic("SyntaxError", kw.line, kw.col, kw.text,
                                        "groups take opens, subbasis or discrete",
                                        "write the topology as opens: or subbasis:"))
            self._optional(";")
            return (kw.text, [], kw)
        if kw.text in ("opens", "subbasis"):
            self.expect(":")
            sets = self.sets()
            if not sets:
                raise _Abort(Diagnostic("SyntaxError", kw.line, kw.col, kw.text,
                                        f"{kw.text} needs at least one set", "list sets as {a b}"))
            self._optional(";")
            return (kw.text, sets, kw)
        raise _Abort(Diagnostic("SyntaxError", kw.line, kw.col, kw.text,
                                "expected a topology", "use opens:, subbasis:, discrete or indiscrete"))

    def _optional(self, text: str) -> None:
        if self.peek() is not None and self.peek().text == text:
            self.i += 1

    def group(self):
        kw = self.next()
        name = self.name("group name")
        self.expect("{")
        self.expect("elements")
        self.expect(":")
        elems = self.names_until(";")
        self.expect("table", "give the table after the element list")
        self.expect(":")
        entries = self.names_until(";")
        topo = self.topology_clause(allow_indiscrete=False)
        self.expect("}")
        self.raw.append(dict(kind="group", tok=name, at=kw, elements=elems, entries=entries, topo=topo))

    def space(self):
        kw = self.next()
        name = self.name("space name")
        self.expect("{")
        self.expect("points")
        self.expect(":")
        points = self.names_until(";")
        topo = self.topology_clause(allow_indiscrete=True)
        self.expect("}")
        self.raw.append(dict(kind="space", tok=name, at=kw, points=points, topo=topo))

    def action(self):
        kw = self.next()
        name = self.name("action name")
        self.expect(":")
        g = self.name("group name")
        self.expect("on")
        x = self.name("space name")
        self.expect("{")
        triples = []
        while self.peek() is not None and self.peek().text != "}":
            t = self.name("group element")
            p = self.name("point")
            self.expect("->")
            y = self.name("point")
            triples.append((t, p, y))
        close = self.expect("}")
        self.raw.append(dict(kind="action", tok=name, at=kw, group=g, space=x,
                             triples=triples, close=close))

    def map(self):
        kw = self.next()
        name = self.name("map name")
        self.expect(":")
        dom = self.name("domain")
        self.expect("->")
        cod = self.name("codomain")
        self.expect("{")
        pairs = []
        while self.peek() is not None and self.peek().text != "}":
            x = self.name("point")
            self.expect("->")
            y = self.name("point")
            pairs.append((x, y))
        close = self.expect("}")
        self.raw.append(dict(kind="map", tok=name, at=kw, dom=dom, cod=cod, pairs=pairs, close=close))


class _Abort(Exception):
    def __init__(self, diag: Diagnostic):
        self.diag = diag


def _diag(code: str, tok: Token, message: str, hint: str) -> Diagnostic:
    return Diagnostic(code, tok.line, tok.col, tok.text, message, hint)


def _resolve_topology(n: int, names: list[str], topo, diags: list[Diagnostic]) -> FiniteSpace | None:
    kind, sets, where = topo
    lookup = {p: i for i, p in enumerate(names)}
    masks = []
    for s in sets:
        idx = []
        for tok in s:
            if tok.text not in lookup:
                diags.append(_diag("UnknownName", tok, f"unknown point {tok.text!r}",
                                   "use a name from the point list"))
                return None
            idx.append(lookup[tok.text])
        masks.append(mask_of(idx))
    if kind == "discrete":
        return discrete(n, names)
    if kind == "indiscrete":
        return indiscrete(n, names)
    if kind == "subbasis":
        return from_subbasis(n, masks, names)
    try:
        return from_opens(n, masks, names)
    except NotATopology as exc:
        diags.append(_diag("NotATopology", where, str(exc),
                           "add the missing set or use subbasis: to generate the topology"))
        return None


def _unique_names(toks: list[Token], what: str, diags: list[Diagnostic]) -> list[str] | None:
    seen = set()
    for tok in toks:
        if tok.text in seen:
            diags.append(_diag("DuplicateName", tok, f"{what} {tok.text!r} listed twice",
                               f"each {what} must be listed once"))
            return None
        seen.add(tok.text)
    if not toks:
        return None
    return [t.text for t in toks]


def parse_document(text: str) -> Document:
    """Parse text into a :class:`Document`; raises :class:`DSLError` with all diagnostics."""
    p = _Parser(text)
    p.document()
    diags = p.diags
    declared: dict[tuple[str, str], Token] = {}
    for r in p.raw:
        key = (r["kind"], r["tok"].text)
        if key in declared:
            diags.append(_diag("DuplicateDeclaration", r["tok"], f"{r['kind']} {r['tok'].text!r} declared twice",
                               "rename or remove one declaration"))
        declared[key] = r["tok"]

    items: list[Decl] = []
    # names whose declaration already produced a diagnostic
    broken = {r["tok"].text for r in p.raw if r["kind"] in ("group", "space")}
    carriers: dict[str, tuple[list[str], FiniteSpace]] = {}
    groups: dict[str, list[str]] = {}

    for r in p.raw:
        if r["kind"] == "group":
            elems = _unique_names(r["elements"], "element", diags)
            if elems is None:
                continue
            n = len(elems)
            lookup = {e: i for i, e in enumerate(elems)}
            entries = r["entries"]
            if len(entries) != n * n:
                diags.append(_diag("TableSize", r["tok"], f"table has {len(entries)} entries, expected {n * n}",
                                   "give one row of products per element"))
                continue
            bad = next((t for t in entries if t.text not in lookup), None)
            if bad is not None:
                diags.append(_diag("UnknownName", bad, f"unknown element {bad.text!r}",
                                   "use a name from the element list"))
                continue
            flat = [lookup[t.text] for t in entries]
            table = tuple(tuple(flat[k * n:(k + 1) * n]) for k in range(n))
            X = _resolve_topology(n, elems, r["topo"], diags)
            if X is None:
                continue
            items.append(GroupDecl(r["tok"].text, tuple(elems), table, X))
            broken.discard(r["tok"].text)
            carriers[r["tok"].text] = (elems, X)
            groups[r["tok"].text] = elems
        elif r["kind"] == "space":
            points = _unique_names(r["points"], "point", diags)
            if points is None:
                continue
            X = _resolve_topology(len(points), points, r["topo"], diags)
            if X is None:
                continue
            items.append(SpaceDecl(r["tok"].text, X))
            broken.discard(r["tok"].text)
            carriers.setdefault(r["tok"].text, (points, X))

    # spaces shadow group carriers of the same name
    for d in items:
        if d.kind == "space":
            carriers[d.name] = (list(d.space.names), d.space)

    for r in p.raw:
        if r["kind"] == "action":
            g, x = r["group"], r["space"]
            if g.text in broken or x.text in broken:
                continue
            if g.text not in groups:
                diags.append(_diag("UnknownName", g, f"unknown group {g.text!r}", "declare the group first"))
                continue
            if x.text not in carriers:
                diags.append(_diag("UnknownName", x, f"unknown space {x.text!r}", "declare the space first"))
                continue
            elems = groups[g.text]
            points = carriers[x.text][0]
            el, pl = {e: i for i, e in enumerate(elems)}, {q: i for i, q in enumerate(points)}
            table = [[None] * len(points) for _ in elems]
            ok = True
            for t, q, y in r["triples"]:
                for tok, look, what in ((t, el, "group element"), (q, pl, "point"), (y, pl, "point")):
                    if tok.text not in look:
                        diags.append(_diag("UnknownName", tok, f"unknown {what} {tok.text!r}",
                                           f"use a declared {what}"))
                        ok = False
                        break
                else:
                    if table[el[t.text]][pl[q.text]] is not None:
                        diags.append(_diag("DuplicatePair", t, f"pair ({t.text}, {q.text}) given twice",
                                           "give each (element, point) pair exactly once"))
                        ok = False
                    else:
                        table[el[t.text]][pl[q.text]] = pl[y.text]
                if not ok:
                    break
            if not ok:
                continue
            missing = next(((i, j) for i in range(len(elems)) for j in range(len(points))
                            if table[i][j] is None), None)
            if missing is not None:
                i, j = missing
                diags.append(_diag("MissingPair", r["close"],
                                   f"pair ({elems[i]}, {points[j]}) has no image",
                                   f"add a line '{elems[i]} {points[j]} -> <point>'"))
                continue
            items.append(ActionDecl(r["tok"].text, g.text, x.text, tuple(tuple(row) for row in table)))
        elif r["kind"] == "map":
            dom, cod = r["dom"], r["cod"]
            if dom.text in broken or cod.text in broken:
                continue
            bad = next((tok for tok in (dom, cod) if tok.text not in carriers), None)
            if bad is not None:
                diags.append(_diag("UnknownName", bad, f"unknown space {bad.text!r}", "declare the space first"))
                continue
            dp, cp = carriers[dom.text][0], carriers[cod.text][0]
            dl, cl = {q: i for i, q in enumerate(dp)}, {q: i for i, q in enumerate(cp)}
            table = [None] * len(dp)
            ok = True
            for x, y in r["pairs"]:
                if x.text not in dl or y.text not in cl:
                    tok = x if x.text not in dl else y
                    diags.append(_diag("UnknownName", tok, f"unknown point {tok.text!r}", "use a declared point"))
                    ok = False
                    break
                if table[dl[x.text]] is not None:
                    diags.append(_diag("DuplicatePair", x, f"point {x.text!r} mapped twice",
                                       "give each point exactly one image"))
                    ok = False
                    break
                table[dl[x.text]] = cl[y.text]
            if not ok:
                continue
            if None in table:
                j = table.index(None)
                diags.append(_diag("MissingPair", r["close"], f"point {dp[j]!r} has no image",
                                   f"add a line '{dp[j]} -> <point>'"))
                continue
            items.append(MapDecl(r["tok"].text, dom.text, cod.text, tuple(table)))

    if diags:
        raise DSLError(sorted(diags, key=lambda d: (d.line, d.col, d.code)))
    return Document(tuple(items))


# ---------------------------------------------------------------- serializer

def _set_text(X: FiniteSpace, s: int) -> str:
    return "{" + " ".join(X.names[p] for p in members(s)) + "}"


def _topology_text(X: FiniteSpace, allow_indiscrete: bool) -> str:
    if X.is_discrete:
        return "discrete"
    if allow_indiscrete and X.is_indiscrete:
        return "indiscrete"
    return "subbasis: " + " ".join(_set_text(X, b) for b in X.basis) + " ;"


def serialize_document(doc: Document) -> str:
    blocks = []
    points: dict[str, tuple[str, ...]] = {}
    elements: dict[str, tuple[str, ...]] = {}
    for d in doc.items:
        if d.kind == "group":
            elements[d.name] = d.elements
            points.setdefault(d.name, d.elements)
        elif d.kind == "space":
            points[d.name] = d.space.names
    for d in doc.items:
        if d.kind == "group":
            rows = "\n".join("    " + " ".join(d.elements[v] for v in row) for row in d.table)
            blocks.append(f"group {d.name} {{\n  elements: {' '.join(d.elements)} ;\n"
                          f"  table:\n{rows} ;\n  {_topology_text(d.space, False)}\n}}")
        elif d.kind == "space":
            blocks.append(f"space {d.name} {{\n  points: {' '.join(d.space.names)} ;\n"
                          f"  {_topology_text(d.space, True)}\n}}")
        elif d.kind == "action":
            el, pts = elements[d.group], points[d.space]
            lines = [f"  {el[t]} {pts[x]} -> {pts[y]}"
                     for t, row in enumerate(d.table) for x, y in enumerate(row)]
            blocks.append(f"action {d.name} : {d.group} on {d.space} {{\n" + "\n".join(lines) + "\n}")
        else:
            dp, cp = points[d.dom], points[d.cod]
            lines = [f"  {dp[x]} -> {cp[y]}" for x, y in enumerate(d.table)]
            blocks.append(f"map {d.name} : {d.dom} -> {d.cod} {{\n" + "\n".join(lines) + "\n}")
    return "\n\n".join(blocks) + ("\n" if blocks else "")
