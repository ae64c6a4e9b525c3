"""Command line front end.

Exit codes: 0 when every check passes, 1 for a violation or refutation, 2 for
usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .action import ActionError, classify_action, orbit_data
from .algebra import CapabilityError
from .dsl import Document, DSLError, map_decl, parse_document, serialize_document, space_decl
from .dynamics import (
    GOALS,
    SearchBounds,
    check_T_conjugacy,
    dense_T_orbit,
    equivariance_profile,
    is_T_transitive,
    is_transitive,
    search_witness,
)
from .laws import Bounds, Instance, get_law, run_all, run_law
from .quotient import build_quotient, projection_profile
from .tgg import validate_tgg
from .topology import is_continuous, members

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _load(path: str) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def _need(doc: Document, kind: str, name: str) -> None:
    if name not in doc.names(kind):
        raise UsageError(f"no {kind} named {name!r} in document")


def _action(doc: Document, name: str):
    _need(doc, "action", name)
    return doc.action(name)


def _map(doc: Document, name: str):
    _need(doc, "map", name)
    f = doc.map(name)
    if not is_continuous(f):
        raise ActionError(f"map {name} is not continuous")
    return f


def _set(X, mask: int) -> str:
    return "{" + " ".join(X.names[p] for p in members(mask)) + "}"


def _flag(ok: bool) -> str:
    return "yes" if ok else "no"


# ---------------------------------------------------------------- subcommands

def cmd_validate(args) -> int:
    doc = _load(args.file)
    failures = 0
    for d in doc.items:
        try:
            if d.kind == "group":
                g = doc.group(d.name)
                r = g.report
                ok = g.well_formed
                print(f"group {d.name}: order {g.order}, "
                      f"{'well-formed' if ok else 'NOT well-formed'} "
                      f"(hausdorff={_flag(r.hausdorff)}, m1={_flag(r.m1_continuous)}, "
                      f"m2={_flag(r.m2_continuous)}, eq1={_flag(r.eq1_holds)})")
            elif d.kind == "space":
                X = doc.space(d.name)
                print(f"space {d.name}: {X.size} points, {len(X.basis)} basic opens")
                ok = True
            elif d.kind == "action":
                a = doc.action(d.name)
                print(f"action {d.name}: valid, strict={_flag(a.strict)}")
                ok = True
            else:
                f = doc.map(d.name)
                ok = is_continuous(f)
                print(f"map {d.name}: {'continuous' if ok else 'NOT continuous'}")
        except ValueError as exc:
            ok = False
            print(f"{d.kind} {d.name}: {exc}")
        failures += not ok
    print("ok" if not failures else f"{failures} declaration(s) failed")
    return 1 if failures else 0


def cmd_classify(args) -> int:
    doc = _load(args.file)
    a = _action(doc, args.action)
    p = classify_action(a)
    X = a.space
    print(f"action {args.action}")
    for key in ("effective", "transitive", "free", "regular", "perfect"):
        print(f"  {key}: {_flag(getattr(p, key))}")
    print(f"  singular set: {_set(X, p.singular_set)}")
    print(f"  strict (X Hausdorff, T well-formed): {_flag(a.strict and a.group.well_formed)}")
    return 0


def cmd_orbits(args) -> int:
    doc = _load(args.file)
    a = _action(doc, args.action)
    from .quotient import orbit_partition

    X, T = a.space, a.group
    for x in range(X.size):
        od = orbit_data(a, x)
        stab = "{" + " ".join(T.names[t] for t in members(od.stabilizer)) + "}"
        print(f"{X.names[x]}: orbit {_set(X, od.orbit)}, stabilizer {stab}, "
              f"regular={_flag(od.regular_point)}")
    part = orbit_partition(a)
    print(f"relation: reflexive={_flag(part.reflexive)} symmetric={_flag(part.symmetric)} "
          f"transitive={_flag(part.transitive)}")
    print("classes: " + " ".join(_set(X, c) for c in part.classes))
    if part.closure_taken:
        print("equivalence closure taken")
        return 1
    return 0


def cmd_quotient(args) -> int:
    doc = _load(args.file)
    a = _action(doc, args.action)
    q = build_quotient(a)
    Q, X = q.space, a.space
    print("classes: " + " ".join(_set(X, c) for c in q.partition.classes))
    print("quotient basis: " + " ".join(_set(Q, b) for b in Q.basis))
    p = projection_profile(q)
    print(f"projection: open={_flag(p.open_map)} closed={_flag(p.closed_map)} "
          f"proper={_flag(p.proper)}")
    print(f"quotient hausdorff: {_flag(p.quotient_hausdorff)}")
    if args.emit:
        x_name = doc.action_decl(args.action).space
        out = Document((space_decl("Q", Q), space_decl(x_name, X),
                        map_decl("pi", x_name, "Q", q.projection)))
        Path(args.emit).write_text(serialize_document(out), encoding="utf-8")
        print(f"wrote {args.emit}")
    return 0


def cmd_dynamics(args) -> int:
    doc = _load(args.file)
    a = _action(doc, args.action)
    f = _map(doc, args.map)
    X = a.space
    if args.check == "transitive":
        v = is_transitive(f)
    elif args.check == "t-transitive":
        v = is_T_transitive(f, a)
    else:
        x = dense_T_orbit(f, a)
        if x is None:
            print("dense-orbit: no")
            return 1
        print(f"dense-orbit: yes, from {X.names[x]}")
        return 0
    if v:
        print(f"{args.check}: yes")
        return 0
    u, w, n = v.refutation
    print(f"{args.check}: no (U={_set(X, u)}, V={_set(X, w)}, {n} iterates)")
    return 1


def cmd_equivariance(args) -> int:
    doc = _load(args.file)
    a, b = _action(doc, args.source), _action(doc, args.target)
    f = _map(doc, args.map)
    p = equivariance_profile(f, a, b)
    print(f"equivariant: {_flag(p.equivariant)}")
    print(f"pseudoequivariant: {_flag(p.pseudoequivariant)}")
    print(f"stabilizer inclusion: {_flag(p.stabilizer_inclusion)}")
    return 0 if p.equivariant else 1


def cmd_conjugacy(args) -> int:
    doc = _load(args.file)
    a, b = _action(doc, args.source), _action(doc, args.target)
    f, g, h = _map(doc, args.f), _map(doc, args.g), _map(doc, args.h)
    v = check_T_conjugacy(f, g, h, a, b)
    print(f"homeomorphism: {_flag(v.homeomorphism)}")
    print(f"pseudoequivariant: {_flag(v.pseudoequivariant)}")
    print(f"h o f = g o h: {_flag(v.commutes)}")
    print(f"T-conjugate: {_flag(v.result)}")
    return 0 if v else 1


def _report_json(reports, bounds: Bounds, summary: dict | None) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "bounds": {"max_group_order": bounds.max_group_order,
                   "max_space_size": bounds.max_space_size, "relaxed": bounds.relaxed},
        "reports": [r.to_json() for r in reports],
    }
    if summary is not None:
        payload["out_of_scope"] = summary["out_of_scope"]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_laws(args) -> int:
    bounds = Bounds(args.max_group_order, args.max_space_size, args.relaxed)
    if args.law:
        try:
            get_law(args.law)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        reports, summary = [run_law(args.law, bounds)], None
    else:
        reports, summary = run_all(bounds)
    for r in reports:
        print(f"{r.id:<5} {r.status:<19} {r.instances_checked:>7}  {r.note}")
    if summary is not None:
        for r in summary["out_of_scope"]:
            print(f"{r['id']:<5} {r['status']:<19} {0:>7}  {r['note']}")
    for r in reports:
        if r.status == "Refuted":
            print(f"\n# witness for {r.id}\n{r.witness}")
    if args.json:
        Path(args.json).write_text(_report_json(reports, bounds, summary), encoding="utf-8")
    return 1 if any(r.status == "Refuted" for r in reports) else 0


def _bundle_document(result) -> Document:
    b = result.bundle
    if "action" in b:
        maps = (("f", "X", "X", b["map"]),) if "map" in b else ()
        return Instance(action=b["action"], maps=maps).to_document()
    return Instance(group=validate_tgg(b["group"], name="T")).to_document()


def cmd_search(args) -> int:
    bounds = SearchBounds(args.max_group_order, args.max_space_size, args.max_topologies,
                          args.perfect_only)
    try:
        result = search_witness(args.goal, bounds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"# goal: {result.goal}")
    print(f"# candidates examined: {result.examined}")
    if not result.found:
        print("# no witness within bounds")
        return 1
    if "pair" in result.bundle:
        s, t = result.bundle["pair"]
        g = result.bundle["group"]
        print(f"# e(st) != e(s)e(t) at s={g.names[s]}, t={g.names[t]}")
    if "point" in result.bundle:
        print(f"# dense T-orbit from point index {result.bundle['point']}")
    print(serialize_document(_bundle_document(result)), end="")
    return 0


def cmd_fmt(args) -> int:
    doc = _load(args.file)
    text = serialize_document(doc)
    if args.write:
        Path(args.file).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tspaces",
                                description="Finite generalized groups, T-spaces and their dynamics.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse a document and validate every declaration")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    for name, func, helptext in (("classify", cmd_classify, "action properties"),
                                 ("orbits", cmd_orbits, "orbits, stabilizers, orbit relation audit")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file")
        s.add_argument("--action", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("quotient", help="orbit space and projection")
    s.add_argument("file")
    s.add_argument("--action", required=True)
    s.add_argument("--emit", metavar="OUT", help="write the quotient space and projection as a document")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("dynamics", help="transitivity checks for a self-map")
    s.add_argument("file")
    s.add_argument("--action", required=True)
    s.add_argument("--map", required=True)
    s.add_argument("--check", required=True, choices=("transitive", "t-transitive", "dense-orbit"))
    s.set_defaults(func=cmd_dynamics)

    s = sub.add_parser("equivariance", help="equivariance of a map between two actions")
    s.add_argument("file")
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_equivariance)

    s = sub.add_parser("conjugacy", help="topological T-conjugacy h o f = g o h")
    s.add_argument("file")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--h", required=True)
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.set_defaults(func=cmd_conjugacy)

    s = sub.add_parser("laws", help="run the law registry")
    s.add_argument("--law", choices=None, help="single law id, e.g. L3")
    s.add_argument("--max-group-order", type=int, default=4)
    s.add_argument("--max-space-size", type=int, default=3)
    s.add_argument("--relaxed", action="store_true", help="also test non-Hausdorff instances")
    s.add_argument("--json", metavar="OUT", help="write the machine-readable report")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("search", help="bounded witness search")
    s.add_argument("--goal", required=True, help="one of: " + ", ".join(g.replace("_", "-") for g in GOALS))
    s.add_argument("--max-group-order", type=int, default=2)
    s.add_argument("--max-space-size", type=int, default=2)
    s.add_argument("--max-topologies", type=int, default=None)
    s.add_argument("--perfect-only", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fmt", help="print the canonical serialization")
    s.add_argument("file")
    s.add_argument("--write", action="store_true", help="rewrite the file in place")
    s.set_defaults(func=cmd_fmt)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DSLError as exc:
        for d in exc.diagnostics:
            print(str(d), file=sys.stderr)
        return 2
    except (UsageError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
