"""Executable law registry.

Each law pairs a hypothesis with a conclusion and is run over a deterministic
instance corpus.  Statuses:

* ``Verified``: every hypothesis-satisfying instance passes and at least one
  of them is non-degenerate.
* ``DegenerateVerified``: all pass, but finiteness trivializes every one.
* ``Refuted``: a hypothesis-satisfying instance fails (witness attached).
* ``Informative``: only hypothesis-violating (relaxed) instances fail.
* ``OutOfScope``: no finite model exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import corpus
from .action import (
    GenAction,
    action_violations,
    classify_action,
    hat_map,
    is_trivial,
    orbit_data,
    proper_profile,
    translations_are_homeomorphisms,
    inverse_translation_identity,
    y_t,
    Axiom1Violation,
)
from .algebra import eclass_decompose
from .dsl import Document, action_decl, group_decl, map_decl, parse_document, serialize_document, space_decl
from .dynamics import (
    check_T_conjugacy,
    dense_T_orbit,
    equivariance_profile,
    is_pseudoequivariant,
    is_T_transitive,
    is_transitive,
)
from .quotient import build_quotient, orbit_partition, projection_profile
from .tgg import (
    TopGenGroup,
    canonical_instances,
    identity_map_e,
    rees_eq1_violation,
    validate_tgg,
)
from .topology import (
    SpaceMap,
    discrete,
    is_compact,
    is_continuous,
    map_predicates,
    product_space,
    subsets,
)

STATUSES = ("Verified", "DegenerateVerified", "Refuted", "Informative", "OutOfScope")


@dataclass(frozen=True)
class Bounds:
    max_group_order: int = 4
    max_space_size: int = 3
    relaxed: bool = False


@dataclass(frozen=True)
class Outcome:
    hypotheses: bool
    conclusion: bool
    degenerate: bool = False


@dataclass
class Instance:
    """A bundle of objects under the fixed names ``T, X, A, Y, B, f, g, h``."""

    group: TopGenGroup | None = None
    action: GenAction | None = None
    other: GenAction | None = None
    maps: tuple[tuple[str, str, str, SpaceMap], ...] = ()
    raw_action: tuple[tuple[int, ...], ...] | None = None
    space: object = None

    def map(self, name: str) -> SpaceMap:
        for n, _, _, f in self.maps:
            if n == name:
                return f
        raise KeyError(name)

    def to_document(self) -> Document:
        items = []
        T = self.group or (self.action.group if self.action else None)
        if T is not None:
            items.append(group_decl("T", T))
        if self.action is not None:
            items.append(space_decl("X", self.action.space))
            items.append(action_decl("A", "T", "X", self.action.table))
        elif self.raw_action is not None:
            items.append(space_decl("X", self.space))
            items.append(action_decl("A", "T", "X", self.raw_action))
        if self.other is not None:
            items.append(space_decl("Y", self.other.space))
            items.append(action_decl("B", "T", "Y", self.other.table))
        for name, dom, cod, f in self.maps:
            items.append(map_decl(name, dom, cod, f))
        return Document(tuple(items))

    @classmethod
    def from_document(cls, doc: Document) -> Instance:
        inst = cls()
        if "T" in doc.names("group"):
            inst.group = doc.group("T")
        if "A" in doc.names("action"):
            try:
                inst.action = doc.action("A")
            except ValueError:
                inst.raw_action = doc.action_decl("A").table
                inst.space = doc.space("X")
        if "B" in doc.names("action"):
            inst.other = doc.action("B")
        maps = []
        for d in doc.items:
            if d.kind == "map":
                maps.append((d.name, d.dom, d.cod, doc.map(d.name)))
        inst.maps = tuple(maps)
        return inst


@dataclass(frozen=True)
class Law:
    id: str
    title: str
    scope: str
    instances: Callable[[Bounds], Iterable[Instance]] | None
    check: Callable[[Instance], Outcome] | None
    detail: Callable[[Instance], str] | None = None


@dataclass
class LawReport:
    id: str
    status: str
    instances_checked: int
    witness: str | None = None
    note: str = ""
    counts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"id": self.id, "status": self.status, "instances_checked": self.instances_checked}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


# ---------------------------------------------------------------- corpora

@lru_cache(maxsize=None)
def _group_corpus(bounds: Bounds) -> tuple[TopGenGroup, ...]:
    out = list(corpus.strict_groups(bounds.max_group_order))
    if bounds.max_group_order >= 4:
        out += [g for g in canonical_instances().values() if g.order > 4]
    if bounds.relaxed:
        for g in corpus.strict_groups(min(bounds.max_group_order, 3)):
            for X in corpus.all_topologies(g.order):
                if not X.is_discrete:
                    out.append(validate_tgg(g.algebra, X.renamed(g.names), g.name))
        rees = rees_eq1_violation()
        if rees is not None:
            out.append(rees)
    return tuple(out)


def group_instances(bounds: Bounds) -> Iterator[Instance]:
    for g in _group_corpus(bounds):
        yield Instance(group=g)


def _spaces(n: int, relaxed: bool):
    return corpus.topologies_up_to_homeomorphism(n) if relaxed else (discrete(n),)


@lru_cache(maxsize=None)
def _action_corpus(bounds: Bounds) -> tuple[GenAction, ...]:
    out = []
    for T in corpus.strict_groups(bounds.max_group_order):
        for n in range(1, bounds.max_space_size + 1):
            for X in _spaces(n, bounds.relaxed):
                out.extend(corpus.actions(T, X))
    out.append(corpus.sign_instance())
    if bounds.relaxed:
        out.append(corpus.plane_analog())
    return tuple(out)


def action_instances(bounds: Bounds) -> Iterator[Instance]:
    for a in _action_corpus(bounds):
        yield Instance(action=a)


def _small(bounds: Bounds, size: int) -> Bounds:
    return Bounds(bounds.max_group_order, min(bounds.max_space_size, size), bounds.relaxed)


def map_instances(bounds: Bounds) -> Iterator[Instance]:
    for a in _action_corpus(bounds):
        for f in corpus.endomaps(a.space):
            yield Instance(action=a, maps=(("f", "X", "X", f),))


def pair_instances(bounds: Bounds) -> Iterator[Instance]:
    """Pairs of actions by the same group with every continuous map between them."""
    by_group: dict[tuple, list[GenAction]] = {}
    for a in _action_corpus(_small(bounds, 2)):
        by_group.setdefault(a.algebra.table, []).append(a)
    for group_actions in by_group.values():
        for a, b in itertools.product(group_actions, repeat=2):
            for f in corpus.maps_between(a.space, b.space):
                yield Instance(action=a, other=b, maps=(("f", "X", "Y", f),))


def conjugacy_instances(bounds: Bounds) -> Iterator[Instance]:
    """``g = h f h^-1`` for every homeomorphism ``h`` that is pseudoequivariant."""
    by_key: dict[tuple, list[GenAction]] = {}
    for a in _action_corpus(bounds):
        by_key.setdefault((a.algebra.table, a.space.nbhd), []).append(a)
    for group_actions in by_key.values():
        X = group_actions[0].space
        homeos = [h for h in corpus.endomaps(X) if map_predicates(h).homeomorphism]
        fs = corpus.endomaps(X)
        for a, b in itertools.product(group_actions, repeat=2):
            for h in homeos:
                if not is_pseudoequivariant(h, a, b):
                    continue
                hinv = h.inverse()
                for f in fs:
                    g = hinv.then(f).then(h)
                    yield Instance(action=a, other=b, maps=(("f", "X", "X", f), ("g", "Y", "Y", g),
                                                            ("h", "X", "Y", h)))


def theta_example_instances(bounds: Bounds) -> Iterator[Instance]:
    yield Instance(group=corpus.sign_group(), raw_action=corpus.sign_theta_table(),
                   space=corpus.sign_space())


# ---------------------------------------------------------------- checks

def _key(a: GenAction) -> tuple:
    return (a.algebra.table, a.group.space.nbhd, a.space.nbhd, a.table)


_PERFECT: dict[tuple, bool] = {}
_T_TRANSITIVE: dict[tuple, bool] = {}


def _perfect(a: GenAction) -> bool:
    key = _key(a)
    if key not in _PERFECT:
        _PERFECT[key] = classify_action(a).perfect
    return _PERFECT[key]


def _t_transitive(a: GenAction, f: SpaceMap) -> bool:
    key = _key(a) + (f.table,)
    if key not in _T_TRANSITIVE:
        _T_TRANSITIVE[key] = bool(is_T_transitive(f, a))
    return _T_TRANSITIVE[key]


def _tspace(a: GenAction) -> bool:
    return a.strict and a.group.well_formed


def check_l1(inst: Instance) -> Outcome:
    g = inst.group.algebra
    n = g.order
    ok = True
    for t in range(n):
        ids = [x for x in range(n) if g.mul(t, x) == t == g.mul(x, t)]
        invs = [y for y in range(n) if g.mul(y, t) == g.e(t) == g.mul(t, y)]
        ok &= ids == [g.e(t)] and invs == [g.inv(t)]
        ok &= g.e(g.e(t)) == g.e(t) and g.e(t) == g.e(g.inv(t)) and g.inv(g.inv(t)) == t
    return Outcome(True, ok)


def check_l2(inst: Instance) -> Outcome:
    g = inst.group
    return Outcome(g.well_formed, g.algebra.eq2_counterexample() is None)


def check_l3(inst: Instance) -> Outcome:
    T = inst.group.algebra
    ok = all(T.inv(T.mul(s, t)) == T.prod(T.e(s), T.inv(t), T.inv(s), T.e(t))
             for s in range(T.order) for t in range(T.order))
    return Outcome(inst.group.well_formed, ok)


def check_l4(inst: Instance) -> Outcome:
    g = inst.group
    classes = eclass_decompose(g.algebra)
    X = g.space
    ok = True
    for c in classes:
        m = sum(1 << t for t in c.members)
        ok &= c.is_group and X.is_open(m) and X.is_closed(m)
    return Outcome(g.well_formed, ok)


def check_l5(inst: Instance) -> Outcome:
    g = inst.group
    ok = is_continuous(identity_map_e(g.algebra, g.space))
    return Outcome(g.well_formed, ok, g.space.is_discrete)


def check_l6(inst: Instance) -> Outcome:
    a = inst.action
    ok = all(orbit_data(a, x).stabilizer_is_subgroup and orbit_data(a, x).stabilizer_closed
             for x in range(a.space.size))
    return Outcome(_tspace(a), ok)


def check_l7(inst: Instance) -> Outcome:
    a = inst.action
    perfect = _perfect(a)
    ok = translations_are_homeomorphisms(a) and inverse_translation_identity(a)
    return Outcome(_tspace(a) and perfect, ok)


def _action_map(a: GenAction) -> SpaceMap:
    TX = product_space(a.group.space, a.space)
    return SpaceMap(TX, a.space, tuple(v for row in a.table for v in row))


def _both_discrete(a: GenAction) -> bool:
    return a.space.is_discrete and a.group.space.is_discrete


def check_l8(inst: Instance) -> Outcome:
    a = inst.action
    hyp = _tspace(a) and _perfect(a) and is_compact(a.group.space, a.group.space.full)
    return Outcome(hyp, map_predicates(_action_map(a)).closed_map, _both_discrete(a))


def check_l9(inst: Instance) -> Outcome:
    a = inst.action
    X = a.space
    hyp = _tspace(a) and _perfect(a)
    ok = all(X.is_closed(a.translate(y)) and is_compact(X, a.translate(y))
             for y in subsets(X.full) if X.is_closed(y))
    return Outcome(hyp, ok, X.is_discrete)


def check_l10(inst: Instance) -> Outcome:
    a = inst.action
    hyp = _tspace(a) and _perfect(a)
    q = build_quotient(a)
    return Outcome(hyp, projection_profile(q).open_map, a.space.is_discrete)


def check_l11(inst: Instance) -> Outcome:
    a = inst.action
    hyp = _tspace(a) and _perfect(a)
    p = projection_profile(build_quotient(a))
    ok = (p.closed_map and p.quotient_hausdorff and p.proper and p.proper_sufficient
          and p.compact_iff and p.locally_compact_iff)
    return Outcome(hyp, ok, a.space.is_discrete)


def check_l12(inst: Instance) -> Outcome:
    a = inst.action
    prof = proper_profile(a, 0)
    return Outcome(_tspace(a), prof.proper_literal == prof.proper_via_yt, True)


def check_l13(inst: Instance) -> Outcome:
    a = inst.action
    compact_t = is_compact(a.group.space, a.group.space.full)
    return Outcome(_tspace(a) and compact_t, map_predicates(hat_map(a)).proper, True)


def check_l14(inst: Instance) -> Outcome:
    a = inst.action
    proper = map_predicates(hat_map(a)).proper
    ok = all(is_compact(a.group.space, a.stabilizers[x]) and map_predicates(a.rho(x)).proper
             for x in range(a.space.size))
    return Outcome(_tspace(a) and proper, ok, True)


def check_l15(inst: Instance) -> Outcome:
    a = inst.action
    proper = map_predicates(hat_map(a)).proper
    q = build_quotient(a)
    ok = all(a.space.is_closed(o) for o in a.orbits) and projection_profile(q).quotient_hausdorff
    return Outcome(_tspace(a) and proper, ok, a.space.is_discrete)


def check_l16(inst: Instance) -> Outcome:
    p = classify_action(inst.action)
    ok = p.transitive == p.transitive_via_orbits and p.free == p.free_via_identities
    return Outcome(_tspace(inst.action), ok)


def check_l17(inst: Instance) -> Outcome:
    a, f = inst.action, inst.map("f")
    hyp = _tspace(a) and not is_trivial(a) and bool(is_transitive(f))
    return Outcome(hyp, bool(is_T_transitive(f, a)))


def check_l18(inst: Instance) -> Outcome:
    a, f = inst.action, inst.map("f")
    X = a.space
    hyp = (_tspace(a) and _perfect(a) and f.image(X.full) == X.full
           and is_pseudoequivariant(f, a, a) and dense_T_orbit(f, a) is not None)
    return Outcome(hyp, bool(is_T_transitive(f, a)))


def check_l19(inst: Instance) -> Outcome:
    a, b, f = inst.action, inst.other, inst.map("f")
    prof = equivariance_profile(f, a, b)
    return Outcome(_tspace(a) and _tspace(b) and prof.equivariant, prof.stabilizer_inclusion)


def check_l20(inst: Instance) -> Outcome:
    a, b = inst.action, inst.other
    f, g, h = inst.map("f"), inst.map("g"), inst.map("h")
    perfect = _perfect(a) and _perfect(b)
    hyp = _tspace(a) and _tspace(b) and perfect and bool(check_T_conjugacy(f, g, h, a, b))
    same = _t_transitive(a, f) == _t_transitive(b, g)
    return Outcome(hyp, same)


def check_l21(inst: Instance) -> Outcome:
    part = orbit_partition(inst.action)
    assert part.closure_taken == (not part.is_equivalence)
    return Outcome(_tspace(inst.action), part.is_equivalence)


def check_l22(inst: Instance) -> Outcome:
    table = inst.raw_action if inst.raw_action is not None else inst.action.table
    space = inst.space if inst.raw_action is not None else inst.action.space
    group = inst.group or inst.action.group
    bad = [v for v in action_violations(group, space, table) if isinstance(v, Axiom1Violation)]
    return Outcome(True, not bad)


def _axiom1_witness(inst: Instance) -> tuple[str, str, str] | None:
    group = inst.group or inst.action.group
    table = inst.raw_action if inst.raw_action is not None else inst.action.table
    space = inst.space if inst.raw_action is not None else inst.action.space
    for v in action_violations(group, space, table):
        if isinstance(v, Axiom1Violation):
            s, t, x = v.witness
            return (group.names[s], group.names[t], space.names[x])
    return None


def detail_l22(inst: Instance) -> str:
    s, t, x = _axiom1_witness(inst)
    return f"axiom (i) fails at s={s}, t={t}, x={x}: s(tx) != (st)x"


# ---------------------------------------------------------------- registry

REGISTRY: tuple[Law, ...] = (
    Law("L1", "identity and inverse are unique; e(e(t)) = e(t) = e(inv t)", "strict",
        group_instances, check_l1),
    Law("L2", "e(s)e(t)e(s) = e(s)", "both", group_instances, check_l2),
    Law("L3", "(st)^-1 = e(s) t^-1 s^-1 e(t)", "both", group_instances, check_l3),
    Law("L4", "a generalized group is a disjoint union of clopen groups", "both",
        group_instances, check_l4),
    Law("L5", "e is continuous", "both", group_instances, check_l5),
    Law("L6", "stabilizers are closed generalized subgroups", "both", action_instances, check_l6),
    Law("L7", "translations of a perfect action are homeomorphisms", "both",
        action_instances, check_l7),
    Law("L8", "the action map of a perfect action by a compact group is closed", "both",
        action_instances, check_l8),
    Law("L9", "TY is closed (compact) when Y is closed (compact)", "both", action_instances, check_l9),
    Law("L10", "the orbit projection of a perfect action is open", "both", action_instances, check_l10),
    Law("L11", "orbit projection is closed and proper, the quotient is Hausdorff", "both",
        action_instances, check_l11),
    Law("L12", "an action is proper iff every Y_T is compact", "both", action_instances, check_l12),
    Law("L13", "an action by a compact group is proper", "both", action_instances, check_l13),
    Law("L14", "proper actions have compact stabilizers and proper orbit maps", "both",
        action_instances, check_l14),
    Law("L15", "proper actions have closed orbits and a Hausdorff quotient", "both",
        action_instances, check_l15),
    Law("L16", "transitive iff one orbit; free iff stabilizers are identities", "both",
        action_instances, check_l16),
    Law("L17", "a transitive map on a nontrivial T-space is T-transitive", "both",
        map_instances, check_l17),
    Law("L18", "a dense T-orbit makes an onto pseudoequivariant map T-transitive", "both",
        map_instances, check_l18),
    Law("L19", "an equivariant map enlarges stabilizers", "both", pair_instances, check_l19),
    Law("L20", "T-conjugacy preserves T-transitivity", "both", conjugacy_instances, check_l20),
    Law("L21", "the orbit relation is an equivalence relation", "both", action_instances, check_l21),
    Law("L22", "theta(t, x) = tx on the sign example is a generalized action", "strict",
        theta_example_instances, check_l22, detail_l22),
)

OUT_OF_SCOPE: tuple[Law, ...] = (
    Law("L18-forward", "T-transitivity yields a dense T-orbit (needs Baire category)", "none",
        None, None),
    Law("L-constant-rank", "equivariant smooth maps have constant rank (needs manifolds)", "none",
        None, None),
)

_BY_ID = {law.id: law for law in REGISTRY + OUT_OF_SCOPE}


def get_law(law_id: str) -> Law:
    try:
        return _BY_ID[law_id]
    except KeyError:
        raise KeyError(f"unknown law id {law_id!r}") from None


def run_law(law_id: str, bounds: Bounds | None = None) -> LawReport:
    law = get_law(law_id)
    bounds = bounds or Bounds()
    if law.check is None:
        return LawReport(law.id, "OutOfScope", 0, note=f"no finite model: {law.title}")
    checked = hyp_ok = nondegenerate = informative = 0
    refuted: Instance | None = None
    evidence: Instance | None = None
    for inst in law.instances(bounds):
        out = law.check(inst)
        if not out.hypotheses and not bounds.relaxed:
            continue
        checked += 1
        if out.hypotheses:
            hyp_ok += 1
            nondegenerate += not out.degenerate
            if not out.conclusion and refuted is None:
                refuted = inst
        elif not out.conclusion:
            informative += 1
            if evidence is None:
                evidence = inst
    counts = {"hypotheses_hold": hyp_ok, "non_degenerate": nondegenerate,
              "informative_failures": informative}
    if refuted is not None:
        note = law.title if law.detail is None else f"{law.title}; {law.detail(refuted)}"
        return LawReport(law.id, "Refuted", checked, serialize_document(refuted.to_document()),
                         note, counts)
    if informative:
        return LawReport(law.id, "Informative", checked, serialize_document(evidence.to_document()),
                         f"{law.title}; fails only where a hypothesis is dropped", counts)
    if hyp_ok == 0:
        return LawReport(law.id, "Informative", checked, None,
                         f"{law.title}; no instance within bounds satisfies the hypotheses", counts)
    if nondegenerate:
        return LawReport(law.id, "Verified", checked, None, law.title, counts)
    return LawReport(law.id, "DegenerateVerified", checked, None,
                     f"{law.title}; degenerate: trivially true on finite carriers", counts)


def run_all(bounds: Bounds | None = None) -> tuple[list[LawReport], dict]:
    bounds = bounds or Bounds()
    reports = [run_law(law.id, bounds) for law in REGISTRY]
    summary = {status: sum(r.status == status for r in reports) for status in STATUSES}
    summary["out_of_scope"] = [run_law(law.id, bounds).to_json() for law in OUT_OF_SCOPE]
    return reports, summary


def orbit_relation_audit(bounds: Bounds | None = None) -> list[dict]:
    """Per-instance audit of the orbit relation over the action corpus."""
    rows = []
    for k, a in enumerate(_action_corpus(bounds or Bounds())):
        part = orbit_partition(a)
        rows.append({"instance": k, "group": a.group.name, "points": a.space.size,
                     "strict": _tspace(a), "reflexive": part.reflexive, "symmetric": part.symmetric,
                     "transitive": part.transitive, "closure_taken": part.closure_taken})
    return rows


def replay(law_id: str, witness: str) -> Outcome:
    """Re-run a law's check on a serialized witness document."""
    law = get_law(law_id)
    if law.check is None:
        raise ValueError(f"{law_id} has no executable check")
    return law.check(Instance.from_document(parse_document(witness)))
