"""Generalized actions of a topological generalized group on a finite space."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .algebra import GenGroup, NotAGeneralizedGroup, NotASemigroup, validate_generalized_group
from .tgg import TopGenGroup
from .topology import (
    FiniteSpace,
    SpaceMap,
    identity_map,
    is_compact,
    is_continuous,
    is_hausdorff,
    map_predicates,
    mask_of,
    members,
    product_space,
    subsets,
)

ActionTable = tuple[tuple[int, ...], ...]


class ActionError(ValueError):
    pass


class Axiom1Violation(ActionError):
    def __init__(self, s: int, t: int, x: int, names: tuple[str, str, str] | None = None):
        shown = names or (s, t, x)
        super().__init__(f"s(tx) != (st)x at (s, t, x) = {shown}")
        self.witness = (s, t, x)


class Axiom2Violation(ActionError):
    def __init__(self, x: int, name: str | None = None):
        super().__init__(f"no local identity fixes point {name if name is not None else x}")
        self.witness = x


class NotContinuous(ActionError):
    def __init__(self, t: int, x: int):
        super().__init__(f"action is not continuous at (t, x) = ({t}, {x})")
        self.witness = (t, x)


def _freeze(table: Sequence[Sequence[int]]) -> ActionTable:
    return tuple(tuple(int(v) for v in row) for row in table)


def action_continuity_witness(group: TopGenGroup, space: FiniteSpace,
                              table: ActionTable) -> tuple[int, int] | None:
    """Least ``(t, x)`` where the action map on ``T x X`` fails continuity."""
    T = group.space
    for t in range(group.order):
        for x in range(space.size):
            target = space.nbhd[table[t][x]]
            for s in members(T.nbhd[t]):
                row = table[s]
                for y in members(space.nbhd[x]):
                    if not (target >> row[y]) & 1:
                        return (t, x)
    return None


def action_violations(group: TopGenGroup, space: FiniteSpace,
                      table: Sequence[Sequence[int]]) -> list[ActionError]:
    """Every axiom failure, in a fixed order, each with its least witness."""
    table = _freeze(table)
    T = group.algebra
    if len(table) != T.order or any(len(r) != space.size for r in table):
        raise ValueError("action table must be |T| x |X|")
    if any(not 0 <= v < space.size for r in table for v in r):
        raise ValueError("action value outside the space")
    found: list[ActionError] = []
    tn, sn = group.names, space.names
    first1 = next(((s, t, x) for s in range(T.order) for t in range(T.order)
                   for x in range(space.size)
                   if table[s][table[t][x]] != table[T.mul(s, t)][x]), None)
    if first1 is not None:
        s, t, x = first1
        found.append(Axiom1Violation(s, t, x, (tn[s], tn[t], sn[x])))
    for x in range(space.size):
        if not any(table[e][x] == x for e in T.identity_set):
            found.append(Axiom2Violation(x, sn[x]))
            break
    cont = action_continuity_witness(group, space, table)
    if cont is not None:
        found.append(NotContinuous(*cont))
    return found


@dataclass(frozen=True)
class GenAction:
    group: TopGenGroup
    space: FiniteSpace
    table: ActionTable
    name: str = ""

    def act(self, t: int, x: int) -> int:
        return self.table[t][x]

    def act_set(self, t: int, s: int) -> int:
        row = self.table[t]
        return mask_of(row[x] for x in members(s))

    def translate(self, s: int) -> int:
        """``T.Y`` for a point set ``Y``."""
        out = 0
        for t in range(self.group.order):
            out |= self.act_set(t, s)
        return out

    @property
    def algebra(self) -> GenGroup:
        return self.group.algebra

    @property
    def strict(self) -> bool:
        return is_hausdorff(self.space)

    @cached_property
    def orbits(self) -> tuple[int, ...]:
        return tuple(mask_of(self.table[t][x] for t in range(self.group.order))
                     for x in range(self.space.size))

    @cached_property
    def stabilizers(self) -> tuple[int, ...]:
        return tuple(mask_of(t for t in range(self.group.order) if self.table[t][x] == x)
                     for x in range(self.space.size))

    def theta(self, t: int) -> SpaceMap:
        return SpaceMap(self.space, self.space, self.table[t])

    def rho(self, x: int) -> SpaceMap:
        return SpaceMap(self.group.space, self.space,
                        tuple(self.table[t][x] for t in range(self.group.order)))


def validate_action(group: TopGenGroup, space: FiniteSpace, table: Sequence[Sequence[int]],
                    name: str = "") -> GenAction:
    problems = action_violations(group, space, table)
    if problems:
        raise problems[0]
    return GenAction(group, space, _freeze(table), name)


def is_trivial(a: GenAction) -> bool:
    """Every translation is the identity map."""
    ident = tuple(range(a.space.size))
    return all(row == ident for row in a.table)


# ---------------------------------------------------------------- orbits

@dataclass(frozen=True)
class OrbitData:
    orbit: int
    stabilizer: int
    regular_point: bool
    stabilizer_is_subgroup: bool
    stabilizer_closed: bool


def is_generalized_subgroup(T: GenGroup, s: int) -> bool:
    elems = members(s)
    if not elems:
        return False
    return (all((s >> T.mul(a, b)) & 1 for a in elems for b in elems)
            and all((s >> T.inv(a)) & 1 and (s >> T.e(a)) & 1 for a in elems))


def orbit_data(a: GenAction, x: int) -> OrbitData:
    if not 0 <= x < a.space.size:
        raise IndexError(f"point {x} out of range")
    stab = a.stabilizers[x]
    return OrbitData(
        orbit=a.orbits[x],
        stabilizer=stab,
        regular_point=stab.bit_count() == 1,
        stabilizer_is_subgroup=is_generalized_subgroup(a.algebra, stab),
        stabilizer_closed=a.group.space.is_closed(stab),
    )


@dataclass(frozen=True)
class PropertyProfile:
    effective: bool
    transitive: bool
    free: bool
    regular: bool
    perfect: bool
    singular_set: int
    transitive_via_orbits: bool
    free_via_identities: bool


def classify_action(a: GenAction) -> PropertyProfile:
    T = a.algebra
    n, m = T.order, a.space.size
    effective = len(set(a.table)) == n
    transitive = all(any(a.act(t, x) == y for t in range(n)) for x in range(m) for y in range(m))
    free = all(sum(a.act(t, x) == x for t in range(n)) == 1 for x in range(m))
    perfect = all(a.act(e, x) == x for e in T.identity_set for x in range(m))
    singular = mask_of(x for x in range(m) if a.stabilizers[x].bit_count() != 1)
    via_orbits = all(o == a.space.full for o in a.orbits)
    via_ids = all(any(a.stabilizers[x] == 1 << T.e(t) for t in range(n)) for x in range(m))
    return PropertyProfile(effective, transitive, free, transitive and free, perfect,
                           singular, via_orbits, via_ids)


# ---------------------------------------------------------------- properness

@dataclass(frozen=True)
class ProperProfile:
    y_t: int
    proper_literal: bool
    proper_via_yt: bool
    degenerate: bool = True


def y_t(a: GenAction, y: int) -> int:
    """``{t : tY meets Y}``."""
    return mask_of(t for t in range(a.group.order) if a.act_set(t, y) & y)


def hat_map(a: GenAction) -> SpaceMap:
    """``(t, x) -> (tx, x)`` from ``T x X`` to ``X x X``."""
    X = a.space
    TX = product_space(a.group.space, X)
    XX = product_space(X, X)
    return SpaceMap(TX, XX, tuple(a.act(t, x) * X.size + x
                                  for t in range(a.group.order) for x in range(X.size)))


def proper_profile(a: GenAction, y: int) -> ProperProfile:
    literal = map_predicates(hat_map(a)).proper
    via = all(is_compact(a.group.space, y_t(a, c))
              for c in subsets(a.space.full) if is_compact(a.space, c))
    return ProperProfile(y_t(a, y), literal, via)


# ---------------------------------------------------------------- induced maps

@dataclass(frozen=True)
class InducedMaps:
    theta: tuple[SpaceMap, ...]
    rho: tuple[SpaceMap, ...]
    all_continuous: bool
    orbits_are_images: bool
    stabilizers_are_fibres: bool


def induced_maps(a: GenAction) -> InducedMaps:
    theta = tuple(a.theta(t) for t in range(a.group.order))
    rho = tuple(a.rho(x) for x in range(a.space.size))
    cont = all(is_continuous(f) for f in theta + rho)
    images = all(rho[x].image(a.group.space.full) == a.orbits[x] for x in range(a.space.size))
    fibres = all(rho[x].preimage(1 << x) == a.stabilizers[x] for x in range(a.space.size))
    return InducedMaps(theta, rho, cont, images, fibres)


@dataclass(frozen=True)
class SemidynamicalSystem:
    maps: tuple[tuple[int, ...], ...]
    complete: bool
    gg_structure: GenGroup | None
    e_compatible: bool | None
    inverse_compatible: bool | None
    note: str = ""


def semidynamical_system(a: GenAction) -> SemidynamicalSystem:
    """Distinct translations, the semidynamical axioms, and the induced group structure."""
    T = a.algebra
    n, m = T.order, a.space.size
    maps = tuple(sorted(set(a.table), key=a.table.index))
    pos = {f: k for k, f in enumerate(maps)}
    compose_ok = all(tuple(a.table[s][a.table[t][x]] for x in range(m)) == a.table[T.mul(s, t)]
                     for s in range(n) for t in range(n))
    fixed_ok = all(any(f[x] == x for f in maps) for x in range(m))
    complete = compose_ok and fixed_ok
    if not classify_action(a).perfect:
        return SemidynamicalSystem(maps, complete, None, None, None, "action is not perfect")
    table = []
    for f in maps:
        row = []
        for g in maps:
            fg = tuple(f[g[x]] for x in range(m))
            if fg not in pos:
                return SemidynamicalSystem(maps, complete, None, None, None,
                                           "composition leaves the set of translations")
            row.append(pos[fg])
        table.append(row)
    try:
        S = validate_generalized_group(table)
    except (NotASemigroup, NotAGeneralizedGroup) as exc:
        return SemidynamicalSystem(maps, complete, None, None, None, f"not a generalized group: {exc}")
    e_ok = all(S.e(pos[a.table[t]]) == pos[a.table[T.e(t)]] for t in range(n))
    inv_ok = all(S.inv(pos[a.table[t]]) == pos[a.table[T.inv(t)]] for t in range(n))
    return SemidynamicalSystem(maps, complete, S, e_ok, inv_ok)


def translations_are_homeomorphisms(a: GenAction) -> bool:
    return all(map_predicates(a.theta(t)).homeomorphism for t in range(a.group.order))


def inverse_translation_identity(a: GenAction) -> bool:
    """``theta_{t^-1} o theta_t`` is the identity for every ``t``."""
    ident = identity_map(a.space).table
    T = a.algebra
    return all(a.theta(t).then(a.theta(T.inv(t))).table == ident for t in range(T.order))
