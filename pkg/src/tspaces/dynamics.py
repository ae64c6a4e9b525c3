"""Transitivity of self-maps on T-spaces, equivariance, and conjugacy.

Quantifiers over nonempty open sets are reduced to the minimal basis: every
nonempty open set contains a minimal neighbourhood and the conditions checked
here are monotone in both sets.  Searches over ``n`` follow the set sequence
``S_1 = f(U), S_{k+1} = f(S_k)`` until a state repeats, so verdicts are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .action import GenAction, classify_action
from .algebra import CapabilityError, cyclic, rees_matrix
from .corpus import actions, endomaps, strict_groups, topologies_up_to_homeomorphism
from .quotient import orbit_partition
from .topology import FiniteSpace, SpaceMap, is_continuous, map_predicates, members


class NotAnEndomap(ValueError):
    pass


def endomap(X: FiniteSpace, table) -> SpaceMap:
    """A continuous self-map of ``X``; raises if continuity fails."""
    f = SpaceMap(X, X, tuple(table))
    if not is_continuous(f):
        raise NotAnEndomap("self-map is not continuous")
    return f


@dataclass(frozen=True)
class TransitivityVerdict:
    result: bool
    witnesses: tuple[tuple[tuple[int, int], tuple[int, int | None]], ...] = ()
    refutation: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.result


def set_iterates(f: SpaceMap, u: int) -> list[int]:
    """``[f(U), f^2(U), ...]`` up to the first repeated state."""
    seq, seen = [], set()
    s = f.image(u)
    while s not in seen:
        seen.add(s)
        seq.append(s)
        s = f.image(s)
    return seq


def _verdict(f: SpaceMap, hit) -> TransitivityVerdict:
    basis = f.dom.basis
    witnesses = []
    for u in basis:
        seq = set_iterates(f, u)
        for v in basis:
            found = None
            for n, s in enumerate(seq, start=1):
                t = hit(s, v)
                if t is not False:
                    found = (n, t)
                    break
            if found is None:
                return TransitivityVerdict(False, tuple(witnesses), (u, v, len(seq)))
            witnesses.append(((u, v), found))
    return TransitivityVerdict(True, tuple(witnesses))


def is_transitive(f: SpaceMap) -> TransitivityVerdict:
    return _verdict(f, lambda s, v: None if s & v else False)


def is_T_transitive(f: SpaceMap, a: GenAction) -> TransitivityVerdict:
    if f.dom.nbhd != a.space.nbhd:
        raise ValueError("map and action live on different spaces")

    def hit(s, v):
        for t in range(a.group.order):
            if a.act_set(t, s) & v:
                return t
        return False

    return _verdict(f, hit)


def point_iterates(f: SpaceMap, x: int) -> list[int]:
    """``[f(x), f^2(x), ...]`` up to the first repeated point."""
    seq, seen = [], set()
    y = f(x)
    while y not in seen:
        seen.add(y)
        seq.append(y)
        y = f(y)
    return seq


def dense_T_orbit(f: SpaceMap, a: GenAction) -> int | None:
    """Least ``x`` whose set ``{t f^n(x) : n >= 1}`` is dense, if any."""
    X = a.space
    for x in range(X.size):
        reached = 0
        for y in point_iterates(f, x):
            reached |= a.orbits[y]
        if X.closure(reached) == X.full:
            return x
    return None


@dataclass(frozen=True)
class EquivarianceProfile:
    equivariant: bool
    pseudoequivariant: bool
    stabilizer_inclusion: bool


def _same_group(a: GenAction, b: GenAction) -> None:
    if a.algebra.table != b.algebra.table:
        raise ValueError("actions are by different generalized groups")


def equivariance_profile(f: SpaceMap, a: GenAction, b: GenAction) -> EquivarianceProfile:
    _same_group(a, b)
    n = a.group.order
    X = a.space
    equi = all(f(a.act(t, x)) == b.act(t, f(x)) for t in range(n) for x in range(X.size))
    pseudo = all(f.image(a.orbits[x]) == b.orbits[f(x)] for x in range(X.size))
    incl = all(a.stabilizers[x] & ~b.stabilizers[f(x)] == 0 for x in range(X.size))
    return EquivarianceProfile(equi, pseudo, incl)


def is_pseudoequivariant(f: SpaceMap, a: GenAction, b: GenAction) -> bool:
    return all(f.image(a.orbits[x]) == b.orbits[f(x)] for x in range(a.space.size))


@dataclass(frozen=True)
class ConjugacyVerdict:
    result: bool
    homeomorphism: bool
    pseudoequivariant: bool
    commutes: bool

    def __bool__(self) -> bool:
        return self.result


def check_T_conjugacy(f: SpaceMap, g: SpaceMap, h: SpaceMap,
                      a: GenAction, b: GenAction) -> ConjugacyVerdict:
    """Is ``h`` a pseudoequivariant homeomorphism with ``h o f = g o h``?"""
    _same_group(a, b)
    homeo = map_predicates(h).homeomorphism
    pseudo = is_pseudoequivariant(h, a, b)
    commutes = all(h(f(x)) == g(h(x)) for x in range(f.dom.size))
    return ConjugacyVerdict(homeo and pseudo and commutes, homeo, pseudo, commutes)


# ---------------------------------------------------------------- witness search

GOALS = (
    "t_transitive_not_transitive",
    "pseudo_not_equivariant",
    "orbit_relation_not_symmetric",
    "eq1_fails_for_rees",
    "dense_orbit_and_T_transitive",
)


@dataclass(frozen=True)
class SearchBounds:
    max_group_order: int = 2
    max_space_size: int = 2
    max_topologies: int | None = None
    perfect_only: bool = False


@dataclass
class SearchResult:
    goal: str
    found: bool
    bundle: dict = field(default_factory=dict)
    examined: int = 0


def _action_corpus(bounds: SearchBounds) -> Iterator[GenAction]:
    for T in strict_groups(bounds.max_group_order):
        for n in range(1, bounds.max_space_size + 1):
            spaces = topologies_up_to_homeomorphism(n)
            if bounds.max_topologies is not None:
                spaces = spaces[:bounds.max_topologies]
            for X in spaces:
                for a in actions(T, X):
                    if bounds.perfect_only and not classify_action(a).perfect:
                        continue
                    yield a


def search_witness(goal: str, bounds: SearchBounds | None = None) -> SearchResult:
    """First witness in canonical order (groups, then spaces, actions, maps)."""
    key = goal.replace("-", "_").lower()
    matches = [g for g in GOALS if g.lower() == key]
    if not matches:
        raise ValueError(f"unknown goal {goal!r}")
    goal = matches[0]
    bounds = bounds or SearchBounds()
    if bounds.max_group_order > 4 or bounds.max_space_size > 4:
        raise CapabilityError("search supports |T| <= 4 and |X| <= 4")
    examined = 0

    if goal == "eq1_fails_for_rees":
        G = cyclic(2)
        for flat in itertools.product(range(2), repeat=4):
            examined += 1
            P = [flat[0:2], flat[2:4]]
            gg, ok = rees_matrix(G, 2, 2, P)
            if not ok:
                return SearchResult(goal, True, {"group": gg, "sandwich": P,
                                                 "pair": gg.eq1_counterexample()}, examined)
        return SearchResult(goal, False, {}, examined)

    for a in _action_corpus(bounds):
        if goal == "orbit_relation_not_symmetric":
            examined += 1
            if not orbit_partition(a).symmetric:
                return SearchResult(goal, True, {"action": a}, examined)
            continue
        if goal == "pseudo_not_equivariant":
            for f in endomaps(a.space):
                examined += 1
                prof = equivariance_profile(f, a, a)
                if prof.pseudoequivariant and not prof.equivariant:
                    return SearchResult(goal, True, {"action": a, "map": f}, examined)
            continue
        perfect = classify_action(a).perfect
        for f in endomaps(a.space):
            examined += 1
            if goal == "t_transitive_not_transitive":
                if is_T_transitive(f, a) and not is_transitive(f):
                    return SearchResult(goal, True, {"action": a, "map": f}, examined)
            elif goal == "dense_orbit_and_T_transitive":
                onto = f.image(a.space.full) == a.space.full
                if (perfect and onto and is_pseudoequivariant(f, a, a)
                        and dense_T_orbit(f, a) is not None and is_T_transitive(f, a)):
                    return SearchResult(goal, True, {"action": a, "map": f,
                                                     "point": dense_T_orbit(f, a)}, examined)
    return SearchResult(goal, False, {}, examined)
