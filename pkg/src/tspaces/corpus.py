"""Deterministic instance generators and the named example instances."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .action import GenAction, action_continuity_witness, validate_action
from .algebra import (
    GenGroup,
    canonical_form,
    cyclic,
    enumerate_generalized_groups,
    klein_four,
    left_zero,
    left_zero_product,
    rees_matrix,
    right_zero,
    right_zero_product,
    validate_generalized_group,
)
from .tgg import TopGenGroup, validate_tgg
from .topology import FiniteSpace, SpaceMap, discrete, full_mask, is_continuous, mask_of, members

# ---------------------------------------------------------------- groups


@lru_cache(maxsize=None)
def _known_names() -> dict:
    named = [(f"C{n}", cyclic(n)) for n in range(1, 5)]
    named += [(f"LZ{n}", left_zero(n)) for n in range(2, 5)]
    named += [(f"RZ{n}", right_zero(n)) for n in range(2, 5)]
    named += [("V4", klein_four()),
              ("LZP(C2,2)", left_zero_product(cyclic(2), 2)),
              ("RZP(C2,2)", right_zero_product(cyclic(2), 2)),
              ("RB(2,2)", rees_matrix(cyclic(1), 2, 2, [[0, 0], [0, 0]])[0])]
    return {canonical_form(g.table)[0]: name for name, g in named}


def group_name(g: GenGroup) -> str:
    if g.order <= 4:
        return _known_names().get(canonical_form(g.table)[0], f"G{g.order}")
    return f"G{g.order}"


def strict_groups(max_order: int) -> list[TopGenGroup]:
    """Every generalized group up to ``max_order`` with the discrete topology."""
    return [validate_tgg(g, name=group_name(g)) for g in enumerate_generalized_groups(max_order)]


# ---------------------------------------------------------------- topologies

def _relabel_nbhd(nbhd: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(nbhd)
    for p, u in enumerate(nbhd):
        out[perm[p]] = mask_of(perm[q] for q in members(u))
    return tuple(out)


@lru_cache(maxsize=None)
def all_topologies(n: int) -> tuple[FiniteSpace, ...]:
    """Every topology on ``n`` labelled points, ordered by neighbourhood vector."""
    if n > 5:
        raise ValueError("topology enumeration supports at most 5 points")
    full = full_mask(n)
    choices = [[u for u in range(full + 1) if (u >> p) & 1] for p in range(n)]
    out = []
    for nb in itertools.product(*choices):
        if all(nb[q] & ~nb[p] == 0 for p in range(n) for q in members(nb[p])):
            out.append(FiniteSpace(nb))
    return tuple(out)


@lru_cache(maxsize=None)
def topologies_up_to_homeomorphism(n: int) -> tuple[FiniteSpace, ...]:
    """One representative per homeomorphism class; the discrete space first."""
    reps = set()
    perms = list(itertools.permutations(range(n)))
    for X in all_topologies(n):
        reps.add(min(_relabel_nbhd(X.nbhd, p) for p in perms))
    spaces = [FiniteSpace(nb) for nb in reps]
    return tuple(sorted(spaces, key=lambda X: (not X.is_discrete, X.nbhd)))


# ---------------------------------------------------------------- actions

def action_tables(T: GenGroup, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All tables satisfying both action axioms on ``n`` points (topology ignored).

    Backtracks over translations ``theta_t`` in index order; a composition law
    ``theta_s o theta_u = theta_{su}`` is checked as soon as all three are fixed.
    """
    order = T.order
    maps = list(itertools.product(range(n), repeat=n))
    chosen: list[tuple[int, ...] | None] = [None] * order
    idem = sorted(T.identity_set)

    def ok(k: int) -> bool:
        for s in range(k + 1):
            fs = chosen[s]
            for u in range(k + 1):
                if s != k and u != k and T.mul(s, u) != k:
                    continue
                su = T.mul(s, u)
                if su > k:
                    continue
                fu, fsu = chosen[u], chosen[su]
                if any(fs[fu[x]] != fsu[x] for x in range(n)):
                    return False
        return True

    def go(k: int):
        if k == order:
            if all(any(chosen[e][x] == x for e in idem) for x in range(n)):
                yield tuple(chosen)  # type: ignore[arg-type]
            return
        for f in maps:
            chosen[k] = f
            if ok(k):
                yield from go(k + 1)
        chosen[k] = None

    yield from go(0)


def actions(group: TopGenGroup, X: FiniteSpace) -> Iterator[GenAction]:
    """Every generalized action of ``group`` on ``X``, in table order."""
    for table in action_tables(group.algebra, X.size):
        if action_continuity_witness(group, X, table) is None:
            yield GenAction(group, X, table)


def endomaps(X: FiniteSpace) -> list[SpaceMap]:
    """Continuous self-maps: bijections first (identity leads), then the rest."""
    n = X.size
    out = []
    for table in itertools.product(range(n), repeat=n):
        f = SpaceMap(X, X, table)
        if is_continuous(f):
            out.append(f)
    return sorted(out, key=lambda f: (not f.is_bijective, f.table))


def maps_between(X: FiniteSpace, Y: FiniteSpace) -> list[SpaceMap]:
    out = []
    for table in itertools.product(range(Y.size), repeat=X.size):
        f = SpaceMap(X, Y, table)
        if is_continuous(f):
            out.append(f)
    return out


# ---------------------------------------------------------------- named instances

SIGN_POINTS = ("-1", "0", "1")


def sign_group() -> TopGenGroup:
    """``{+1, -1}`` with ``s.t = s|t|``, i.e. the left-zero band on two elements."""
    signs = (1, -1)
    table = [[signs.index(s * abs(t)) for t in signs] for s in signs]
    return validate_tgg(validate_generalized_group(table, ["+1", "-1"]), name="Sign")


def sign_space() -> FiniteSpace:
    return discrete(3, SIGN_POINTS)


def _sign_table(rule) -> tuple[tuple[int, ...], ...]:
    values = (-1, 0, 1)
    return tuple(tuple(values.index(rule(t, x)) for x in values) for t in (1, -1))


def sign_action_table() -> tuple[tuple[int, ...], ...]:
    """``lambda(t, x) = t|x|``."""
    return _sign_table(lambda t, x: t * abs(x))


def sign_theta_table() -> tuple[tuple[int, ...], ...]:
    """``theta(t, x) = tx``, which is not a generalized action."""
    return _sign_table(lambda t, x: t * x)


def sign_instance() -> GenAction:
    return validate_action(sign_group(), sign_space(), sign_action_table(), "Sign")


def negation_map() -> SpaceMap:
    X = sign_space()
    return SpaceMap(X, X, (2, 1, 0))


def self_action(group: TopGenGroup, name: str = "") -> GenAction:
    """Left multiplication of ``group`` on its own carrier."""
    X = group.space
    return validate_action(group, X, group.algebra.table, name or f"{group.name}.self")


def e_self_action(group: TopGenGroup, name: str = "") -> GenAction:
    """``s . t = e(s) t`` on the carrier."""
    T = group.algebra
    table = [[T.mul(T.e(s), t) for t in range(T.order)] for s in range(T.order)]
    return validate_action(group, group.space, table, name or f"{group.name}.e_self")


def left_translation_lz2() -> GenAction:
    """LZ2 on a discrete two-point space by ``t . x = t``."""
    T = validate_tgg(left_zero(2, ["a", "b"]), name="LZ2")
    X = discrete(2, ["a", "b"])
    return validate_action(T, X, [[0, 0], [1, 1]], "LZ2.translate")


def plane_analog() -> GenAction:
    """Finite stand-in for the punctured plane acting on the plane.

    ``X = {z} + RZP(C2,2)``, opens are all subsets avoiding ``z`` plus ``X``;
    the group acts by multiplication on the copy of itself and fixes ``z``.
    """
    T = validate_tgg(right_zero_product(cyclic(2), 2), name="RZP(C2,2)")
    n = T.order
    names = ("z",) + T.names
    full = full_mask(n + 1)
    X = FiniteSpace((full,) + tuple(1 << (p + 1) for p in range(n)), names)
    table = [[0] + [1 + T.algebra.mul(t, p) for p in range(n)] for t in range(n)]
    return validate_action(T, X, table, "PlaneAnalog")
