"""The orbit relation of an action and the quotient space it induces."""

from __future__ import annotations

from dataclasses import dataclass

from .action import GenAction
from .topology import (
    FiniteSpace,
    SpaceMap,
    is_compact,
    is_hausdorff,
    map_predicates,
    members,
    quotient_topology,
    subsets,
)


@dataclass(frozen=True)
class OrbitPartition:
    classes: tuple[int, ...]
    reflexive: bool
    symmetric: bool
    transitive: bool
    closure_taken: bool

    @property
    def is_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive


@dataclass(frozen=True)
class QuotientSpace:
    partition: OrbitPartition
    space: FiniteSpace
    projection: SpaceMap


def orbit_partition(a: GenAction) -> OrbitPartition:
    """Audit ``x ~ y iff tx = y for some t`` and partition by its equivalence closure."""
    m = a.space.size
    reach = a.orbits  # reach[x] = {y : x ~ y}
    reflexive = all((reach[x] >> x) & 1 for x in range(m))
    symmetric = all((reach[y] >> x) & 1 for x in range(m) for y in members(reach[x]))
    transitive = all(reach[y] & ~reach[x] == 0 for x in range(m) for y in members(reach[x]))
    equivalence = reflexive and symmetric and transitive

    # connected components of the graph x -> tx
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(m):
        for y in members(reach[x]):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    comps: dict[int, int] = {}
    for x in range(m):
        comps[find(x)] = comps.get(find(x), 0) | (1 << x)
    classes = tuple(sorted(comps.values(), key=lambda c: c & -c))
    return OrbitPartition(classes, reflexive, symmetric, transitive, not equivalence)


def build_quotient(a: GenAction) -> QuotientSpace:
    part = orbit_partition(a)
    space, proj = quotient_topology(a.space, part.classes)
    return QuotientSpace(part, space, proj)


def saturation_failures(a: GenAction, q: QuotientSpace | None = None) -> list[int]:
    """Sets ``Y`` for which ``pi^-1(pi(Y)) != T.Y``."""
    q = q or build_quotient(a)
    pi = q.projection
    return [y for y in subsets(a.space.full) if pi.preimage(pi.image(y)) != a.translate(y)]


@dataclass(frozen=True)
class ProjectionProfile:
    open_map: bool
    closed_map: bool
    proper: bool
    proper_sufficient: bool
    quotient_hausdorff: bool
    compact_iff: bool
    locally_compact_iff: bool
    degenerate_parts: tuple[str, ...] = ("proper", "compact_iff", "locally_compact_iff")


def projection_profile(q: QuotientSpace) -> ProjectionProfile:
    preds = map_predicates(q.projection)
    X, Q = q.projection.dom, q.space
    # every finite space is compact and locally compact
    compact_iff = is_compact(X, X.full) == is_compact(Q, Q.full)
    return ProjectionProfile(
        open_map=preds.open_map,
        closed_map=preds.closed_map,
        proper=preds.proper,
        proper_sufficient=preds.proper_sufficient,
        quotient_hausdorff=is_hausdorff(Q),
        compact_iff=compact_iff,
        locally_compact_iff=True,
    )
