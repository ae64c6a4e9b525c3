"""Finite topological spaces over bitmask-encoded point sets.

A finite topology is determined by the minimal open neighbourhood of each
point, so that is what :class:`FiniteSpace` stores.  A set ``S`` is open iff
it contains the minimal neighbourhood of each of its points.  The full family
of open sets is produced on demand by :meth:`FiniteSpace.opens`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_LISTED_OPENS = 1 << 16


class NotATopology(ValueError):
    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------- bitmask helpers

def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


# ---------------------------------------------------------------- spaces

@dataclass(frozen=True)
class FiniteSpace:
    nbhd: tuple[int, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        nb = tuple(int(v) for v in self.nbhd)
        n = len(nb)
        if n == 0:
            raise ValueError("a space needs at least one point")
        full = full_mask(n)
        for p, u in enumerate(nb):
            if not (u >> p) & 1 or u & ~full:
                raise ValueError(f"invalid neighbourhood for point {p}")
            for q in members(u):
                if nb[q] & ~u:
                    raise ValueError(f"neighbourhoods of {p} and {q} are not nested")
        names = tuple(self.names) if self.names else tuple(str(i) for i in range(n))
        if len(names) != n or len(set(names)) != n:
            raise ValueError("point names must be distinct and match the size")
        object.__setattr__(self, "nbhd", nb)
        object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return len(self.nbhd)

    @property
    def full(self) -> int:
        return full_mask(self.size)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def is_open(self, s: int) -> bool:
        nb = self.nbhd
        return all(nb[p] & ~s == 0 for p in members(s))

    def is_closed(self, s: int) -> bool:
        return self.is_open(self.full & ~s)

    def closure(self, s: int) -> int:
        return mask_of(p for p, u in enumerate(self.nbhd) if u & s)

    def interior(self, s: int) -> int:
        return mask_of(p for p, u in enumerate(self.nbhd) if u & ~s == 0)

    def open_hull(self, s: int) -> int:
        """Smallest open set containing ``s``."""
        out = 0
        for p in members(s):
            out |= self.nbhd[p]
        return out

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """Distinct minimal neighbourhoods, sorted."""
        return tuple(sorted(set(self.nbhd)))

    def opens(self) -> tuple[int, ...]:
        """Every open set, sorted.  Exponential; refused for large topologies."""
        family = {0}
        for b in self.basis:
            family |= {o | b for o in family}
            if len(family) > MAX_LISTED_OPENS:
                raise ValueError("too many open sets to list")
        return tuple(sorted(family))

    @property
    def is_discrete(self) -> bool:
        return all(u == 1 << p for p, u in enumerate(self.nbhd))

    @property
    def is_indiscrete(self) -> bool:
        return all(u == self.full for u in self.nbhd)

    def renamed(self, names: Sequence[str]) -> FiniteSpace:
        return FiniteSpace(self.nbhd, tuple(names))


def discrete(n: int, names: Sequence[str] = ()) -> FiniteSpace:
    return FiniteSpace(tuple(1 << p for p in range(n)), tuple(names))


def indiscrete(n: int, names: Sequence[str] = ()) -> FiniteSpace:
    return FiniteSpace((full_mask(n),) * n, tuple(names))


def from_subbasis(n: int, sets: Iterable[int], names: Sequence[str] = ()) -> FiniteSpace:
    """Coarsest topology in which every given set is open."""
    sets = list(sets)
    full = full_mask(n)
    for s in sets:
        if s & ~full:
            raise ValueError("subbasis set outside the point universe")
    nb = []
    for p in range(n):
        u = full
        for s in sets:
            if (s >> p) & 1:
                u &= s
        nb.append(u)
    return FiniteSpace(tuple(nb), tuple(names))


def from_opens(n: int, opens: Iterable[int], names: Sequence[str] = ()) -> FiniteSpace:
    """Accept an explicit family only if it already is a topology."""
    family = set(opens)
    full = full_mask(n)
    for s in sorted(family):
        if s & ~full:
            raise NotATopology("open set outside the point universe", (s,))
    ordered = sorted(family)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in family:
                raise NotATopology(f"union of {members(a)} and {members(b)} is missing", (a, b))
            if a & b not in family:
                raise NotATopology(f"intersection of {members(a)} and {members(b)} is missing",
                                   (a, b))
    if 0 not in family:
        raise NotATopology("the empty set is missing")
    if full not in family:
        raise NotATopology("the full set is missing", (full,))
    return from_subbasis(n, family, names)


def build_topology(points: Sequence[str] | int, kind: str,
                   sets: Iterable[Iterable[int]] = ()) -> FiniteSpace:
    """``kind`` is one of ``explicit``, ``subbasis``, ``discrete``, ``indiscrete``.

    ``sets`` holds point indices (or names when ``points`` is a name list).
    """
    if isinstance(points, int):
        n, names = points, ()
    else:
        names = tuple(points)
        n = len(names)
    lookup = {name: i for i, name in enumerate(names)}

    def to_mask(s):
        return mask_of(lookup[p] if isinstance(p, str) else p for p in s)

    masks = [to_mask(s) for s in sets]
    if kind == "explicit":
        return from_opens(n, masks, names)
    if kind == "subbasis":
        return from_subbasis(n, masks, names)
    if kind == "discrete":
        return discrete(n, names)
    if kind == "indiscrete":
        return indiscrete(n, names)
    raise ValueError(f"unknown topology kind {kind!r}")


@dataclass(frozen=True)
class SpacePredicates:
    hausdorff: bool
    discrete: bool
    compact: bool = True
    compact_degenerate: bool = True


def is_hausdorff(X: FiniteSpace) -> bool:
    # minimal neighbourhoods are the smallest candidates for separation
    nb = X.nbhd
    return all(nb[p] & nb[q] == 0 for p in range(X.size) for q in range(p + 1, X.size))


def space_predicates(X: FiniteSpace) -> SpacePredicates:
    return SpacePredicates(hausdorff=is_hausdorff(X), discrete=X.is_discrete)


def is_compact(X: FiniteSpace, s: int) -> bool:
    """Every subset of a finite space is compact: a cover has finitely many members."""
    return True


@dataclass(frozen=True)
class SetOps:
    closure: int
    interior: int
    is_open: bool
    is_closed: bool


def set_ops(X: FiniteSpace, s: int) -> SetOps:
    if s & ~X.full:
        raise ValueError("set outside the point universe")
    return SetOps(X.closure(s), X.interior(s), X.is_open(s), X.is_closed(s))


def product_space(A: FiniteSpace, B: FiniteSpace) -> FiniteSpace:
    """Product topology; point ``(a, b)`` has index ``a*|B| + b``."""
    nb_b = B.size
    nb = []
    names = []
    for a in range(A.size):
        for b in range(nb_b):
            u = 0
            for a2 in members(A.nbhd[a]):
                u |= B.nbhd[b] << (a2 * nb_b)
            nb.append(u)
            names.append(f"({A.names[a]},{B.names[b]})")
    return FiniteSpace(tuple(nb), tuple(names))


# ---------------------------------------------------------------- maps

@dataclass(frozen=True)
class SpaceMap:
    dom: FiniteSpace
    cod: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        if len(table) != self.dom.size:
            raise ValueError("map must be total on its domain")
        if any(not 0 <= v < self.cod.size for v in table):
            raise ValueError("map value outside the codomain")
        object.__setattr__(self, "table", table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, s: int) -> int:
        out = 0
        for p in members(s):
            out |= 1 << self.table[p]
        return out

    def preimage(self, s: int) -> int:
        return mask_of(p for p, v in enumerate(self.table) if (s >> v) & 1)

    def then(self, other: SpaceMap) -> SpaceMap:
        """``other o self``."""
        return SpaceMap(self.dom, other.cod, tuple(other.table[v] for v in self.table))

    @property
    def is_bijective(self) -> bool:
        return self.dom.size == self.cod.size and len(set(self.table)) == self.dom.size

    def inverse(self) -> SpaceMap:
        if not self.is_bijective:
            raise ValueError("map is not bijective")
        inv = [0] * self.dom.size
        for p, v in enumerate(self.table):
            inv[v] = p
        return SpaceMap(self.cod, self.dom, tuple(inv))


def identity_map(X: FiniteSpace) -> SpaceMap:
    return SpaceMap(X, X, tuple(range(X.size)))


def is_continuous(f: SpaceMap) -> bool:
    dom, cod = f.dom, f.cod
    return all(f.image(dom.nbhd[x]) & ~cod.nbhd[f.table[x]] == 0 for x in range(dom.size))


def is_open_map(f: SpaceMap) -> bool:
    # images preserve unions, so basic opens suffice
    return all(f.cod.is_open(f.image(u)) for u in f.dom.basis)


def is_closed_map(f: SpaceMap) -> bool:
    # every closed set is a union of point closures
    dom = f.dom
    return all(f.cod.is_closed(f.image(dom.closure(1 << x))) for x in range(dom.size))


@dataclass(frozen=True)
class MapPredicates:
    continuous: bool
    open_map: bool
    closed_map: bool
    proper: bool
    proper_degenerate: bool
    proper_sufficient: bool
    homeomorphism: bool


def is_proper_literal(f: SpaceMap) -> bool:
    """Preimage of every compact subset is compact; vacuous on finite carriers."""
    targets = subsets(f.cod.full) if f.cod.size <= 12 else (f.cod.full,)
    return all(is_compact(f.dom, f.preimage(a)) for a in targets if is_compact(f.cod, a))


def map_predicates(f: SpaceMap) -> MapPredicates:
    cont = is_continuous(f)
    op = is_open_map(f)
    cl = is_closed_map(f)
    # fibres of a map out of a finite space are finite, hence compact
    sufficient = cl
    return MapPredicates(
        continuous=cont,
        open_map=op,
        closed_map=cl,
        proper=is_proper_literal(f),
        proper_degenerate=True,
        proper_sufficient=sufficient,
        homeomorphism=f.is_bijective and cont and op,
    )


# ---------------------------------------------------------------- quotients

def _normalize_partition(n: int, partition: Iterable[Iterable[int] | int]) -> list[int]:
    classes = []
    for c in partition:
        classes.append(c if isinstance(c, int) else mask_of(c))
    seen = 0
    for c in classes:
        if c == 0 or c & seen:
            raise ValueError("partition classes must be nonempty and disjoint")
        seen |= c
    if seen != full_mask(n):
        raise ValueError("partition must cover the space")
    return sorted(classes, key=lambda c: (c & -c))


def quotient_topology(X: FiniteSpace, partition: Iterable[Iterable[int] | int],
                      names: Sequence[str] = ()) -> tuple[FiniteSpace, SpaceMap]:
    """Quotient by a partition; classes are ordered (and named) by least member."""
    classes = _normalize_partition(X.size, partition)
    cls_of = [0] * X.size
    for k, c in enumerate(classes):
        for p in members(c):
            cls_of[p] = k

    def saturate(s: int) -> int:
        out = 0
        for k in {cls_of[p] for p in members(s)}:
            out |= classes[k]
        return out

    nb = []
    for c in classes:
        s = c
        while True:
            nxt = saturate(X.open_hull(s))
            if nxt == s:
                break
            s = nxt
        nb.append(mask_of({cls_of[p] for p in members(s)}))
    if not names:
        names = [f"[{X.names[members(c)[0]]}]" for c in classes]
    Q = FiniteSpace(tuple(nb), tuple(names))
    return Q, SpaceMap(X, Q, tuple(cls_of))
