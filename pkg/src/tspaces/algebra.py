"""Finite semigroups and generalized groups given by Cayley tables.

Elements are dense integer indices ``0..n-1``; names only matter for display
and for the DSL.  A table entry ``table[s][t]`` is the index of ``s*t``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

Table = tuple[tuple[int, ...], ...]

MAX_ENUMERATION_ORDER = 4


class StructureError(ValueError):
    """Ragged table, out-of-range entry or inconsistent construction parameters."""


class CapabilityError(ValueError):
    """Requested bounds are beyond what the exhaustive routines support."""


class NotASemigroup(ValueError):
    def __init__(self, triple: tuple[int, int, int]):
        super().__init__(f"associativity fails at {triple}")
        self.triple = triple


class NotAGeneralizedGroup(ValueError):
    reason = "generalized-group axiom fails"

    def __init__(self, element: int, name: str | None = None):
        label = name if name is not None else element
        super().__init__(f"{self.reason} for element {label}")
        self.element = element


class NoIdentityFor(NotAGeneralizedGroup):
    reason = "no local identity"


class NonUniqueIdentityFor(NotAGeneralizedGroup):
    reason = "more than one local identity"


class NoInverseFor(NotAGeneralizedGroup):
    reason = "no inverse"


class NonUniqueInverseFor(NotAGeneralizedGroup):
    reason = "more than one inverse"


def _freeze(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class CayleyTable:
    table: Table
    names: tuple[str, ...] = ()

    def __post_init__(self):
        table = _freeze(self.table)
        n = len(table)
        if n == 0:
            raise StructureError("empty table")
        for row in table:
            if len(row) != n:
                raise StructureError(f"ragged table: row of length {len(row)} in order {n}")
            for v in row:
                if not 0 <= v < n:
                    raise StructureError(f"entry {v} out of range for order {n}")
        names = tuple(self.names) if self.names else tuple(str(i) for i in range(n))
        if len(names) != n or len(set(names)) != n:
            raise StructureError("element names must be distinct and match the order")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", names)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)


def validate_semigroup(table: CayleyTable | Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Return ``None`` when associative, else the lexicographically least bad triple."""
    if not isinstance(table, CayleyTable):
        table = CayleyTable(table)
    m = table.table
    n = table.order
    for a in range(n):
        ra = m[a]
        for b in range(n):
            ab = ra[b]
            rb = m[b]
            rab = m[ab]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class GenGroup:
    """A validated generalized group (completely simple semigroup)."""

    carrier: CayleyTable
    e_map: tuple[int, ...]
    inv_map: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.carrier.order

    @property
    def names(self) -> tuple[str, ...]:
        return self.carrier.names

    @property
    def table(self) -> Table:
        return self.carrier.table

    def mul(self, a: int, b: int) -> int:
        return self.carrier.table[a][b]

    def prod(self, *elements: int) -> int:
        acc = elements[0]
        for x in elements[1:]:
            acc = self.carrier.table[acc][x]
        return acc

    def e(self, t: int) -> int:
        return self.e_map[t]

    def inv(self, t: int) -> int:
        return self.inv_map[t]

    def index(self, name: str) -> int:
        return self.names.index(name)

    @cached_property
    def identity_set(self) -> frozenset[int]:
        return frozenset(self.e_map)

    def eq1_counterexample(self) -> tuple[int, int] | None:
        """Least pair with e(s*t) != e(s)*e(t)."""
        for s in range(self.order):
            for t in range(self.order):
                if self.e(self.mul(s, t)) != self.mul(self.e(s), self.e(t)):
                    return (s, t)
        return None

    def eq2_counterexample(self) -> tuple[int, int] | None:
        """Least pair with e(s)*e(t)*e(s) != e(s)."""
        for s in range(self.order):
            for t in range(self.order):
                es = self.e(s)
                if self.prod(es, self.e(t), es) != es:
                    return (s, t)
        return None

    @property
    def satisfies_eq1(self) -> bool:
        return self.eq1_counterexample() is None

    def is_group(self) -> bool:
        return len(self.identity_set) == 1

    def renamed(self, names: Sequence[str]) -> GenGroup:
        return GenGroup(CayleyTable(self.table, tuple(names)), self.e_map, self.inv_map)


def validate_generalized_group(table: CayleyTable | Sequence[Sequence[int]],
                               names: Sequence[str] = ()) -> GenGroup:
    """Check the axioms and return the structure with its identity and inverse maps.

    Existence of identities is checked for every element before uniqueness, and
    likewise for inverses, so the reported element is the first failure of the
    first failing axiom.
    """
    if not isinstance(table, CayleyTable):
        table = CayleyTable(table, tuple(names))
    bad = validate_semigroup(table)
    if bad is not None:
        raise NotASemigroup(bad)
    n = table.order
    m = table.table
    labels = table.names

    identities = [[x for x in range(n) if m[t][x] == t and m[x][t] == t] for t in range(n)]
    for t in range(n):
        if not identities[t]:
            raise NoIdentityFor(t, labels[t])
    for t in range(n):
        if len(identities[t]) > 1:
            raise NonUniqueIdentityFor(t, labels[t])
    e_map = tuple(ids[0] for ids in identities)

    inverses = [[s for s in range(n) if m[s][t] == e_map[t] and m[t][s] == e_map[t]]
                for t in range(n)]
    for t in range(n):
        if not inverses[t]:
            raise NoInverseFor(t, labels[t])
    for t in range(n):
        if len(inverses[t]) > 1:
            raise NonUniqueInverseFor(t, labels[t])
    inv_map = tuple(inv[0] for inv in inverses)
    return GenGroup(table, e_map, inv_map)


def check_homomorphism(f: Sequence[int], src: GenGroup, dst: GenGroup) -> tuple[int, int] | None:
    """Return ``None`` if ``f(s*t) == f(s)*f(t)`` everywhere, else the least bad pair."""
    if len(f) != src.order:
        raise StructureError("map must be total on the source carrier")
    for v in f:
        if not 0 <= v < dst.order:
            raise StructureError(f"codomain index {v} out of range")
    for s in range(src.order):
        for t in range(src.order):
            if f[src.mul(s, t)] != dst.mul(f[s], f[t]):
                return (s, t)
    return None


# ---------------------------------------------------------------- constructions

def group(table: Sequence[Sequence[int]], names: Sequence[str] = ()) -> GenGroup:
    g = validate_generalized_group(table, names)
    if not g.is_group():
        raise StructureError("table is a generalized group but not a group")
    return g


def cyclic(n: int) -> GenGroup:
    return group([[(a + b) % n for b in range(n)] for a in range(n)])


def klein_four() -> GenGroup:
    return group([[a ^ b for b in range(4)] for a in range(4)], ["e", "a", "b", "c"])


def left_zero(n: int, names: Sequence[str] = ()) -> GenGroup:
    return validate_generalized_group([[a] * n for a in range(n)], names)


def right_zero(n: int, names: Sequence[str] = ()) -> GenGroup:
    return validate_generalized_group([list(range(n)) for _ in range(n)], names)


def _letters(m: int) -> list[str]:
    return [chr(ord("a") + k) for k in range(m)]


def right_zero_product(G: GenGroup, m: int) -> GenGroup:
    """Pairs ``(g, l)`` with ``(g, l)(h, k) = (gh, k)``; index ``g*m + l``."""
    if not G.is_group():
        raise StructureError("right_zero_product needs a group")
    if m < 1:
        raise StructureError("m must be positive")
    n = G.order
    idx = lambda g, l: g * m + l  # noqa: E731
    table = [[idx(G.mul(g, h), k) for h in range(n) for k in range(m)]
             for g in range(n) for l in range(m)]
    names = [f"({G.names[g]},{lam})" for g in range(n) for lam in _letters(m)]
    return validate_generalized_group(table, names)


def left_zero_product(G: GenGroup, m: int) -> GenGroup:
    """Pairs ``(g, l)`` with ``(g, l)(h, k) = (gh, l)``; index ``g*m + l``."""
    if not G.is_group():
        raise StructureError("left_zero_product needs a group")
    if m < 1:
        raise StructureError("m must be positive")
    n = G.order
    table = [[G.mul(g, h) * m + l for h in range(n) for k in range(m)]
             for g in range(n) for l in range(m)]
    names = [f"({G.names[g]},{lam})" for g in range(n) for lam in _letters(m)]
    return validate_generalized_group(table, names)


def rees_matrix(G: GenGroup, n_i: int, n_l: int,
                sandwich: Sequence[Sequence[int]]) -> tuple[GenGroup, bool]:
    """Rees matrix semigroup over ``G`` with ``n_l x n_i`` sandwich matrix.

    ``(i, g, l)(j, h, k) = (i, g * P[l][j] * h, k)``; index ``(i*|G| + g)*n_l + l``.
    Returns the generalized group and whether it satisfies ``e(st) = e(s)e(t)``.
    """
    if not G.is_group():
        raise StructureError("rees_matrix needs a group")
    if n_i < 1 or n_l < 1:
        raise StructureError("index sets must be nonempty")
    P = _freeze(sandwich)
    if len(P) != n_l or any(len(row) != n_i for row in P):
        raise StructureError(f"sandwich matrix must be {n_l}x{n_i}")
    if any(not 0 <= p < G.order for row in P for p in row):
        raise StructureError("sandwich entry outside the group")
    n = G.order
    elems = [(i, g, l) for i in range(n_i) for g in range(n) for l in range(n_l)]
    index = {x: k for k, x in enumerate(elems)}
    table = [[index[(i, G.prod(g, P[l][j], h), k)] for (j, h, k) in elems]
             for (i, g, l) in elems]
    names = [f"({i},{G.names[g]},{l})" for (i, g, l) in elems]
    gg = validate_generalized_group(table, names)
    return gg, gg.satisfies_eq1


def direct_product(A: GenGroup, B: GenGroup) -> GenGroup:
    nb = B.order
    table = [[A.mul(a1, a2) * nb + B.mul(b1, b2) for a2 in range(A.order) for b2 in range(nb)]
             for a1 in range(A.order) for b1 in range(nb)]
    names = [f"({x},{y})" for x in A.names for y in B.names]
    return validate_generalized_group(table, names)


_CONSTRUCTORS = {
    "group": group,
    "left_zero": left_zero,
    "right_zero": right_zero,
    "right_zero_product": right_zero_product,
    "left_zero_product": left_zero_product,
    "rees_matrix": rees_matrix,
    "direct_product": direct_product,
}


def construct(kind: str, *args, **kwargs):
    """Dispatch to a named construction.

    Every kind returns a :class:`GenGroup` except ``rees_matrix``, which also
    returns its Eq.-compatibility flag.
    """
    try:
        fn = _CONSTRUCTORS[kind]
    except KeyError:
        raise StructureError(f"unknown construction {kind!r}") from None
    return fn(*args, **kwargs)


# ---------------------------------------------------------------- decomposition

@dataclass(frozen=True)
class EClass:
    identity: int
    members: tuple[int, ...]
    is_group: bool


def eclass_decompose(g: GenGroup) -> list[EClass]:
    """Partition the carrier by ``e(t)`` and check that each class is a group."""
    classes: dict[int, list[int]] = {}
    for t in range(g.order):
        classes.setdefault(g.e(t), []).append(t)
    out = []
    for ident in sorted(classes, key=lambda e: classes[e][0]):
        members = classes[ident]
        ms = set(members)
        ok = ident in ms
        ok = ok and all(g.mul(a, b) in ms for a in members for b in members)
        ok = ok and all(g.mul(ident, a) == a == g.mul(a, ident) for a in members)
        ok = ok and all(any(g.mul(a, b) == ident == g.mul(b, a) for b in members) for a in members)
        out.append(EClass(ident, tuple(members), ok))
    return out


# ---------------------------------------------------------------- canonical forms

def relabel(table: Table, perm: Sequence[int]) -> Table:
    """Table of the same operation after renaming element ``a`` to ``perm[a]``."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[table[a][b]]
    return _freeze(out)


def canonical_form(table: Table) -> tuple[Table, tuple[int, ...]]:
    """Lexicographically least flattened table over all relabellings."""
    n = len(table)
    if n > 6:
        raise CapabilityError("canonical form is only supported up to order 6")
    best = None
    best_perm: tuple[int, ...] = tuple(range(n))
    for perm in itertools.permutations(range(n)):
        cand = relabel(table, perm)
        if best is None or cand < best:
            best, best_perm = cand, perm
    return best, best_perm


def _all_tables(n: int) -> Iterator[Table]:
    for flat in itertools.product(range(n), repeat=n * n):
        yield tuple(flat[i * n:(i + 1) * n] for i in range(n))


def _is_gen_group(table: Table) -> bool:
    try:
        validate_generalized_group(table)
    except (NotASemigroup, NotAGeneralizedGroup):
        return False
    return True


def associative_tables(n: int) -> Iterator[Table]:
    """All associative tables of order ``n`` by partial-table backtracking."""
    size = n * n
    cells = [[-1] * n for _ in range(n)]

    def consistent() -> bool:
        for a in range(n):
            ra = cells[a]
            for b in range(n):
                ab = ra[b]
                if ab < 0:
                    continue
                rb = cells[b]
                rab = cells[ab]
                for c in range(n):
                    bc = rb[c]
                    if bc < 0:
                        continue
                    lhs = rab[c]
                    rhs = ra[bc]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
        return True

    def fill(k: int):
        if k == size:
            yield _freeze(cells)
            return
        a, b = divmod(k, n)
        for v in range(n):
            cells[a][b] = v
            if consistent():
                yield from fill(k + 1)
        cells[a][b] = -1

    yield from fill(0)


def rees_tables(n: int) -> list[Table]:
    """Every Rees matrix semigroup of order ``n`` over a cyclic or Klein group."""
    groups = [cyclic(k) for k in range(1, n + 1)]
    if n % 4 == 0:
        groups.append(klein_four())
    out = []
    for G in groups:
        if n % G.order:
            continue
        rest = n // G.order
        for n_i in range(1, rest + 1):
            if rest % n_i:
                continue
            n_l = rest // n_i
            for flat in itertools.product(range(G.order), repeat=n_i * n_l):
                P = [flat[r * n_i:(r + 1) * n_i] for r in range(n_l)]
                gg, _ = rees_matrix(G, n_i, n_l, P)
                out.append(gg.table)
    return out


@lru_cache(maxsize=None)
def _generalized_groups_of_order(n: int) -> tuple[Table, ...]:
    if n <= 3:
        found = {canonical_form(t)[0] for t in _all_tables(n) if _is_gen_group(t)}
    else:
        found = {canonical_form(t)[0] for t in associative_tables(n) if _is_gen_group(t)}
        via_rees = {canonical_form(t)[0] for t in rees_tables(n)}
        if found != via_rees:
            raise AssertionError(f"order {n}: backtracking and Rees constructions disagree")
    return tuple(sorted(found))


def enumerate_generalized_groups(max_order: int) -> Iterator[GenGroup]:
    """All generalized groups up to isomorphism, by order then canonical table."""
    if max_order > MAX_ENUMERATION_ORDER:
        raise CapabilityError(f"exhaustive enumeration supports order <= {MAX_ENUMERATION_ORDER}")
    for n in range(1, max_order + 1):
        for table in _generalized_groups_of_order(n):
            yield validate_generalized_group(table)
