"""Topological generalized groups: a generalized group plus a topology on its carrier."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    GenGroup,
    cyclic,
    klein_four,
    left_zero,
    left_zero_product,
    rees_matrix,
    right_zero,
    right_zero_product,
)
from .topology import (
    FiniteSpace,
    SpaceMap,
    discrete,
    is_continuous,
    is_hausdorff,
    product_space,
)


@dataclass(frozen=True)
class TGGReport:
    hausdorff: bool
    m1_continuous: bool
    m2_continuous: bool
    e_continuous: bool
    eq1_holds: bool
    eq2_holds: bool


@dataclass(frozen=True)
class TopGenGroup:
    algebra: GenGroup
    space: FiniteSpace
    report: TGGReport
    name: str = ""

    @property
    def well_formed(self) -> bool:
        r = self.report
        return r.hausdorff and r.m1_continuous and r.m2_continuous and r.eq1_holds

    @property
    def order(self) -> int:
        return self.algebra.order

    @property
    def names(self) -> tuple[str, ...]:
        return self.algebra.names


def inversion_map(T: GenGroup, space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, T.inv_map)


def identity_map_e(T: GenGroup, space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, T.e_map)


def multiplication_map(T: GenGroup, space: FiniteSpace) -> SpaceMap:
    return SpaceMap(product_space(space, space), space,
                    tuple(v for row in T.table for v in row))


def validate_tgg(algebra: GenGroup, space: FiniteSpace | None = None, name: str = "") -> TopGenGroup:
    """Check continuity of inversion, multiplication and ``e``, and both identity laws.

    Instances that fail are kept and flagged; use :attr:`TopGenGroup.well_formed`.
    """
    if space is None:
        space = discrete(algebra.order, algebra.names)
    if space.size != algebra.order:
        raise ValueError("carrier mismatch between algebra and topology")
    eq1 = algebra.eq1_counterexample() is None
    eq2 = algebra.eq2_counterexample() is None
    assert eq2 or not eq1, "e(st)=e(s)e(t) must imply e(s)e(t)e(s)=e(s)"
    report = TGGReport(
        hausdorff=is_hausdorff(space),
        m1_continuous=is_continuous(inversion_map(algebra, space)),
        m2_continuous=is_continuous(multiplication_map(algebra, space)),
        e_continuous=is_continuous(identity_map_e(algebra, space)),
        eq1_holds=eq1,
        eq2_holds=eq2,
    )
    return TopGenGroup(algebra, space, report, name)


def canonical_instances() -> dict[str, TopGenGroup]:
    """Named corpus of small discrete topological generalized groups."""
    algebras: list[tuple[str, GenGroup]] = [(f"C{n}", cyclic(n)) for n in range(1, 5)]
    algebras.append(("V4", klein_four()))
    for n in range(1, 4):
        algebras.append((f"LZ{n}", left_zero(n)))
        algebras.append((f"RZ{n}", right_zero(n)))
    for k in (2, 3):
        algebras.append((f"RZP(C{k},2)", right_zero_product(cyclic(k), 2)))
        algebras.append((f"LZP(C{k},2)", left_zero_product(cyclic(k), 2)))
    return {name: validate_tgg(g, name=name) for name, g in algebras}


def rees_eq1_violation(G: GenGroup | None = None, n_i: int = 2, n_l: int = 2) -> TopGenGroup | None:
    """First sandwich matrix (lexicographic) whose Rees semigroup breaks ``e(st)=e(s)e(t)``."""
    G = G or cyclic(2)
    for flat in itertools.product(range(G.order), repeat=n_i * n_l):
        P = [flat[r * n_i:(r + 1) * n_i] for r in range(n_l)]
        gg, ok = rees_matrix(G, n_i, n_l, P)
        if not ok:
            return validate_tgg(gg, name=f"Rees_C{G.order}_{n_i}x{n_l}_" + "".join(map(str, flat)))
    return None
