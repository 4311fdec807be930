"""Generalized open set classes, their families, and T12 closure."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from topoforge import kernels
from topoforge.errors import InputError
from topoforge.operators import BiOperatorSpace, OperatorTable, is_associated
from topoforge.setcore import FiniteTopology, PointSet, SetFamily, check_mask

CLASSES = ("semi", "pre", "b", "b_literal", "T12")


def is_semi_open(top: FiniteTopology, a: PointSet | int) -> bool:
    """``A <= Cl(Int(A))``."""
    m = check_mask(a, top.n)
    return m & ~top.closure_mask(top.interior_mask(m)) == 0


def is_pre_open(top: FiniteTopology, a: PointSet | int) -> bool:
    """``A <= Int(Cl(A))``."""
    m = check_mask(a, top.n)
    return m & ~top.interior_mask(top.closure_mask(m)) == 0


def is_b_open(top: FiniteTopology, a: PointSet | int) -> bool:
    """``A <= Cl(Int(A)) | Int(Cl(A))``."""
    m = check_mask(a, top.n)
    bound = top.closure_mask(top.interior_mask(m)) | top.interior_mask(top.closure_mask(m))
    return m & ~bound == 0


def is_b_open_literal(top: FiniteTopology, a: PointSet | int) -> bool:
    """``A <= Cl(Int(A) | Int(Cl(A)))``, the closure taken over the whole union.

    Kept only for comparison with :func:`is_b_open`.
    """
    m = check_mask(a, top.n)
    bound = top.closure_mask(top.interior_mask(m) | top.interior_mask(top.closure_mask(m)))
    return m & ~bound == 0


def is_T_open(top: FiniteTopology, t: OperatorTable, a: PointSet | int) -> bool:
    """Each point of ``A`` lies in an open ``V`` with ``V <= t(V) <= A``."""
    if not is_associated(top, t):
        raise InputError("operator is not associated with the topology")
    m = check_mask(a, top.n)
    images = t.images
    cover = 0
    for v in top.opens.masks:
        tv = images[v]
        if v & ~tv == 0 and tv & ~m == 0:
            cover |= v
    return m & ~cover == 0


def is_T_star_open(t: OperatorTable, a: PointSet | int) -> bool:
    """``A <= t(A)``."""
    m = check_mask(a, t.n)
    return m & ~t.images[m] == 0


def is_T12_star_open(bi: BiOperatorSpace, a: PointSet | int) -> bool:
    """``A <= t1(A) | t2(A)``."""
    m = check_mask(a, bi.n)
    return m & ~(bi.t1.images[m] | bi.t2.images[m]) == 0


def is_T12_star_closed(bi: BiOperatorSpace, a: PointSet | int) -> bool:
    m = check_mask(a, bi.n)
    return is_T12_star_open(bi, bi.full ^ m)


@lru_cache(maxsize=4096)
def _class_members(top: FiniteTopology, kind: str) -> tuple[int, ...]:
    size = 1 << top.n
    cl, it = top.closure_table, top.interior_table
    clint = [cl[it[a]] for a in range(size)]
    intcl = [it[cl[a]] for a in range(size)]
    if kind == "semi":
        pair = (clint, clint)
    elif kind == "pre":
        pair = (intcl, intcl)
    elif kind == "b":
        pair = (clint, intcl)
    elif kind == "b_literal":
        lit = [cl[it[a] | intcl[a]] for a in range(size)]
        pair = (lit, lit)
    else:
        raise InputError(f"class: unknown set class {kind!r}")
    return tuple(kernels.star_members(top.n, *pair))


def family_of(kind: str, space: FiniteTopology | BiOperatorSpace, closed: bool = False) -> SetFamily:
    """Every subset in the named class; ``closed=True`` gives the complements.

    ``semi``, ``pre``, ``b`` and ``b_literal`` need a topology (a bi-operator
    space contributes its own); ``T12`` needs a bi-operator space.
    """
    if kind == "T12":
        if not isinstance(space, BiOperatorSpace):
            raise InputError("class T12 needs a bi-operator space")
        fam = SetFamily.from_masks(space.n, space.t12_members)
    else:
        top = space.top if isinstance(space, BiOperatorSpace) else space
        fam = SetFamily.from_masks(top.n, _class_members(top, kind))
    return fam.complements() if closed else fam


def class_table(kind: str, space: FiniteTopology | BiOperatorSpace) -> bytes:
    """Membership vector of ``family_of(kind, space)``, indexed by mask."""
    if kind == "T12":
        return space.t12_table
    return family_of(kind, space).table


def t12_closure(bi: BiOperatorSpace, b: PointSet | int) -> PointSet:
    """Intersection of all T12-closed supersets of ``b``."""
    m = check_mask(b, bi.n)
    return PointSet(bi.t12_closure_mask(m), bi.n)


def is_t12_dense(bi: BiOperatorSpace, a: PointSet | int) -> bool:
    m = check_mask(a, bi.n)
    return bi.t12_closure_mask(m) == bi.full


def b_closure(top: FiniteTopology, a: PointSet | int) -> PointSet:
    """Intersection of all b-closed supersets of ``a``."""
    m = check_mask(a, top.n)
    acc = top.full
    for c in family_of("b", top, closed=True):
        if m & ~c == 0:
            acc &= c
    return PointSet(acc, top.n)


def generate_topology(n: int, family: Iterable[int]) -> FiniteTopology:
    """Smallest topology containing ``family``: finite intersections, then unions."""
    full = (1 << n) - 1
    meets = {full} | {check_mask(m, n, "family") for m in family}
    frontier = set(meets)
    while frontier:
        fresh = {u & v for u in frontier for v in meets} - meets
        meets |= fresh
        frontier = fresh
    bits = 0
    for m in kernels.union_closure(n, sorted(meets)):
        bits |= 1 << m
    return FiniteTopology(n, SetFamily(n, bits))


def generated_topology_tau12(bi: BiOperatorSpace) -> FiniteTopology:
    return generate_topology(bi.n, bi.t12_members)
