"""Finite functions, product spaces and the continuity-style predicates.

A function ``f: X -> Y`` is a tuple of point indices; its preimage of every
subset of ``Y`` is tabulated once and reused by every predicate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from topoforge import kernels
from topoforge.errors import InputError, check_carrier
from topoforge.openclasses import class_table
from topoforge.operators import BiOperatorSpace
from topoforge.setcore import FiniteTopology, PointSet, check_mask, iter_points

CONTRA_KINDS = ("closed", "semi", "pre", "b")


@dataclass(frozen=True)
class FiniteFunction:
    dom_n: int
    cod_n: int
    images: tuple[int, ...]

    def __post_init__(self):
        check_carrier(self.dom_n, what="domain")
        check_carrier(self.cod_n, what="codomain")
        images = tuple(self.images)
        if len(images) != self.dom_n:
            raise InputError(f"images: length {len(images)} != dom_n={self.dom_n}")
        for x, y in enumerate(images):
            if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < self.cod_n:
                raise InputError(f"images[{x}]: point {y!r} out of range for cod_n={self.cod_n}")
        object.__setattr__(self, "images", images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    @classmethod
    def identity(cls, n: int) -> FiniteFunction:
        return cls(n, n, tuple(range(n)))

    @classmethod
    def constant(cls, dom_n: int, cod_n: int, value: int) -> FiniteFunction:
        return cls(dom_n, cod_n, (value,) * dom_n)

    @cached_property
    def preimages(self) -> tuple[int, ...]:
        return tuple(kernels.preimage_table(self.images, self.cod_n))

    @property
    def token(self) -> str:
        return ",".join(map(str, self.images))

    def image_mask(self, a: int) -> int:
        out = 0
        for x in iter_points(a):
            out |= 1 << self.images[x]
        return out

    def is_onto(self) -> bool:
        return len(set(self.images)) == self.cod_n

    def to_json(self) -> dict:
        return {"dom_n": self.dom_n, "cod_n": self.cod_n, "images": list(self.images)}

    @classmethod
    def from_json(cls, obj: object, where: str = "function") -> FiniteFunction:
        if not isinstance(obj, dict):
            raise InputError(f"{where}: expected a JSON object")
        for name in ("dom_n", "cod_n"):
            v = obj.get(name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InputError(f"{where}.{name}: expected an integer carrier size")
        images = obj.get("images")
        if not isinstance(images, list):
            raise InputError(f"{where}.images: expected a list of point indices")
        try:
            return cls(obj["dom_n"], obj["cod_n"], tuple(images))
        except InputError as exc:
            raise InputError(f"{where}.{exc}") from None


@lru_cache(maxsize=None)
def all_functions(dom_n: int, cod_n: int) -> tuple[FiniteFunction, ...]:
    """Every function ``dom_n -> cod_n``, ascending lexicographically."""
    return tuple(
        FiniteFunction(dom_n, cod_n, images)
        for images in itertools.product(range(cod_n), repeat=dom_n)
    )


def _check_map(f: FiniteFunction, top_x: FiniteTopology, top_y: FiniteTopology) -> None:
    if f.dom_n != top_x.n:
        raise InputError(f"function domain size {f.dom_n} does not match X (n={top_x.n})")
    if f.cod_n != top_y.n:
        raise InputError(f"function codomain size {f.cod_n} does not match Y (n={top_y.n})")


def preimage(f: FiniteFunction, b: PointSet | int) -> PointSet:
    """``{x | f(x) in b}``."""
    m = check_mask(b, f.cod_n)
    return PointSet(f.preimages[m], f.dom_n)


def is_continuous(f: FiniteFunction, top_x: FiniteTopology, top_y: FiniteTopology) -> bool:
    _check_map(f, top_x, top_y)
    pre = f.preimages
    return all(top_x.is_open(pre[v]) for v in top_y.opens.masks)


def is_contra_continuous(f: FiniteFunction, top_x: FiniteTopology, top_y: FiniteTopology,
                         kind: str = "closed") -> bool:
    """Every open ``V`` of ``Y`` has a preimage in the closed class ``kind``.

    ``kind`` is ``closed`` (plain contra-continuity), ``semi``, ``pre`` or ``b``.
    """
    _check_map(f, top_x, top_y)
    pre = f.preimages
    full = top_x.full
    if kind == "closed":
        return all(top_x.is_closed(pre[v]) for v in top_y.opens.masks)
    if kind not in CONTRA_KINDS:
        raise InputError(f"class: unknown contra-continuity class {kind!r}")
    table = class_table(kind, top_x)
    return all(table[full ^ pre[v]] for v in top_y.opens.masks)


def is_contra_semi_continuous(f, top_x, top_y) -> bool:
    return is_contra_continuous(f, top_x, top_y, "semi")


def is_contra_pre_continuous(f, top_x, top_y) -> bool:
    return is_contra_continuous(f, top_x, top_y, "pre")


def is_contra_b_continuous(f, top_x, top_y) -> bool:
    return is_contra_continuous(f, top_x, top_y, "b")


def is_class_continuous(f: FiniteFunction, top_x: FiniteTopology, top_y: FiniteTopology, kind: str) -> bool:
    """Preimage form: every open ``V`` of ``Y`` has a ``kind``-open preimage."""
    _check_map(f, top_x, top_y)
    table = class_table(kind, top_x)
    pre = f.preimages
    return all(table[pre[v]] for v in top_y.opens.masks)


def is_pointwise_class_continuous(f: FiniteFunction, top_x: FiniteTopology, top_y: FiniteTopology,
                                  kind: str) -> bool:
    """For each ``x`` and each open ``V`` containing ``f(x)`` some ``kind``-open
    ``U`` containing ``x`` has ``f(U) <= V``.
    """
    _check_map(f, top_x, top_y)
    if kind not in ("semi", "pre", "b"):
        raise InputError(f"class: expected semi, pre or b, got {kind!r}")
    members = [u for u in range(1 << top_x.n) if class_table(kind, top_x)[u]]
    for x in range(f.dom_n):
        for v in top_y.opens.masks:
            if not v >> f.images[x] & 1:
                continue
            if not any(u >> x & 1 and f.image_mask(u) & ~v == 0 for u in members):
                return False
    return True


def is_contra_T12_continuous(bi_x: BiOperatorSpace, top_y: FiniteTopology, f: FiniteFunction) -> bool:
    """Every open ``V`` of ``Y`` has a T12-closed preimage."""
    _check_map(f, bi_x.top, top_y)
    pre = f.preimages
    table = bi_x.t12_table
    full = bi_x.full
    return all(table[full ^ pre[v]] for v in top_y.opens.masks)


@dataclass(frozen=True)
class ProductSpace:
    """``X x Y`` on ``x_n * y_n`` points; ``(x, y)`` is point ``x * y_n + y``."""

    x_n: int
    y_n: int
    top: FiniteTopology

    def pair(self, x: int, y: int) -> int:
        return x * self.y_n + y

    def box(self, u: int, v: int) -> int:
        return box_mask(u, v, self.x_n, self.y_n)


def box_mask(u: int, v: int, x_n: int, y_n: int) -> int:
    out = 0
    for x in iter_points(u):
        out |= v << (x * y_n)
    return out


@lru_cache(maxsize=4096)
def product_topology(top_x: FiniteTopology, top_y: FiniteTopology) -> ProductSpace:
    """Opens are all unions of boxes ``U x V`` with ``U``, ``V`` open."""
    n = top_x.n * top_y.n
    check_carrier(n, what="product carrier")
    boxes = sorted({box_mask(u, v, top_x.n, top_y.n) for u in top_x.opens.masks for v in top_y.opens.masks})
    bits = 0
    for m in kernels.union_closure(n, boxes):
        bits |= 1 << m
    return ProductSpace(top_x.n, top_y.n, FiniteTopology._trusted(n, bits))


def graph_mask(f: FiniteFunction) -> int:
    """``G(f)`` as a subset of the product carrier."""
    out = 0
    for x, y in enumerate(f.images):
        out |= 1 << (x * f.cod_n + y)
    return out


def graph_function(f: FiniteFunction) -> FiniteFunction:
    """``x -> (x, f(x))`` into the product carrier."""
    n = f.dom_n * f.cod_n
    check_carrier(n, what="product carrier")
    return FiniteFunction(f.dom_n, n, tuple(x * f.cod_n + y for x, y in enumerate(f.images)))


def has_contra_T12_closed_graph(bi_x: BiOperatorSpace, top_y: FiniteTopology, f: FiniteFunction,
                                form: str = "image") -> bool:
    """Every ``(x, y)`` off the graph has a T12-open ``U`` containing ``x`` and a
    closed ``V`` containing ``y`` with ``f(U) & V`` empty.

    ``form="box"`` tests ``(U x V) & G(f)`` empty literally over every pair
    ``(U, V)``; ``form="image"`` uses that the smallest closed set containing
    ``y`` is ``Cl({y})``, so the witness exists iff ``x`` lies in a T12-open
    subset of ``f^-1(Y - Cl({y}))``.
    """
    _check_map(f, bi_x.top, top_y)
    if form == "image":
        pre = f.preimages
        core = bi_x.t12_core_table
        cod_full = top_y.full
        full = bi_x.full
        for y in range(top_y.n):
            off = full ^ pre[1 << y]
            if off & ~core[pre[cod_full ^ top_y.closure_mask(1 << y)]]:
                return False
        return True
    if form == "box":
        graph = graph_mask(f)
        closed = top_y.closed.masks
        for x in range(f.dom_n):
            opens_x = [u for u in bi_x.t12_members if u >> x & 1]
            for y in range(top_y.n):
                if y == f.images[x]:
                    continue
                if not any(box_mask(u, v, f.dom_n, f.cod_n) & graph == 0
                           for u in opens_x for v in closed if v >> y & 1):
                    return False
        return True
    raise InputError(f"form: expected 'image' or 'box', got {form!r}")


def finite_subcover(cover: list[int], universe: int) -> list[int] | None:
    """A subfamily of ``cover`` with the same union, one member per point, or
    ``None`` when ``cover`` does not cover ``universe``.
    """
    chosen: list[int] = []
    for x in iter_points(universe):
        if any(c >> x & 1 for c in chosen):
            continue
        hit = next((c for c in cover if c >> x & 1), None)
        if hit is None:
            return None
        chosen.append(hit)
    return chosen


LITERAL_COVER_LIMIT = 16


def is_contra_compact_subset(top: FiniteTopology, a: PointSet | int) -> bool:
    """Every cover of ``A`` by closed sets of the subspace ``A`` has a finite subcover.

    Every cover of a finite carrier is a finite family, so the answer is
    always ``True``. While the subspace has at most ``LITERAL_COVER_LIMIT``
    closed sets every cover is enumerated and a subcover is built for it.
    """
    m = check_mask(a, top.n)
    return _contra_compact(top, m)


@lru_cache(maxsize=4096)
def _contra_compact(top: FiniteTopology, m: int) -> bool:
    closed = sorted({c & m for c in top.closed.masks})
    if len(closed) > LITERAL_COVER_LIMIT:
        return True
    for picks in range(1 << len(closed)):
        cover = [c for i, c in enumerate(closed) if picks >> i & 1]
        union = 0
        for c in cover:
            union |= c
        if union == m and finite_subcover(cover, m) is None:
            return False
    return True


def is_contra_compact(top: FiniteTopology) -> bool:
    return is_contra_compact_subset(top, top.full)


def is_urysohn(top: FiniteTopology) -> bool:
    """Distinct points lie in open sets whose closures are disjoint."""
    cl = top.closure_mask
    nbhd = [[cl(u) for u in top.opens.masks if u >> x & 1] for x in range(top.n)]
    for x in range(top.n):
        for y in range(x + 1, top.n):
            if not any(cu & cw == 0 for cu in nbhd[x] for cw in nbhd[y]):
                return False
    return True


def is_T12_connected(bi: BiOperatorSpace, variant: str = "disjoint") -> bool:
    """``X`` is not the union of two nonempty T12-open sets.

    ``disjoint`` (the default) only counts disjoint pairs; ``literal`` counts
    any two distinct sets, so ``X`` paired with a nonempty proper T12-open set
    already disconnects.
    """
    full = bi.full
    nonempty = [u for u in bi.t12_members if u]
    if variant == "disjoint":
        table = bi.t12_table
        return not any(u != full and table[full ^ u] for u in nonempty)
    if variant == "literal":
        for i, u in enumerate(nonempty):
            for v in nonempty[i + 1:]:
                if u | v == full:
                    return False
        return True
    raise InputError(f"variant: expected 'disjoint' or 'literal', got {variant!r}")


def equalizer(f: FiniteFunction, g: FiniteFunction) -> PointSet:
    """``{x | f(x) == g(x)}``."""
    if (f.dom_n, f.cod_n) != (g.dom_n, g.cod_n):
        raise InputError("equalizer: functions must share domain and codomain sizes")
    mask = 0
    for x, (a, b) in enumerate(zip(f.images, g.images)):
        if a == b:
            mask |= 1 << x
    return PointSet(mask, f.dom_n)


def graph_preimages(top_x: FiniteTopology, top_y: FiniteTopology, f: FiniteFunction) -> tuple[int, ...]:
    """Distinct ``g^-1(O)`` over opens ``O`` of ``X x Y``, ``g`` the graph function."""
    return _graph_preimages(product_topology(top_x, top_y), f)


@lru_cache(maxsize=65536)
def _graph_preimages(prod: ProductSpace, f: FiniteFunction) -> tuple[int, ...]:
    # g^-1(O) only depends on O & G(f)
    points = [(x, 1 << prod.pair(x, y)) for x, y in enumerate(f.images)]
    seen = set()
    for o in prod.top.opens.masks:
        m = 0
        for x, bit in points:
            if o & bit:
                m |= 1 << x
        seen.add(m)
    return tuple(sorted(seen))
