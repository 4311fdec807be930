"""Naive list-of-sets reimplementation used to recheck the bitmask path.

Nothing here touches the kernels or the cached tables: masks are turned into
frozensets on entry and every predicate is written straight from its
definition, quantifiers and all. It is slow on purpose.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterable


def to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def to_mask(s: Iterable[int]) -> int:
    return sum(1 << i for i in s)


def all_subsets(points: frozenset) -> list[frozenset]:
    items = sorted(points, key=repr)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


class NaiveSpace:
    def __init__(self, points: Iterable, opens: Iterable[Iterable]):
        self.points = frozenset(points)
        self.opens = [frozenset(u) for u in opens]
        self.open_set = set(self.opens)
        self.closed = [self.points - u for u in self.opens]
        self.closed_set = set(self.closed)

    def subsets(self) -> list[frozenset]:
        return all_subsets(self.points)

    def is_open(self, a) -> bool:
        return frozenset(a) in self.open_set

    def is_closed(self, a) -> bool:
        return frozenset(a) in self.closed_set

    def closure(self, a) -> frozenset:
        out = self.points
        for c in self.closed:
            if a <= c:
                out = out & c
        return out

    def interior(self, a) -> frozenset:
        out = frozenset()
        for u in self.opens:
            if u <= a:
                out = out | u
        return out

    def semi_open(self, a) -> bool:
        return a <= self.closure(self.interior(a))

    def pre_open(self, a) -> bool:
        return a <= self.interior(self.closure(a))

    def b_open(self, a) -> bool:
        return a <= self.closure(self.interior(a)) | self.interior(self.closure(a))

    def is_topology(self) -> bool:
        if frozenset() not in self.open_set or self.points not in self.open_set:
            return False
        return all(u | v in self.open_set and u & v in self.open_set for u in self.opens for v in self.opens)


@lru_cache(maxsize=4096)
def space(top) -> NaiveSpace:
    return NaiveSpace(range(top.n), (to_set(m) for m in top.opens.masks))


class NaiveOperator:
    """A tabulated operator read as a map on frozensets."""

    def __init__(self, table: dict):
        self.table = table

    def __call__(self, a) -> frozenset:
        return self.table[frozenset(a)]


@lru_cache(maxsize=65536)
def operator(t) -> NaiveOperator:
    pts = frozenset(range(t.n))
    table = {s: to_set(t.images[to_mask(s)]) for s in all_subsets(pts)}
    return NaiveOperator(table)


class NaiveBi:
    def __init__(self, sp: NaiveSpace, t1: NaiveOperator, t2: NaiveOperator):
        self.space = sp
        self.t1 = t1
        self.t2 = t2
        self.points = sp.points
        self.t12_opens = [a for a in sp.subsets() if self.t12_open(a)]

    def t12_open(self, a) -> bool:
        return a <= self.t1(a) | self.t2(a)

    def t12_closed(self, a) -> bool:
        return self.t12_open(self.points - a)

    def t12_closure(self, b) -> frozenset:
        out = self.points
        for c in self.space.subsets():
            if b <= c and self.t12_closed(c):
                out = out & c
        return out


@lru_cache(maxsize=65536)
def bi(top, t1, t2) -> NaiveBi:
    return NaiveBi(space(top), operator(t1), operator(t2))


def associated(sp: NaiveSpace, t: NaiveOperator) -> bool:
    return all(w <= t(w) for w in sp.opens)


def t_open(sp: NaiveSpace, t: NaiveOperator, a) -> bool:
    return all(any(x in v and v <= t(v) <= a for v in sp.opens) for x in a)


def t_star_open(t: NaiveOperator, a) -> bool:
    return a <= t(a)


def monotone(sp_points: frozenset, t: NaiveOperator) -> bool:
    subs = all_subsets(sp_points)
    return all(t(a) <= t(b) for a in subs for b in subs if a <= b)


def distributes(sp: NaiveSpace, t: NaiveOperator) -> bool:
    return all(t(w & b) == t(w) & t(b) for w in sp.opens for b in sp.subsets())


def preserves_unions(sp_points: frozenset, t: NaiveOperator) -> bool:
    subs = all_subsets(sp_points)
    return all(t(a | b) == t(a) | t(b) for a in subs for b in subs)


def function_map(f) -> dict:
    return dict(enumerate(f.images))


def preimage(fmap: dict, b) -> frozenset:
    return frozenset(x for x, y in fmap.items() if y in b)


def contra_with(fmap: dict, sp_y: NaiveSpace, is_closed_x: Callable) -> bool:
    return all(is_closed_x(preimage(fmap, v)) for v in sp_y.opens)


def contra_continuous(fmap: dict, sp_x: NaiveSpace, sp_y: NaiveSpace) -> bool:
    return contra_with(fmap, sp_y, sp_x.is_closed)


def contra_t12_continuous(fmap: dict, nb: NaiveBi, sp_y: NaiveSpace) -> bool:
    return contra_with(fmap, sp_y, nb.t12_closed)


def closed_graph(nb: NaiveBi, sp_y: NaiveSpace, fmap: dict) -> bool:
    graph = {(x, y) for x, y in fmap.items()}
    for x in nb.points:
        for y in sp_y.points:
            if (x, y) in graph:
                continue
            ok = any(
                x in u and y in v and not ({(p, q) for p in u for q in v} & graph)
                for u in nb.t12_opens
                for v in sp_y.closed
            )
            if not ok:
                return False
    return True


def contra_compact(sp: NaiveSpace, a) -> bool:
    """Every cover of ``a`` by subspace-closed sets has a finite subcover."""
    return _contra_compact(frozenset(sp.closed), a)


@lru_cache(maxsize=4096)
def _contra_compact(closed_sets: frozenset, a: frozenset) -> bool:
    closed = sorted({c & a for c in closed_sets}, key=sorted)
    for r in range(len(closed) + 1):
        for cover in itertools.combinations(closed, r):
            if frozenset().union(*cover) != a:
                continue
            if not any(frozenset().union(*sub) == a
                       for k in range(len(cover) + 1)
                       for sub in itertools.combinations(cover, k)):
                return False
    return True


def urysohn(sp: NaiveSpace) -> bool:
    for x in sp.points:
        for y in sp.points:
            if x == y:
                continue
            if not any(x in v and y in w and not (sp.closure(v) & sp.closure(w))
                       for v in sp.opens for w in sp.opens):
                return False
    return True


def t12_connected(nb: NaiveBi, variant: str) -> bool:
    opens = [u for u in nb.t12_opens if u]
    for u in opens:
        for v in opens:
            if u | v != nb.points:
                continue
            if variant == "disjoint" and not u & v:
                return False
            if variant == "literal" and u != v:
                return False
    return True


def product_space(sp_x: NaiveSpace, sp_y: NaiveSpace) -> NaiveSpace:
    boxes = {frozenset((p, q) for p in u for q in v) for u in sp_x.opens for v in sp_y.opens}
    opens = {frozenset()}
    for b in boxes:
        opens |= {o | b for o in opens}
    pts = frozenset((p, q) for p in sp_x.points for q in sp_y.points)
    return NaiveSpace(pts, opens)


@lru_cache(maxsize=4096)
def product_of(top_x, top_y) -> NaiveSpace:
    return product_space(space(top_x), space(top_y))


def generated_topology(points: frozenset, family: Iterable) -> NaiveSpace:
    meets = {points} | {frozenset(a) for a in family}
    while True:
        more = {u & v for u in meets for v in meets} - meets
        if not more:
            break
        meets |= more
    opens = {frozenset()}
    for m in meets:
        opens |= {o | m for o in opens}
    return NaiveSpace(points, opens)


def equalizer(fmap: dict, gmap: dict) -> frozenset:
    return frozenset(x for x in fmap if fmap[x] == gmap[x])


# ---------------------------------------------------------------- theorems

def evaluate(theorem: str, inst, variant: str | None = None) -> tuple[dict, dict]:
    """Named hypothesis and conclusion parts for ``theorem`` on ``inst``."""
    return _EVALUATORS[theorem](inst, variant)


def _r33(inst, variant):
    sp = space(inst.top_x)
    t = operator(inst.t1)
    subs = sp.subsets()
    hyp = {"associated": associated(sp, t)}
    concl = {
        "T_open_implies_open": all(sp.is_open(a) for a in subs if t_open(sp, t, a)),
        "open_implies_T_star_open": all(t_star_open(t, a) for a in subs if sp.is_open(a)),
    }
    return hyp, concl


def _l42_part1(inst, variant):
    nb = bi(inst.top_x, inst.t1, inst.t2)
    sp = nb.space
    hyp = {"t1_distributes": distributes(sp, nb.t1), "t2_distributes": distributes(sp, nb.t2)}
    concl = {"open_meet_T12_open": all(nb.t12_open(w & v) for w in sp.opens for v in nb.t12_opens)}
    return hyp, concl


def _l42_part2(inst, variant):
    nb = bi(inst.top_x, inst.t1, inst.t2)
    if variant == "union":
        hyp = {"t1_preserves_unions": preserves_unions(nb.points, nb.t1),
               "t2_preserves_unions": preserves_unions(nb.points, nb.t2)}
    else:
        hyp = {"t1_monotone": monotone(nb.points, nb.t1), "t2_monotone": monotone(nb.points, nb.t2)}
    concl = {"T12_union_closed": all(nb.t12_open(u | v) for u in nb.t12_opens for v in nb.t12_opens)}
    return hyp, concl


def _r43(inst, variant):
    nb = bi(inst.top_x, inst.t1, inst.t2)
    concl = {"T12_meet_closed": all(nb.t12_open(u & v) for u in nb.t12_opens for v in nb.t12_opens)}
    return {}, concl


def _maps(inst):
    nb = bi(inst.top_x, inst.t1, inst.t2)
    return nb, space(inst.top_y), function_map(inst.f)


def _t46(inst, variant):
    nb, sp_y, fmap = _maps(inst)
    hyp = {
        "contra_T12_closed_graph": closed_graph(nb, sp_y, fmap),
        "A_contra_compact": all(contra_compact(sp_y, a) for a in sp_y.subsets()),
    }
    concl = {"preimages_T12_closed": all(nb.t12_closed(preimage(fmap, a)) for a in sp_y.subsets())}
    return hyp, concl


def _t47(inst, variant):
    nb, sp_y, fmap = _maps(inst)
    tau = generated_topology(nb.points, nb.t12_opens)
    hyp = {
        "t1_associated_with_tau12": associated(tau, nb.t1),
        "t2_associated_with_tau12": associated(tau, nb.t2),
        "Y_contra_compact": contra_compact(sp_y, sp_y.points),
        "contra_T12_closed_graph": closed_graph(NaiveBi(tau, nb.t1, nb.t2), sp_y, fmap),
    }
    concl = {"contra_T12_continuous": contra_t12_continuous(fmap, NaiveBi(tau, nb.t1, nb.t2), sp_y)}
    return hyp, concl


def _t48(inst, variant):
    nb, sp_y, fmap = _maps(inst)
    prod = product_of(inst.top_x, inst.top_y)
    gmap = {x: (x, y) for x, y in fmap.items()}
    hyp = {"graph_function_contra_T12_continuous": contra_with(gmap, prod, nb.t12_closed)}
    concl = {"contra_T12_continuous": contra_t12_continuous(fmap, nb, sp_y)}
    return hyp, concl


def _equalizer_hyp(inst):
    nb, sp_y, fmap = _maps(inst)
    gmap = function_map(inst.g)
    hyp = {
        "f_contra_T12_continuous": contra_t12_continuous(fmap, nb, sp_y),
        "g_contra_continuous": contra_continuous(gmap, nb.space, sp_y),
        "Y_urysohn": urysohn(sp_y),
    }
    return nb, fmap, gmap, hyp


def _t49(inst, variant):
    nb, fmap, gmap, hyp = _equalizer_hyp(inst)
    return hyp, {"equalizer_T12_closed": nb.t12_closed(equalizer(fmap, gmap))}


def _c412(inst, variant):
    nb, fmap, gmap, hyp = _equalizer_hyp(inst)
    e = equalizer(fmap, gmap)
    if inst.a is not None:
        a = to_set(inst.a)
        hyp["agree_on_T12_dense_set"] = a <= e and nb.t12_closure(a) == nb.points
    else:
        hyp["agree_on_T12_dense_set"] = any(nb.t12_closure(a) == nb.points for a in all_subsets(e))
    return hyp, {"f_equals_g": e == nb.points}


def _t414(inst, variant):
    nb, sp_y, fmap = _maps(inst)
    hyp = {
        "Y_at_least_two_points": len(sp_y.points) >= 2,
        "f_contra_T12_continuous": contra_t12_continuous(fmap, nb, sp_y),
        "f_onto": set(fmap.values()) == set(sp_y.points),
        "X_T12_connected": t12_connected(nb, variant or "disjoint"),
    }
    discrete = all(sp_y.is_open(a) for a in sp_y.subsets())
    return hyp, {"Y_not_discrete": not discrete}


_EVALUATORS = {
    "R33_chain": _r33,
    "L42_part1": _l42_part1,
    "L42_part2": _l42_part2,
    "R43_intersection_witness": _r43,
    "T46_graph_preimage": _t46,
    "T47_contra_compact_codomain": _t47,
    "T48_graph_function": _t48,
    "T49_equalizer": _t49,
    "C412_dense_agreement": _c412,
    "T414_not_discrete": _t414,
}
