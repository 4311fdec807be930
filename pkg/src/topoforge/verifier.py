"""Executable theorem checks, exhaustive sweeps and oracle cross-validation.

Each checkable claim becomes a pair of named predicate groups, hypothesis and
conclusion, evaluated on one :class:`Instance`. A verdict is *vacuous* when
the hypothesis fails, *confirmed* when both hold and a *counterexample*
otherwise. Every counterexample a sweep emits has been re-derived by
:mod:`topoforge.oracle`.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import Iterator, TextIO

from topoforge import oracle
from topoforge.errors import (
    MAX_FUNCTION_SWEEP,
    MAX_SUBSET_SWEEP,
    CapabilityError,
    CrossValidationError,
    InputError,
    limit,
)
from topoforge.maps import (
    FiniteFunction,
    all_functions,
    equalizer,
    graph_preimages,
    has_contra_T12_closed_graph,
    is_contra_compact,
    is_contra_compact_subset,
    is_contra_continuous,
    is_contra_T12_continuous,
    is_T12_connected,
    is_urysohn,
)
from topoforge.openclasses import generated_topology_tau12
from topoforge.operators import (
    BiOperatorSpace,
    OperatorTable,
    check_pool,
    distributes_over_open_intersection,
    is_associated,
    is_monotone,
    operator_pairs,
    operator_pool,
    preserves_binary_unions,
)
from topoforge.setcore import FiniteTopology, enumerate_topologies, points_label


class TheoremId(str, Enum):
    R33_chain = "R33_chain"
    L42_part1 = "L42_part1"
    L42_part2 = "L42_part2"
    R43_intersection_witness = "R43_intersection_witness"
    T46_graph_preimage = "T46_graph_preimage"
    T47_contra_compact_codomain = "T47_contra_compact_codomain"
    T48_graph_function = "T48_graph_function"
    T49_equalizer = "T49_equalizer"
    C412_dense_agreement = "C412_dense_agreement"
    T414_not_discrete = "T414_not_discrete"


SUBSET_ONLY = {
    TheoremId.R33_chain,
    TheoremId.L42_part1,
    TheoremId.L42_part2,
    TheoremId.R43_intersection_witness,
}

_REQUIRED = {
    TheoremId.R33_chain: ("t1",),
    TheoremId.L42_part1: ("t1", "t2"),
    TheoremId.L42_part2: ("t1", "t2"),
    TheoremId.R43_intersection_witness: ("t1", "t2"),
    TheoremId.T46_graph_preimage: ("t1", "t2", "top_y", "f"),
    TheoremId.T47_contra_compact_codomain: ("t1", "t2", "top_y", "f"),
    TheoremId.T48_graph_function: ("t1", "t2", "top_y", "f"),
    TheoremId.T49_equalizer: ("t1", "t2", "top_y", "f", "g"),
    TheoremId.C412_dense_agreement: ("t1", "t2", "top_y", "f", "g"),
    TheoremId.T414_not_discrete: ("t1", "t2", "top_y", "f"),
}

_VARIANTS = {
    TheoremId.L42_part2: ("monotone", "union"),
    TheoremId.T414_not_discrete: ("disjoint", "literal"),
}


def resolve_theorem(name: str | TheoremId) -> TheoremId:
    """Accept a full id or an unambiguous prefix such as ``T48``."""
    if isinstance(name, TheoremId):
        return name
    try:
        return TheoremId(name)
    except ValueError:
        pass
    hits = [t for t in TheoremId if t.value.lower().startswith(name.lower())]
    if len(hits) == 1:
        return hits[0]
    if hits:
        raise InputError(f"theorem: {name!r} is ambiguous ({', '.join(t.value for t in hits)})")
    raise InputError(f"theorem: unknown theorem id {name!r}")


def _check_variant(theorem: TheoremId, variant: str | None) -> str | None:
    if variant is None:
        return None
    allowed = _VARIANTS.get(theorem, ())
    if variant not in allowed:
        raise InputError(f"variant: {variant!r} is not a variant of {theorem.value}")
    return variant


@dataclass(frozen=True)
class Instance:
    top_x: FiniteTopology
    t1: OperatorTable | None = None
    t2: OperatorTable | None = None
    top_y: FiniteTopology | None = None
    f: FiniteFunction | None = None
    g: FiniteFunction | None = None
    a: int | None = None
    b: int | None = None
    bi: BiOperatorSpace | None = field(default=None, compare=False, repr=False)

    def bispace(self) -> BiOperatorSpace:
        if self.bi is None:
            object.__setattr__(self, "bi", BiOperatorSpace(self.top_x, self.t1, self.t2))
        return self.bi

    def key(self, theorem: TheoremId | None = None) -> str:
        parts = [f"X={self.top_x.key}"]
        if theorem is TheoremId.R33_chain:
            parts.append(f"T={self.t1.token}")
        else:
            if self.t1 is not None:
                parts.append(f"T1={self.t1.token}")
            if self.t2 is not None:
                parts.append(f"T2={self.t2.token}")
        if self.top_y is not None:
            parts.append(f"Y={self.top_y.key}")
        if self.f is not None:
            parts.append(f"f={self.f.token}")
        if self.g is not None:
            parts.append(f"g={self.g.token}")
        if self.a is not None:
            parts.append(f"a={self.a}")
        if self.b is not None:
            parts.append(f"b={self.b}")
        return " ".join(parts)

    def to_json(self) -> dict:
        out: dict = {"space": self.top_x.to_json()}
        ops = {}
        if self.t1 is not None:
            ops["t1"] = self.t1.to_json()
        if self.t2 is not None:
            ops["t2"] = self.t2.to_json()
        if ops:
            out["operators"] = ops
        if self.top_y is not None:
            out["codomain"] = self.top_y.to_json()
        if self.f is not None:
            out["f"] = self.f.to_json()
        if self.g is not None:
            out["g"] = self.g.to_json()
        if self.a is not None:
            out["a"] = self.a
        if self.b is not None:
            out["b"] = self.b
        return out

    @classmethod
    def from_json(cls, obj: object) -> Instance:
        if not isinstance(obj, dict):
            raise InputError("instance: expected a JSON object")
        if "space" not in obj:
            raise InputError("space: missing")
        try:
            top_x = FiniteTopology.from_json(obj["space"])
        except InputError as exc:
            raise InputError(f"space.{exc}") from None
        t1 = t2 = None
        ops = obj.get("operators")
        if ops is not None:
            if not isinstance(ops, dict):
                raise InputError("operators: expected an object with t1/t2")
            if "t1" in ops:
                t1 = OperatorTable.from_json(ops["t1"], top_x, "operators.t1")
            if "t2" in ops:
                t2 = OperatorTable.from_json(ops["t2"], top_x, "operators.t2")
        top_y = None
        if "codomain" in obj:
            try:
                top_y = FiniteTopology.from_json(obj["codomain"])
            except InputError as exc:
                raise InputError(f"codomain.{exc}") from None
        f = FiniteFunction.from_json(obj["f"], "f") if "f" in obj else None
        g = FiniteFunction.from_json(obj["g"], "g") if "g" in obj else None
        subsets = {}
        for name in ("a", "b"):
            v = obj.get(name)
            if v is not None and (not isinstance(v, int) or isinstance(v, bool) or v < 0 or v >> top_x.n):
                raise InputError(f"{name}: mask {v!r} out of range for n={top_x.n}")
            subsets[name] = v
        return cls(top_x, t1, t2, top_y, f, g, subsets["a"], subsets["b"])


def _validate(theorem: TheoremId, inst: Instance) -> None:
    for name in _REQUIRED[theorem]:
        if getattr(inst, name) is None:
            raise InputError(f"{name}: required by {theorem.value}")
    n = inst.top_x.n
    for name in ("t1", "t2"):
        t = getattr(inst, name)
        if t is not None and t.n != n:
            raise InputError(f"{name}: carrier size {t.n} does not match the space (n={n})")
    if theorem is not TheoremId.R33_chain:
        inst.bispace()
    for name in ("f", "g"):
        fn = getattr(inst, name)
        if fn is None:
            continue
        if fn.dom_n != n:
            raise InputError(f"{name}.dom_n: {fn.dom_n} does not match the space (n={n})")
        if fn.cod_n != inst.top_y.n:
            raise InputError(f"{name}.cod_n: {fn.cod_n} does not match the codomain (n={inst.top_y.n})")


@dataclass(frozen=True)
class Verdict:
    theorem: TheoremId
    key: str
    hypothesis_holds: bool
    conclusion_holds: bool
    classification: str
    witness: dict | None = None
    instance: Instance | None = field(default=None, compare=False, repr=False)
    parts: dict = field(default_factory=dict, compare=False, repr=False)
    variant: str | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "instance": self.key,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "classification": self.classification,
            "witness": self.witness,
        }

    def line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def classify(hypothesis: bool, conclusion: bool) -> str:
    if not hypothesis:
        return "vacuous"
    return "confirmed" if conclusion else "counterexample"


def _witness(**masks) -> dict:
    out = dict(masks)
    out["comment"] = " ".join(f"{k}={points_label(v)}" for k, v in masks.items())
    return out


# ---------------------------------------------------------------- checkers

def _t_open_mask(top: FiniteTopology, images: tuple[int, ...], m: int) -> bool:
    cover = 0
    for v in top.opens.masks:
        tv = images[v]
        if v & ~tv == 0 and tv & ~m == 0:
            cover |= v
    return m & ~cover == 0


def _r33(inst: Instance, variant):
    top, t = inst.top_x, inst.t1
    images = t.images
    chain_ok = star_ok = True
    witness = None
    for m in range(1 << top.n):
        is_open = top.is_open(m)
        if chain_ok and _t_open_mask(top, images, m) and not is_open:
            chain_ok = False
            witness = witness or _witness(A=m)
        if star_ok and is_open and m & ~images[m]:
            star_ok = False
            witness = witness or _witness(A=m)
    hyp = {"associated": is_associated(top, t)}
    concl = {"T_open_implies_open": chain_ok, "open_implies_T_star_open": star_ok}
    return hyp, concl, witness


def _l42_part1(inst: Instance, variant):
    bi = inst.bispace()
    hyp = {
        "t1_distributes": distributes_over_open_intersection(bi.top, bi.t1),
        "t2_distributes": distributes_over_open_intersection(bi.top, bi.t2),
    }
    table = bi.t12_table
    for w in bi.top.opens.masks:
        for v in bi.t12_members:
            if not table[w & v]:
                return hyp, {"open_meet_T12_open": False}, _witness(W=w, V=v)
    return hyp, {"open_meet_T12_open": True}, None


def _l42_part2(inst: Instance, variant):
    bi = inst.bispace()
    if variant == "union":
        hyp = {"t1_preserves_unions": preserves_binary_unions(bi.t1),
               "t2_preserves_unions": preserves_binary_unions(bi.t2)}
    else:
        hyp = {"t1_monotone": is_monotone(bi.t1), "t2_monotone": is_monotone(bi.t2)}
    table = bi.t12_table
    members = bi.t12_members
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not table[u | v]:
                return hyp, {"T12_union_closed": False}, _witness(U=u, V=v)
    return hyp, {"T12_union_closed": True}, None


def intersection_failure(bi: BiOperatorSpace) -> tuple[int, int] | None:
    """First ``(a, b)``, ``a < b``, both T12-open with ``a & b`` not T12-open."""
    table = bi.t12_table
    members = bi.t12_members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not table[a & b]:
                return a, b
    return None


def _r43(inst: Instance, variant):
    hit = intersection_failure(inst.bispace())
    if hit is None:
        return {}, {"T12_meet_closed": True}, None
    a, b = hit
    return {}, {"T12_meet_closed": False}, _witness(a=a, b=b, intersection=a & b)


@lru_cache(maxsize=256)
def _contra_compact_all(top_y: FiniteTopology) -> bool:
    return all(is_contra_compact_subset(top_y, a) for a in range(1 << top_y.n))


def _t46(inst: Instance, variant):
    bi, top_y, f = inst.bispace(), inst.top_y, inst.f
    hyp = {
        "contra_T12_closed_graph": has_contra_T12_closed_graph(bi, top_y, f),
        "A_contra_compact": _contra_compact_all(top_y),
    }
    pre = f.preimages
    for a in range(1 << top_y.n):
        if not bi.is_t12_closed(pre[a]):
            return hyp, {"preimages_T12_closed": False}, _witness(A=a, preimage=pre[a])
    return hyp, {"preimages_T12_closed": True}, None


@lru_cache(maxsize=4096)
def _tau12_space(bi: BiOperatorSpace):
    tau = generated_topology_tau12(bi)
    a1, a2 = is_associated(tau, bi.t1), is_associated(tau, bi.t2)
    return tau, a1, a2, (BiOperatorSpace(tau, bi.t1, bi.t2) if a1 and a2 else None)


def _t47(inst: Instance, variant):
    bi, top_y, f = inst.bispace(), inst.top_y, inst.f
    tau, a1, a2, bi_tau = _tau12_space(bi)
    # the T12 family depends only on the operators, so graph and continuity
    # predicates agree between the original space and the one over tau12
    on = bi_tau or bi
    hyp = {
        "t1_associated_with_tau12": a1,
        "t2_associated_with_tau12": a2,
        "Y_contra_compact": is_contra_compact(top_y),
        "contra_T12_closed_graph": has_contra_T12_closed_graph(on, top_y, f),
    }
    concl = {"contra_T12_continuous": is_contra_T12_continuous(on, top_y, f)}
    return hyp, concl, None


def _t48(inst: Instance, variant):
    bi, top_y, f = inst.bispace(), inst.top_y, inst.f
    hyp = {"graph_function_contra_T12_continuous":
           all(bi.is_t12_closed(m) for m in graph_preimages(bi.top, top_y, f))}
    concl = {"contra_T12_continuous": is_contra_T12_continuous(bi, top_y, f)}
    return hyp, concl, None


@lru_cache(maxsize=4096)
def _urysohn(top: FiniteTopology) -> bool:
    return is_urysohn(top)


def _equalizer_hyp(inst: Instance) -> dict:
    bi, top_y = inst.bispace(), inst.top_y
    return {
        "f_contra_T12_continuous": is_contra_T12_continuous(bi, top_y, inst.f),
        "g_contra_continuous": is_contra_continuous(inst.g, bi.top, top_y),
        "Y_urysohn": _urysohn(top_y),
    }


def _t49(inst: Instance, variant):
    hyp = _equalizer_hyp(inst)
    e = equalizer(inst.f, inst.g).mask
    ok = inst.bispace().is_t12_closed(e)
    return hyp, {"equalizer_T12_closed": ok}, (None if ok else _witness(E=e))


def _c412(inst: Instance, variant):
    bi = inst.bispace()
    hyp = _equalizer_hyp(inst)
    e = equalizer(inst.f, inst.g).mask
    if inst.a is not None:
        dense = inst.a & ~e == 0 and bi.t12_closure_mask(inst.a) == bi.full
        a = inst.a
    else:
        a = next((m for m in range(e + 1) if m & ~e == 0 and bi.t12_closure_mask(m) == bi.full), None)
        dense = a is not None
    hyp["agree_on_T12_dense_set"] = dense
    ok = e == bi.full
    witness = None if ok or a is None else _witness(A=a, E=e)
    return hyp, {"f_equals_g": ok}, witness


def _t414(inst: Instance, variant):
    bi, top_y, f = inst.bispace(), inst.top_y, inst.f
    hyp = {
        "Y_at_least_two_points": top_y.n >= 2,
        "f_contra_T12_continuous": is_contra_T12_continuous(bi, top_y, f),
        "f_onto": f.is_onto(),
        "X_T12_connected": _connected(bi, variant or "disjoint"),
    }
    discrete = len(top_y.opens) == 1 << top_y.n
    return hyp, {"Y_not_discrete": not discrete}, None


@lru_cache(maxsize=65536)
def _connected(bi: BiOperatorSpace, variant: str) -> bool:
    return is_T12_connected(bi, variant)


_CHECKERS = {
    TheoremId.R33_chain: _r33,
    TheoremId.L42_part1: _l42_part1,
    TheoremId.L42_part2: _l42_part2,
    TheoremId.R43_intersection_witness: _r43,
    TheoremId.T46_graph_preimage: _t46,
    TheoremId.T47_contra_compact_codomain: _t47,
    TheoremId.T48_graph_function: _t48,
    TheoremId.T49_equalizer: _t49,
    TheoremId.C412_dense_agreement: _c412,
    TheoremId.T414_not_discrete: _t414,
}


def _evaluate(theorem: TheoremId, inst: Instance, variant: str | None) -> Verdict:
    hyp_parts, concl_parts, witness = _CHECKERS[theorem](inst, variant)
    hyp = all(hyp_parts.values())
    concl = all(concl_parts.values())
    key = inst.key(theorem)
    if variant is not None:
        key += f" variant={variant}"
    return Verdict(theorem, key, hyp, concl, classify(hyp, concl), witness, inst,
                   {"hypothesis": hyp_parts, "conclusion": concl_parts}, variant)


def check(theorem: TheoremId | str, inst: Instance, variant: str | None = None) -> Verdict:
    """Evaluate one theorem on one instance."""
    theorem = resolve_theorem(theorem)
    variant = _check_variant(theorem, variant)
    _validate(theorem, inst)
    return _evaluate(theorem, inst, variant)


def cross_validate(v: Verdict, strict: bool = False) -> bool:
    """Re-derive ``v`` with the naive oracle; ``True`` iff every part agrees.

    With ``strict=True`` a disagreement raises :class:`CrossValidationError`
    naming the first diverging predicate.
    """
    if v.instance is None:
        raise InputError("verdict carries no instance data")
    hyp, concl = oracle.evaluate(v.theorem.value, v.instance, v.variant)
    expected = {"hypothesis": hyp, "conclusion": concl}
    for group, parts in expected.items():
        got = v.parts.get(group, {})
        for name, value in parts.items():
            if got.get(name) != value:
                if strict:
                    raise CrossValidationError(
                        f"{v.theorem.value}: {group} predicate {name!r} diverged on {v.key}"
                        f" (fast={got.get(name)}, oracle={value})", name)
                return False
        if set(got) != set(parts):
            if strict:
                raise CrossValidationError(f"{v.theorem.value}: {group} predicates differ", group)
            return False
    if v.hypothesis_holds != all(hyp.values()) or v.conclusion_holds != all(concl.values()):
        if strict:
            raise CrossValidationError(f"{v.theorem.value}: verdict flags diverged on {v.key}", "verdict")
        return False
    return True


# ---------------------------------------------------------------- sweeps

@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 3
    pool: str = "builtin"
    seed: int = 0
    random_k: int = 200
    min_n: int = 1
    variant: str | None = None
    workers: int = 1
    cross_validate_all: bool = False


def _check_config(theorem: TheoremId, config: SweepConfig) -> None:
    cap = limit(MAX_SUBSET_SWEEP if theorem in SUBSET_ONLY else MAX_FUNCTION_SWEEP)
    if config.max_n > cap:
        kind = "subset-only" if theorem in SUBSET_ONLY else "function"
        raise CapabilityError(f"{kind} sweeps are limited to max_n <= {cap}, got {config.max_n}")
    if config.min_n < 1 or config.max_n < config.min_n:
        raise InputError(f"max_n: need 1 <= min_n <= max_n, got {config.min_n}..{config.max_n}")
    if config.random_k < 0:
        raise InputError("random_k: must be non-negative")
    check_pool(config.pool, config.max_n)
    _check_variant(theorem, config.variant)


def _spaces(lo: int, hi: int) -> Iterator[FiniteTopology]:
    for n in range(lo, hi + 1):
        yield from enumerate_topologies(n)


def _bis(top: FiniteTopology, config: SweepConfig) -> Iterator[BiOperatorSpace]:
    for t1, t2 in operator_pairs(top, config.pool, config.seed, config.random_k):
        yield BiOperatorSpace(top, t1, t2)


def _instances_on(theorem: TheoremId, config: SweepConfig, top: FiniteTopology) -> Iterator[Instance]:
    if theorem is TheoremId.R33_chain:
        for t in operator_pool(top, config.pool, config.seed, config.random_k):
            yield Instance(top, t)
        return
    if theorem in SUBSET_ONLY:
        for bi in _bis(top, config):
            yield Instance(top, bi.t1, bi.t2, bi=bi)
        return
    lo = 2 if theorem is TheoremId.T414_not_discrete else 1
    codomains = list(_spaces(lo, config.max_n))
    if theorem in (TheoremId.T49_equalizer, TheoremId.C412_dense_agreement):
        # finite Urysohn spaces are discrete; the other codomains make every
        # instance vacuous and are not enumerated
        codomains = [y for y in codomains if _urysohn(y)]
    two = theorem in (TheoremId.T49_equalizer, TheoremId.C412_dense_agreement)
    for bi in _bis(top, config):
        for top_y in codomains:
            fs = all_functions(top.n, top_y.n)
            for f in fs:
                if two:
                    for g in fs:
                        yield Instance(top, bi.t1, bi.t2, top_y, f, g, bi=bi)
                else:
                    yield Instance(top, bi.t1, bi.t2, top_y, f, bi=bi)


def instances(theorem: TheoremId | str, config: SweepConfig) -> Iterator[Instance]:
    """Sweep instances in canonical order: carrier size, topology bitset,
    operator pool order, codomain, then functions lexicographically."""
    theorem = resolve_theorem(theorem)
    _check_config(theorem, config)
    for top in _spaces(config.min_n, config.max_n):
        yield from _instances_on(theorem, config, top)


def _verdicts_on(theorem: TheoremId, config: SweepConfig, top: FiniteTopology) -> Iterator[Verdict]:
    for inst in _instances_on(theorem, config, top):
        v = _evaluate(theorem, inst, config.variant)
        if v.classification == "counterexample" or config.cross_validate_all:
            cross_validate(v, strict=True)
        yield v


def iter_sweep(theorem: TheoremId | str, config: SweepConfig) -> Iterator[Verdict]:
    theorem = resolve_theorem(theorem)
    _check_config(theorem, config)
    for top in _spaces(config.min_n, config.max_n):
        yield from _verdicts_on(theorem, config, top)


def _chunk(args) -> tuple[list[str], dict]:
    theorem, config, n, bits = args
    top = FiniteTopology._trusted(n, bits)
    lines = []
    counts = {"confirmed": 0, "vacuous": 0, "counterexample": 0}
    for v in _verdicts_on(theorem, config, top):
        lines.append(v.line())
        counts[v.classification] += 1
    return lines, counts


def run_sweep(theorem: TheoremId | str, config: SweepConfig, out: TextIO | None = None) -> dict:
    """Run a sweep, writing one JSON line per verdict and a final summary line.

    With ``config.workers > 1`` the topologies of ``X`` are farmed out to worker
    processes; results are merged back in canonical order, so the report is
    identical to a single-process run.
    """
    theorem = resolve_theorem(theorem)
    _check_config(theorem, config)
    counts = {"confirmed": 0, "vacuous": 0, "counterexample": 0}

    def emit(line: str) -> None:
        if out is not None:
            out.write(line)
            out.write("\n")

    if config.workers > 1:
        jobs = [(theorem, replace(config, workers=1), top.n, top.opens.bits)
                for top in _spaces(config.min_n, config.max_n)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for lines, part in pool.map(_chunk, jobs):
                for line in lines:
                    emit(line)
                for k, c in part.items():
                    counts[k] += c
    else:
        for v in iter_sweep(theorem, config):
            emit(v.line())
            counts[v.classification] += 1
    summary = {
        "theorem": theorem.value,
        "instances": sum(counts.values()),
        "confirmed": counts["confirmed"],
        "vacuous": counts["vacuous"],
        "counterexamples": counts["counterexample"],
        "seed": config.seed,
        "pool": config.pool,
        "max_n": config.max_n,
    }
    if config.variant is not None:
        summary["variant"] = config.variant
    emit(json.dumps(summary, separators=(",", ":")))
    return summary


# ---------------------------------------------------------------- witness search

@dataclass(frozen=True)
class IntersectionWitness:
    top: FiniteTopology
    t1: OperatorTable
    t2: OperatorTable
    a: int
    b: int

    @property
    def intersection(self) -> int:
        return self.a & self.b

    def to_json(self) -> dict:
        return {
            "found": True,
            "space": self.top.to_json(),
            "operators": {"t1": self.t1.to_json(tabulate=self.t1.builtin is None),
                          "t2": self.t2.to_json(tabulate=self.t2.builtin is None)},
            "a": self.a,
            "b": self.b,
            "intersection": self.intersection,
            "comment": f"a={points_label(self.a)} b={points_label(self.b)}"
                       f" a&b={points_label(self.intersection)} is not T12-open",
            "cross_validated": verify_witness(self),
        }


def verify_witness(w: IntersectionWitness) -> bool:
    """Recheck with the naive oracle: ``a`` and ``b`` T12-open, ``a & b`` not."""
    nb = oracle.bi(w.top, w.t1, w.t2)
    a, b = oracle.to_set(w.a), oracle.to_set(w.b)
    return (oracle.associated(nb.space, nb.t1) and oracle.associated(nb.space, nb.t2)
            and nb.t12_open(a) and nb.t12_open(b) and not nb.t12_open(a & b))


def find_intersection_witness(config: SweepConfig = SweepConfig(),
                              spaces: list[BiOperatorSpace] | None = None) -> IntersectionWitness | None:
    """First instance, in canonical sweep order, of two T12-open sets whose
    intersection is not T12-open; ``None`` when the search space has none.

    ``spaces`` restricts the search to the given bi-operator spaces.
    """
    if spaces is None:
        _check_config(TheoremId.R43_intersection_witness, config)
        spaces = (bi for top in _spaces(config.min_n, config.max_n) for bi in _bis(top, config))
    for bi in spaces:
        hit = intersection_failure(bi)
        if hit is None:
            continue
        w = IntersectionWitness(bi.top, bi.t1, bi.t2, *hit)
        if not verify_witness(w):
            raise CrossValidationError(f"witness on X={bi.top.key} failed the oracle recheck", "T12_open")
        return w
    return None
