"""Command-line front end.

Every command writes JSON (one object per line) to standard output. Exit
codes: 0 success, 1 counterexample found, 2 input error, 3 capability limit,
4 fast path and oracle disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import TextIO

from topoforge import openclasses
from topoforge.errors import CapabilityError, CrossValidationError, InputError
from topoforge.maps import FiniteFunction
from topoforge.operators import BUILTIN_KINDS, EXTRA_KINDS, BiOperatorSpace, OperatorTable, is_associated, make_builtin
from topoforge.setcore import FiniteTopology, check_mask, enumerate_topologies, points_label
from topoforge.verifier import (
    Instance,
    SweepConfig,
    check,
    cross_validate,
    find_intersection_witness,
    resolve_theorem,
    run_sweep,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_CAPABILITY, EXIT_DIVERGED = 0, 1, 2, 3, 4
FORMAT = "topoforge/1"


def dumps(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def load_json(source: str, what: str) -> object:
    """Parse ``source`` as inline JSON (if it starts with ``{`` or ``[``), ``-`` for stdin, or a file path."""
    text = source.strip()
    try:
        if text.startswith(("{", "[")):
            return json.loads(text)
        if source == "-":
            return json.load(sys.stdin)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: malformed JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None
    except OSError as exc:
        raise InputError(f"{what}: cannot read {source!r} ({exc.strerror})") from None


def load_space(source: str) -> FiniteTopology:
    try:
        return FiniteTopology.from_json(load_json(source, "space"))
    except InputError as exc:
        raise InputError(f"space.{exc}") from None


def load_operators(source: str, top: FiniteTopology) -> tuple[OperatorTable, OperatorTable | None]:
    """A single operator object, or ``{"t1": ..., "t2": ...}``."""
    obj = load_json(source, "operators")
    if isinstance(obj, dict) and "t1" in obj:
        t1 = _operator(obj["t1"], top, "operators.t1")
        t2 = _operator(obj["t2"], top, "operators.t2") if "t2" in obj else None
        return t1, t2
    return _operator(obj, top, "operators"), None


def _operator(obj: object, top: FiniteTopology, where: str) -> OperatorTable:
    t = OperatorTable.from_json(obj, top, where)
    kind = obj.get("provenance") if isinstance(obj, dict) else None
    if kind in BUILTIN_KINDS + EXTRA_KINDS and t.builtin is None:
        ref = make_builtin(kind, top)
        if ref.images != t.images:
            raise InputError(f"{where}.provenance: images do not match builtin {kind!r}")
        return ref
    return t


def _bispace(top: FiniteTopology, t1: OperatorTable, t2: OperatorTable | None) -> BiOperatorSpace:
    if t2 is None:
        raise InputError("operators.t2: two operators are required here")
    return BiOperatorSpace(top, t1, t2)


# ---------------------------------------------------------------- commands

def cmd_enumerate(args, out: TextIO) -> int:
    for top in enumerate_topologies(args.n):
        obj = top.to_json()
        obj["comment"] = " ".join(points_label(m) for m in obj["opens"])
        out.write(dumps(obj) + "\n")
    return EXIT_OK


_TOPOLOGY_CLASSES = ("open", "closed", "semi", "pre", "b", "b_literal")


def cmd_classify(args, out: TextIO) -> int:
    top = load_space(args.space)
    t1 = t2 = None
    if args.operators:
        t1, t2 = load_operators(args.operators, top)
    available = list(_TOPOLOGY_CLASSES)
    if t1 is not None:
        available += ["T_star"] + (["T"] if is_associated(top, t1) else [])
        if t2 is not None:
            available += ["T12", "T12_closed"]
    if args.class_:
        if args.class_ not in available:
            raise InputError(f"class: {args.class_!r} is not available here (choose from {', '.join(available)})")
        wanted = [args.class_]
    else:
        wanted = available
    bi = _bispace(top, t1, t2) if t2 is not None else None
    tests = {
        "open": top.is_open,
        "closed": top.is_closed,
        "semi": lambda m: openclasses.is_semi_open(top, m),
        "pre": lambda m: openclasses.is_pre_open(top, m),
        "b": lambda m: openclasses.is_b_open(top, m),
        "b_literal": lambda m: openclasses.is_b_open_literal(top, m),
        "T_star": lambda m: openclasses.is_T_star_open(t1, m),
        "T": lambda m: openclasses.is_T_open(top, t1, m),
        "T12": lambda m: bi.is_t12_open(m),
        "T12_closed": lambda m: bi.is_t12_closed(m),
    }
    for m in range(1 << top.n):
        row = {"set": m}
        row.update({k: tests[k](m) for k in wanted})
        row["comment"] = points_label(m)
        out.write(dumps(row) + "\n")
    return EXIT_OK


def cmd_closure(args, out: TextIO) -> int:
    top = load_space(args.space)
    m = check_mask(args.set, top.n, "set")
    if args.t12:
        if not args.operators:
            raise InputError("operators: --t12 needs --operators with t1 and t2")
        bi = _bispace(top, *load_operators(args.operators, top))
        c = bi.t12_closure_mask(m)
    else:
        c = top.closure_mask(m)
    out.write(dumps({"set": m, "closure": c, "t12": args.t12,
                     "comment": f"{points_label(m)} -> {points_label(c)}"}) + "\n")
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    theorem = resolve_theorem(args.theorem)
    inst = Instance.from_json(load_json(args.instance, "instance"))
    v = check(theorem, inst, args.variant)
    if v.classification == "counterexample":
        cross_validate(v, strict=True)
    out.write(v.line() + "\n")
    return EXIT_COUNTEREXAMPLE if v.classification == "counterexample" else EXIT_OK


def cmd_sweep(args, out: TextIO) -> int:
    theorem = resolve_theorem(args.theorem)
    config = SweepConfig(max_n=args.max_n, pool=args.pool, seed=args.seed, random_k=args.random_k,
                         variant=args.variant, workers=args.workers)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            summary = run_sweep(theorem, config, fh)
        out.write(dumps(summary) + "\n")
    else:
        summary = run_sweep(theorem, config, out)
    return EXIT_COUNTEREXAMPLE if summary["counterexamples"] else EXIT_OK


def cmd_witness(args, out: TextIO) -> int:
    config = SweepConfig(max_n=args.max_n, pool=args.pool, seed=args.seed, random_k=args.random_k)
    spaces = None
    if args.space:
        top = load_space(args.space)
        if not args.operators:
            raise InputError("operators: --space needs --operators with t1 and t2")
        spaces = [_bispace(top, *load_operators(args.operators, top))]
    w = find_intersection_witness(config, spaces)
    if w is None:
        scope = "given space" if spaces else f"n <= {config.max_n}, pool {config.pool}"
        obj = {"found": False, "comment": f"every intersection of T12-open sets is T12-open ({scope})"}
    else:
        obj = w.to_json()
    out.write(dumps(obj) + "\n")
    return EXIT_OK


def _operator_export(t: OperatorTable) -> dict:
    obj = t.to_json(tabulate=True)
    if t.builtin is not None:
        obj["provenance"] = t.builtin
    return obj


def cmd_export(args, out: TextIO) -> int:
    given = [k for k in ("catalog", "instance", "function", "space") if getattr(args, k) is not None]
    if len(given) != 1:
        raise InputError("export: give exactly one of --catalog, --instance, --function or --space")
    kind = given[0]
    if kind == "catalog":
        data: object = [top.to_json() for top in enumerate_topologies(args.catalog)]
    elif kind == "function":
        data = FiniteFunction.from_json(load_json(args.function, "function"), "function").to_json()
    elif kind == "instance":
        inst = Instance.from_json(load_json(args.instance, "instance"))
        data = _instance_export(inst)
    else:
        top = load_space(args.space)
        data = top.to_json()
        if args.operators:
            t1, t2 = load_operators(args.operators, top)
            kind = "operators"
            ops = {"t1": _operator_export(t1)}
            if t2 is not None:
                ops["t2"] = _operator_export(t2)
            data = {"space": data, "operators": ops}
    doc = dumps({"format": FORMAT, "kind": kind, "data": data}) + "\n"
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
    else:
        out.write(doc)
    return EXIT_OK


def _instance_export(inst: Instance) -> dict:
    obj = inst.to_json()
    if "operators" in obj:
        obj["operators"] = {k: _operator_export(getattr(inst, k)) for k in ("t1", "t2") if getattr(inst, k)}
    return obj


def cmd_import(args, out: TextIO) -> int:
    doc = load_json(args.input, "input")
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise InputError(f"format: expected {FORMAT!r}")
    kind, data = doc.get("kind"), doc.get("data")
    if kind == "catalog":
        if not isinstance(data, list):
            raise InputError("data: a catalog is a list of topologies")
        canon: object = []
        for k, obj in enumerate(data):
            try:
                canon.append(FiniteTopology.from_json(obj).to_json())
            except InputError as exc:
                raise InputError(f"data[{k}].{exc}") from None
    elif kind == "space":
        try:
            canon = FiniteTopology.from_json(data).to_json()
        except InputError as exc:
            raise InputError(f"data.{exc}") from None
    elif kind == "operators":
        if not isinstance(data, dict) or "space" not in data or "operators" not in data:
            raise InputError("data: expected space and operators")
        top = load_space(dumps(data["space"]))
        t1, t2 = load_operators(dumps(data["operators"]), top)
        ops = {"t1": _operator_export(t1)}
        if t2 is not None:
            ops["t2"] = _operator_export(t2)
        canon = {"space": top.to_json(), "operators": ops}
    elif kind == "function":
        canon = FiniteFunction.from_json(data, "data").to_json()
    elif kind == "instance":
        if not isinstance(data, dict):
            raise InputError("data: expected an instance object")
        inst = Instance.from_json(_resolve_provenance(data))
        canon = _instance_export(inst)
    else:
        raise InputError(f"kind: unknown document kind {kind!r}")
    out.write(dumps({"format": FORMAT, "kind": kind, "data": canon}) + "\n")
    return EXIT_OK


def _resolve_provenance(data: dict) -> dict:
    """Re-tag exported builtin tables so imported instances keep their provenance."""
    ops = data.get("operators")
    if not isinstance(ops, dict) or "space" not in data:
        return data
    top = load_space(dumps(data["space"]))
    fixed = dict(data)
    fixed["operators"] = {}
    for k, obj in ops.items():
        t = _operator(obj, top, f"operators.{k}")
        fixed["operators"][k] = t.to_json()
    return fixed


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topoforge", description="Finite model checker for operator topological spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list every topology on n points")
    e.add_argument("--n", type=int, required=True)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="membership of every subset in the open set classes")
    c.add_argument("--space", required=True, help="topology JSON (file, '-' or inline)")
    c.add_argument("--operators", help="one operator, or {\"t1\":...,\"t2\":...}")
    c.add_argument("--class", dest="class_", help="report a single class")
    c.set_defaults(func=cmd_classify)

    cl = sub.add_parser("closure", help="closure or T12 closure of a subset")
    cl.add_argument("--space", required=True)
    cl.add_argument("--operators")
    cl.add_argument("--set", type=int, required=True, help="subset mask")
    cl.add_argument("--t12", action="store_true", help="T12 closure instead of the topological one")
    cl.set_defaults(func=cmd_closure)

    ch = sub.add_parser("check", help="evaluate one theorem on one instance")
    ch.add_argument("--theorem", required=True)
    ch.add_argument("--instance", required=True)
    ch.add_argument("--variant", help="alternate hypothesis (L42_part2: union) or reading (T414: literal)")
    ch.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", help="check a theorem on every enumerated instance")
    s.add_argument("--theorem", required=True)
    s.add_argument("--max-n", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--pool", default="builtin", choices=("builtin", "random", "exhaustive"))
    s.add_argument("--random-k", type=int, default=200)
    s.add_argument("--variant")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", help="write the report here; the summary still goes to stdout")
    s.set_defaults(func=cmd_sweep)

    w = sub.add_parser("witness", help="two T12-open sets whose intersection is not T12-open")
    w.add_argument("--max-n", type=int, default=3)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--pool", default="builtin", choices=("builtin", "random", "exhaustive"))
    w.add_argument("--random-k", type=int, default=200)
    w.add_argument("--space", help="search only this space (needs --operators)")
    w.add_argument("--operators")
    w.set_defaults(func=cmd_witness)

    ex = sub.add_parser("export", help="write a self-contained canonical document")
    ex.add_argument("--space")
    ex.add_argument("--operators", help="with --space: export the operators too")
    ex.add_argument("--function")
    ex.add_argument("--instance")
    ex.add_argument("--catalog", type=int, metavar="N", help="every topology on N points")
    ex.add_argument("--out")
    ex.set_defaults(func=cmd_export)

    im = sub.add_parser("import", help="validate an exported document and print its canonical form")
    im.add_argument("--input", required=True)
    im.set_defaults(func=cmd_import)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except CrossValidationError as exc:
        print(f"cross-validation failed on {exc.predicate}: {exc}", file=sys.stderr)
        return EXIT_DIVERGED


if __name__ == "__main__":
    raise SystemExit(main())
