"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel on the same inputs under both backends and checks
that they return identical results.
"""

from __future__ import annotations

import argparse
import random
import timeit

from topoforge import kernels

N = 4


def _workload():
    rng = random.Random(0)
    size = 1 << N
    tops = kernels.backends()["python"].enumerate_topologies(N)
    opens = [[k for k in range(size) if bits >> k & 1] for bits in tops[::7]]
    tables = []
    for fam in opens:
        img = [rng.randrange(size) for _ in range(size)]
        for w in fam:
            img[w] |= w
        tables.append(img)
    return opens, tables


def cases(opens, tables):
    return {
        "enumerate_topologies(4)": lambda k: k.enumerate_topologies(N),
        "closure_table": lambda k: [k.closure_table(N, o) for o in opens],
        "interior_table": lambda k: [k.interior_table(N, o) for o in opens],
        "star_members": lambda k: [k.star_members(N, t, t[::-1]) for t in tables],
        "avoid_closure_table": lambda k: [k.avoid_closure_table(N, o) for o in opens],
        "is_monotone": lambda k: [k.is_monotone(N, t) for t in tables],
        "distributes": lambda k: [k.distributes(N, t, o) for t, o in zip(tables, opens)],
        "union_closure": lambda k: [k.union_closure(N, o[:3]) for o in opens],
    }


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    found = kernels.backends()
    if "cython" not in found:
        print("compiled backend not built; only the pure-Python timings are meaningful")
    opens, tables = _workload()
    print(f"{'kernel':28} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in cases(opens, tables).items():
        times = {}
        results = {}
        for label, mod in found.items():
            results[label] = fn(mod)
            times[label] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) * 1e3
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"{name}: backends disagree")
        py = times["python"]
        cy = times.get("cython")
        if cy is None:
            print(f"{name:28} {py:10.2f} {'-':>10} {'-':>8}")
        else:
            print(f"{name:28} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
