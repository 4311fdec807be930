"""Operators on the power set and bi-operator spaces.

An operator is tabulated extensionally: ``images[k]`` is the image of the
subset with mask ``k``. It is *associated* with a topology when every open
set is contained in its own image.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from topoforge import kernels
from topoforge.errors import CapabilityError, InputError, check_carrier, limit
from topoforge.setcore import TABLE_LIMIT, FiniteTopology, PointSet, check_mask

BUILTIN_KINDS = ("identity", "closure", "interior_closure", "closure_interior", "constant_full")
# accepted by make_builtin but kept out of the default sweep pool
EXTRA_KINDS = ("interior",)

EXHAUSTIVE_LIMIT = 2


@dataclass(frozen=True)
class OperatorTable:
    n: int
    images: tuple[int, ...]
    builtin: str | None = field(default=None, compare=False)
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        check_carrier(self.n)
        images = tuple(self.images)
        if len(images) != 1 << self.n:
            raise InputError(f"images: length {len(images)} != 2**{self.n}")
        for k, m in enumerate(images):
            check_mask(m, self.n, f"images[{k}]")
        object.__setattr__(self, "images", images)

    def __call__(self, a: PointSet | int) -> int:
        return self.images[check_mask(a, self.n)]

    @property
    def token(self) -> str:
        """Short provenance-bearing name used in instance keys."""
        if self.builtin is not None:
            return self.builtin
        return "[" + ",".join(map(str, self.images)) + "]"

    def to_json(self, tabulate: bool = False) -> dict:
        if self.builtin is not None and not tabulate:
            return {"builtin": self.builtin}
        return {"n": self.n, "images": list(self.images)}

    @classmethod
    def from_json(cls, obj: object, top: FiniteTopology | None = None, where: str = "operator") -> OperatorTable:
        if not isinstance(obj, dict):
            raise InputError(f"{where}: expected a JSON object")
        if "builtin" in obj:
            if top is None:
                raise InputError(f"{where}.builtin: a builtin operator needs a space to tabulate against")
            return make_builtin(obj["builtin"], top)
        n = obj.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError(f"{where}.n: expected an integer carrier size")
        images = obj.get("images")
        if not isinstance(images, list):
            raise InputError(f"{where}.images: expected a list of masks")
        if top is not None and n != top.n:
            raise InputError(f"{where}.n: {n} does not match the space (n={top.n})")
        try:
            return cls(n, tuple(images))
        except InputError as exc:
            raise InputError(f"{where}.{exc}") from None


def _check_dims(top: FiniteTopology, t: OperatorTable) -> None:
    if t.n != top.n:
        raise InputError(f"operator carrier size {t.n} does not match the topology (n={top.n})")


def is_associated(top: FiniteTopology, t: OperatorTable) -> bool:
    """Every open ``W`` satisfies ``W <= t(W)``."""
    _check_dims(top, t)
    images = t.images
    return all(w & ~images[w] == 0 for w in top.opens.masks)


def make_builtin(kind: str, top: FiniteTopology) -> OperatorTable:
    """Tabulate a named operator against ``top``."""
    cl, it = top.closure_table, top.interior_table
    size = 1 << top.n
    if kind == "identity":
        images = tuple(range(size))
    elif kind == "closure":
        images = cl
    elif kind == "interior":
        images = it
    elif kind == "interior_closure":
        images = tuple(it[cl[a]] for a in range(size))
    elif kind == "closure_interior":
        images = tuple(cl[it[a]] for a in range(size))
    elif kind == "constant_full":
        images = (top.full,) * size
    else:
        raise InputError(f"builtin: unknown operator kind {kind!r}")
    return OperatorTable(top.n, images, builtin=kind)


def is_monotone(t: OperatorTable) -> bool:
    """``A <= B`` implies ``t(A) <= t(B)``; checked on single-point extensions."""
    return kernels.is_monotone(t.n, t.images)


def distributes_over_open_intersection(top: FiniteTopology, t: OperatorTable) -> bool:
    """``t(W & B) == t(W) & t(B)`` for every open ``W`` and every subset ``B``."""
    _check_dims(top, t)
    return kernels.distributes(top.n, t.images, top.opens.masks)


def preserves_binary_unions(t: OperatorTable) -> bool:
    return kernels.preserves_unions(t.n, t.images)


def random_associated_operator(top: FiniteTopology, rng: random.Random, label: str | None = None) -> OperatorTable:
    """Uniform images, then each open ``W`` has ``W`` merged into its image."""
    size = 1 << top.n
    images = [rng.randrange(size) for _ in range(size)]
    for w in top.opens.masks:
        images[w] |= w
    return OperatorTable(top.n, tuple(images), label=label)


def all_operators(n: int) -> Iterator[OperatorTable]:
    """Every operator on ``n`` points, associated or not, ascending by table."""
    cap = limit(EXHAUSTIVE_LIMIT)
    if n > cap:
        raise CapabilityError(f"exhaustive operator pool is limited to n <= {cap}, got n={n}")
    size = 1 << n
    for idx, images in enumerate(itertools.product(range(size), repeat=size)):
        yield OperatorTable(n, images, label=f"all:{idx}")


def all_associated_operators(top: FiniteTopology) -> Iterator[OperatorTable]:
    """Every associated operator, ascending lexicographically by image table."""
    cap = limit(EXHAUSTIVE_LIMIT)
    if top.n > cap:
        raise CapabilityError(f"exhaustive operator pool is limited to n <= {cap}, got n={top.n}")
    size = 1 << top.n
    choices = []
    for a in range(size):
        if top.is_open(a):
            choices.append([m for m in range(size) if a & ~m == 0])
        else:
            choices.append(list(range(size)))
    for idx, images in enumerate(itertools.product(*choices)):
        yield OperatorTable(top.n, images, label=f"exhaustive:{idx}")


@dataclass(frozen=True)
class BiOperatorSpace:
    """A topology with two associated operators."""

    top: FiniteTopology
    t1: OperatorTable
    t2: OperatorTable

    def __post_init__(self):
        for name in ("t1", "t2"):
            t = getattr(self, name)
            if t.n != self.top.n:
                raise InputError(f"{name}: carrier size {t.n} does not match the topology (n={self.top.n})")
            if not is_associated(self.top, t):
                raise InputError(f"{name}: operator is not associated with the topology")

    @property
    def n(self) -> int:
        return self.top.n

    @property
    def full(self) -> int:
        return self.top.full

    @cached_property
    def t12_members(self) -> tuple[int, ...]:
        """Masks ``A`` with ``A <= t1(A) | t2(A)``, ascending."""
        return tuple(kernels.star_members(self.n, self.t1.images, self.t2.images))

    @cached_property
    def t12_table(self) -> bytes:
        table = bytearray(1 << self.n)
        for m in self.t12_members:
            table[m] = 1
        return bytes(table)

    @cached_property
    def t12_closure_table(self) -> tuple[int, ...]:
        return tuple(kernels.avoid_closure_table(self.n, self.t12_members))

    @cached_property
    def t12_core_table(self) -> tuple[int, ...]:
        """Union of the T12-open subsets of each set."""
        return tuple(kernels.open_core_table(self.n, self.t12_members))

    def t12_closure_mask(self, mask: int) -> int:
        if self.n <= TABLE_LIMIT:
            return self.t12_closure_table[mask]
        acc = 0
        for u in self.t12_members:
            if u & mask == 0:
                acc |= u
        return self.full ^ acc

    def is_t12_open(self, mask: int) -> bool:
        return bool(self.t12_table[mask])

    def is_t12_closed(self, mask: int) -> bool:
        return bool(self.t12_table[self.full ^ mask])


def builtin_pool(top: FiniteTopology) -> list[OperatorTable]:
    return [make_builtin(kind, top) for kind in BUILTIN_KINDS]


def operator_pool(top: FiniteTopology, pool: str, seed: int = 0, k: int = 200) -> list[OperatorTable]:
    """Single operators for sweeps over one operator.

    The exhaustive pool here is every table, associated or not, so sweeps
    whose hypothesis is association see it fail too.
    """
    if pool == "builtin":
        return builtin_pool(top)
    if pool == "random":
        rng = _pool_rng(top, seed)
        ops = builtin_pool(top)
        ops.extend(random_associated_operator(top, rng, f"random:{seed}:{i}") for i in range(k))
        return ops
    if pool == "exhaustive":
        return list(all_operators(top.n))
    raise InputError(f"pool: unknown operator pool {pool!r}")


def operator_pairs(top: FiniteTopology, pool: str, seed: int = 0, k: int = 200) -> list[tuple[OperatorTable, OperatorTable]]:
    """Ordered operator pairs for bi-operator sweeps.

    ``builtin`` is every ordered pair of builtins; ``random`` appends ``k``
    pairs of seeded random associated operators; ``exhaustive`` is every
    ordered pair of associated operators (small carriers only).
    """
    if pool == "builtin":
        ops = builtin_pool(top)
        return list(itertools.product(ops, ops))
    if pool == "random":
        ops = builtin_pool(top)
        pairs = list(itertools.product(ops, ops))
        rng = _pool_rng(top, seed)
        for i in range(k):
            t1 = random_associated_operator(top, rng, f"random:{seed}:{2 * i}")
            t2 = random_associated_operator(top, rng, f"random:{seed}:{2 * i + 1}")
            pairs.append((t1, t2))
        return pairs
    if pool == "exhaustive":
        ops = list(all_associated_operators(top))
        return list(itertools.product(ops, ops))
    raise InputError(f"pool: unknown operator pool {pool!r}")


def _pool_rng(top: FiniteTopology, seed: int) -> random.Random:
    # string seeds hash through sha512, so pools do not depend on PYTHONHASHSEED
    return random.Random(f"topoforge:{seed}:{top.key}")


def check_pool(pool: str, n: int) -> None:
    if pool not in ("builtin", "random", "exhaustive"):
        raise InputError(f"pool: unknown operator pool {pool!r}")
    cap = limit(EXHAUSTIVE_LIMIT)
    if pool == "exhaustive" and n > cap:
        raise CapabilityError(f"exhaustive operator pool is limited to n <= {cap}, got n={n}")

