"""Finite carriers, subsets, set families and topologies.

Point ``i`` of a carrier of size ``n`` is bit ``i`` of a subset mask, and a
family of subsets is an integer whose bit ``k`` is set when the subset with
mask ``k`` belongs to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from topoforge import kernels
from topoforge.errors import MAX_ENUMERATION, CapabilityError, InputError, check_carrier, limit

# above this size closures are computed per call instead of tabulated
TABLE_LIMIT = 10


def points_label(mask: int) -> str:
    """Human-readable point list, e.g. ``{0, 2}``."""
    return "{" + ", ".join(str(i) for i in iter_points(mask)) + "}"


def iter_points(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def check_mask(mask: object, n: int, what: str = "subset") -> int:
    if isinstance(mask, PointSet):
        if mask.n != n:
            raise InputError(f"{what}: carrier size {mask.n} does not match {n}")
        return mask.mask
    if not isinstance(mask, int) or isinstance(mask, bool):
        raise InputError(f"{what}: expected an integer mask, got {mask!r}")
    if mask < 0 or mask >> n:
        raise InputError(f"{what}: mask {mask} out of range for n={n}")
    return mask


@dataclass(frozen=True, order=True)
class PointSet:
    """A subset of the carrier ``{0, ..., n-1}``."""

    mask: int
    n: int

    def __post_init__(self):
        check_carrier(self.n)
        check_mask(self.mask, self.n)

    @classmethod
    def of(cls, n: int, points: Iterable[int]) -> PointSet:
        mask = 0
        for p in points:
            if not 0 <= p < n:
                raise InputError(f"point {p} out of range for n={n}")
            mask |= 1 << p
        return cls(mask, n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def complement(self) -> PointSet:
        return PointSet(self.full ^ self.mask, self.n)

    def points(self) -> tuple[int, ...]:
        return tuple(iter_points(self.mask))

    def issubset(self, other: PointSet) -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, point: int) -> bool:
        return bool(self.mask >> point & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_points(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: PointSet) -> PointSet:
        return PointSet(self.mask | other.mask, self.n)

    def __and__(self, other: PointSet) -> PointSet:
        return PointSet(self.mask & other.mask, self.n)

    def __str__(self) -> str:
        return points_label(self.mask)


@dataclass(frozen=True)
class SetFamily:
    """A family of subsets of an ``n``-point carrier, stored as one bitset."""

    n: int
    bits: int

    def __post_init__(self):
        check_carrier(self.n)
        if not isinstance(self.bits, int) or self.bits < 0 or self.bits >> (1 << self.n):
            raise InputError(f"family bitset out of range for n={self.n}")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> SetFamily:
        check_carrier(n)
        bits = 0
        for k, m in enumerate(masks):
            bits |= 1 << check_mask(m, n, f"member[{k}]")
        return cls(n, bits)

    @classmethod
    def from_flags(cls, n: int, flags: Sequence[object]) -> SetFamily:
        """Build from a membership vector of length ``2**n``."""
        check_carrier(n)
        if len(flags) != 1 << n:
            raise InputError(f"family length {len(flags)} != 2**{n}")
        return cls(n, sum(1 << k for k, flag in enumerate(flags) if flag))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        bits = self.bits
        return tuple(k for k in range(1 << self.n) if bits >> k & 1)

    @cached_property
    def table(self) -> bytes:
        table = bytearray(1 << self.n)
        for m in self.masks:
            table[m] = 1
        return bytes(table)

    def __contains__(self, mask: object) -> bool:
        if isinstance(mask, PointSet):
            mask = mask.mask
        return bool(self.bits >> mask & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def complements(self) -> SetFamily:
        full = (1 << self.n) - 1
        return SetFamily.from_masks(self.n, (full ^ m for m in self.masks))


def _family_masks(n: int, fam: SetFamily | Sequence[object]) -> tuple[int, ...]:
    if isinstance(fam, SetFamily):
        if fam.n != n:
            raise InputError(f"family carrier size {fam.n} does not match {n}")
        return fam.masks
    return SetFamily.from_flags(n, fam).masks


def is_topology(n: int, fam: SetFamily | Sequence[object]) -> bool:
    """True iff ``fam`` contains the empty set and ``X`` and is closed under
    pairwise unions and intersections.

    ``fam`` is a :class:`SetFamily` or a membership vector of length ``2**n``.
    """
    check_carrier(n)
    return kernels.is_topology(n, _family_masks(n, fam))


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on ``{0, ..., n-1}`` given by its open sets."""

    n: int
    opens: SetFamily

    def __post_init__(self):
        if self.opens.n != self.n:
            raise InputError(f"opens: carrier size {self.opens.n} does not match n={self.n}")
        if not kernels.is_topology(self.n, self.opens.masks):
            raise InputError("opens: family is not a topology")

    @classmethod
    def from_masks(cls, n: int, opens: Iterable[int]) -> FiniteTopology:
        return cls(n, SetFamily.from_masks(n, opens))

    @classmethod
    def _trusted(cls, n: int, bits: int) -> FiniteTopology:
        # skips the axiom check; only for families that are topologies by construction
        top = object.__new__(cls)
        object.__setattr__(top, "n", n)
        object.__setattr__(top, "opens", SetFamily(n, bits))
        return top

    @classmethod
    def discrete(cls, n: int) -> FiniteTopology:
        return cls._trusted(n, (1 << (1 << n)) - 1)

    @classmethod
    def indiscrete(cls, n: int) -> FiniteTopology:
        check_carrier(n)
        return cls._trusted(n, 1 | 1 << ((1 << n) - 1))

    @classmethod
    def sierpinski(cls) -> FiniteTopology:
        """Two points, opens ``{}, {0}, {0, 1}``."""
        return cls.from_masks(2, [0, 1, 3])

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def key(self) -> str:
        return f"{self.n}:{self.opens.bits}"

    def is_open(self, mask: int) -> bool:
        return bool(self.opens.bits >> mask & 1)

    def is_closed(self, mask: int) -> bool:
        return bool(self.opens.bits >> (self.full ^ mask) & 1)

    @cached_property
    def closed(self) -> SetFamily:
        return self.opens.complements()

    @cached_property
    def closure_table(self) -> tuple[int, ...]:
        return tuple(kernels.closure_table(self.n, self.opens.masks))

    @cached_property
    def interior_table(self) -> tuple[int, ...]:
        return tuple(kernels.interior_table(self.n, self.opens.masks))

    def closure_mask(self, mask: int) -> int:
        if self.n <= TABLE_LIMIT:
            return self.closure_table[mask]
        acc = self.full
        for c in self.closed.masks:
            if mask & ~c == 0:
                acc &= c
        return acc

    def interior_mask(self, mask: int) -> int:
        if self.n <= TABLE_LIMIT:
            return self.interior_table[mask]
        acc = 0
        for u in self.opens.masks:
            if u & ~mask == 0:
                acc |= u
        return acc

    def to_json(self) -> dict:
        return {"n": self.n, "opens": list(self.opens.masks)}

    @classmethod
    def from_json(cls, obj: object) -> FiniteTopology:
        if not isinstance(obj, dict):
            raise InputError("topology: expected a JSON object")
        n = obj.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError("n: expected an integer carrier size")
        opens = obj.get("opens")
        if not isinstance(opens, list):
            raise InputError("opens: expected a list of subset masks")
        masks = [check_mask(m, n, f"opens[{k}]") for k, m in enumerate(opens)]
        if masks != sorted(set(masks)):
            raise InputError("opens: masks must be strictly ascending")
        return cls.from_masks(n, masks)


def closure(top: FiniteTopology, a: PointSet | int) -> PointSet:
    """Smallest closed superset of ``a``."""
    return PointSet(top.closure_mask(check_mask(a, top.n)), top.n)


def interior(top: FiniteTopology, a: PointSet | int) -> PointSet:
    """Largest open subset of ``a``."""
    return PointSet(top.interior_mask(check_mask(a, top.n)), top.n)


def closed_sets(top: FiniteTopology) -> SetFamily:
    return top.closed


def enumerate_topologies(n: int) -> Iterator[FiniteTopology]:
    """Every labelled topology on ``n`` points, ascending by encoding.

    The encoding is the ascending list of open masks; lists compare
    lexicographically, so ``[0, 1, 3]`` precedes ``[0, 3]``.
    """
    cap = limit(MAX_ENUMERATION)
    if n > cap:
        raise CapabilityError(f"topology enumeration is limited to n <= {cap}, got n={n}")
    check_carrier(n)
    for bits in _topology_bits(n):
        yield FiniteTopology._trusted(n, bits)


@lru_cache(maxsize=None)
def _topology_bits(n: int) -> tuple[int, ...]:
    return tuple(sorted(kernels.enumerate_topologies(n), key=_family_key))


def _family_key(bits: int) -> tuple[int, ...]:
    return tuple(k for k in range(bits.bit_length()) if bits >> k & 1)
