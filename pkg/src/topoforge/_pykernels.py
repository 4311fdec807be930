"""Pure-Python kernels.

These mirror ``_ckernels.pyx`` function for function. Every argument is a
plain integer or a sequence of integer masks; every result is an ``int``,
``bool`` or ``list[int]``. Inputs are trusted: callers validate ranges.
"""

from __future__ import annotations

from typing import Sequence


def is_topology(n: int, members: Sequence[int]) -> bool:
    full = (1 << n) - 1
    present = bytearray(1 << n)
    for u in members:
        present[u] = 1
    if not present[0] or not present[full]:
        return False
    ms = list(members)
    for i, u in enumerate(ms):
        for v in ms[i + 1:]:
            if not present[u | v] or not present[u & v]:
                return False
    return True


def enumerate_topologies(n: int) -> list[int]:
    size = 1 << n
    full = size - 1
    need = 1 | (1 << full)
    found = []
    for fam in range(1 << size):
        if fam & need != need:
            continue
        members = [k for k in range(size) if fam >> k & 1]
        if is_topology(n, members):
            found.append(fam)
    return found


def interior_table(n: int, opens: Sequence[int]) -> list[int]:
    out = []
    for a in range(1 << n):
        acc = 0
        for u in opens:
            if u & ~a == 0:
                acc |= u
        out.append(acc)
    return out


def closure_table(n: int, opens: Sequence[int]) -> list[int]:
    full = (1 << n) - 1
    closed = [full ^ u for u in opens]
    out = []
    for a in range(1 << n):
        acc = full
        for c in closed:
            if a & ~c == 0:
                acc &= c
        out.append(acc)
    return out


def star_members(n: int, img1: Sequence[int], img2: Sequence[int]) -> list[int]:
    return [a for a in range(1 << n) if a & ~(img1[a] | img2[a]) == 0]


def open_core_table(n: int, members: Sequence[int]) -> list[int]:
    out = []
    for a in range(1 << n):
        acc = 0
        for u in members:
            if u & ~a == 0:
                acc |= u
        out.append(acc)
    return out


def avoid_closure_table(n: int, members: Sequence[int]) -> list[int]:
    full = (1 << n) - 1
    out = []
    for b in range(1 << n):
        acc = 0
        for u in members:
            if u & b == 0:
                acc |= u
        out.append(full ^ acc)
    return out


def is_monotone(n: int, img: Sequence[int]) -> bool:
    for a in range(1 << n):
        ta = img[a]
        for i in range(n):
            bit = 1 << i
            if not a & bit and ta & ~img[a | bit]:
                return False
    return True


def distributes(n: int, img: Sequence[int], opens: Sequence[int]) -> bool:
    for w in opens:
        tw = img[w]
        for b in range(1 << n):
            if img[w & b] != tw & img[b]:
                return False
    return True


def preserves_unions(n: int, img: Sequence[int]) -> bool:
    size = 1 << n
    for a in range(size):
        ta = img[a]
        for b in range(a + 1, size):
            if img[a | b] != ta | img[b]:
                return False
    return True


def preimage_table(images: Sequence[int], m: int) -> list[int]:
    out = []
    for b in range(1 << m):
        acc = 0
        for x, y in enumerate(images):
            if b >> y & 1:
                acc |= 1 << x
        out.append(acc)
    return out


def union_closure(n: int, members: Sequence[int]) -> list[int]:
    closed = {0}
    for u in members:
        closed |= {s | u for s in closed}
    return sorted(closed)
