import os
import subprocess
import sys

from hypothesis import given, settings
from hypothesis import strategies as st

from topoforge import kernels
from topoforge.setcore import enumerate_topologies


@st.composite
def tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    size = 1 << n
    img = draw(st.lists(st.integers(0, size - 1), min_size=size, max_size=size))
    return n, img


@st.composite
def families(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    members = draw(st.sets(st.integers(0, (1 << n) - 1)))
    return n, sorted(members)


def test_enumeration_agrees(backend):
    for n in range(1, 5):
        assert backend.enumerate_topologies(n) == kernels.backends()["python"].enumerate_topologies(n)


def test_selected_backend_is_known():
    assert kernels.BACKEND in kernels.backends()


def test_pure_python_switch():
    env = dict(os.environ, TOPOFORGE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from topoforge import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@settings(max_examples=150, deadline=None)
@given(families())
def test_is_topology_definition(fam):
    n, members = fam
    s = set(members)
    expected = 0 in s and (1 << n) - 1 in s and all(u | v in s and u & v in s for u in s for v in s)
    for mod in kernels.backends().values():
        assert mod.is_topology(n, members) == expected


@settings(max_examples=150, deadline=None)
@given(families())
def test_family_tables_definition(fam):
    n, members = fam
    size = 1 << n
    full = size - 1
    for mod in kernels.backends().values():
        core = mod.open_core_table(n, members)
        avoid = mod.avoid_closure_table(n, members)
        for a in range(size):
            assert core[a] == _union(u for u in members if u & ~a == 0)
            assert avoid[a] == full ^ _union(u for u in members if u & a == 0)
        assert sorted(mod.union_closure(n, members)) == sorted(_union_closure(members))


@settings(max_examples=150, deadline=None)
@given(tables())
def test_operator_kernels_definition(tab):
    n, img = tab
    size = 1 << n
    monotone = all(img[a] & ~img[b] == 0 for a in range(size) for b in range(size) if a & ~b == 0)
    unions = all(img[a | b] == img[a] | img[b] for a in range(size) for b in range(size))
    opens = list(range(0, size, 3)) + [size - 1]
    dist = all(img[w & b] == img[w] & img[b] for w in opens for b in range(size))
    second = img[::-1]
    for mod in kernels.backends().values():
        assert mod.is_monotone(n, img) == monotone
        assert mod.preserves_unions(n, img) == unions
        assert mod.distributes(n, img, opens) == dist
        assert mod.star_members(n, img, second) == [a for a in range(size) if a & ~(img[a] | second[a]) == 0]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.lists(st.integers(0, m - 1), min_size=1, max_size=5).map(lambda xs: (m, xs))))
def test_preimage_table_definition(case):
    m, images = case
    for mod in kernels.backends().values():
        table = mod.preimage_table(images, m)
        for b in range(1 << m):
            assert table[b] == sum(1 << x for x, y in enumerate(images) if b >> y & 1)


def test_closure_interior_tables_agree(backend):
    for top in enumerate_topologies(4):
        opens = list(top.opens.masks)
        assert backend.closure_table(4, opens) == list(top.closure_table)
        assert backend.interior_table(4, opens) == list(top.interior_table)


def _union(masks):
    acc = 0
    for m in masks:
        acc |= m
    return acc


def _union_closure(members):
    # the empty union is always present
    out = set(members) | {0}
    changed = True
    while changed:
        changed = False
        for u in list(out):
            for v in list(out):
                if u | v not in out:
                    out.add(u | v)
                    changed = True
    return out


def test_reports_identical_across_backends():
    cmd = [sys.executable, "-m", "topoforge", "sweep", "--theorem", "C412", "--max-n", "2"]
    pure = subprocess.run(cmd, env=dict(os.environ, TOPOFORGE_PURE_PYTHON="1"),
                          capture_output=True, text=True, check=True).stdout
    default = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert pure == default
    assert pure.count("\n") > 1000
