import itertools
import random

import pytest

from topoforge import oracle
from topoforge.errors import CapabilityError, InputError
from topoforge.operators import (
    BUILTIN_KINDS,
    BiOperatorSpace,
    OperatorTable,
    all_associated_operators,
    distributes_over_open_intersection,
    is_associated,
    is_monotone,
    make_builtin,
    operator_pairs,
    operator_pool,
    preserves_binary_unions,
    random_associated_operator,
)
from topoforge.setcore import FiniteTopology, enumerate_topologies

from conftest import small_topologies


def test_table_validation():
    with pytest.raises(InputError, match="length"):
        OperatorTable(2, (0, 1, 2))
    with pytest.raises(InputError, match=r"images\[1\]"):
        OperatorTable(1, (0, 2))


def test_association_examples(sierpinski):
    for top in small_topologies(3):
        for kind in BUILTIN_KINDS:
            assert is_associated(top, make_builtin(kind, top))
    empty = OperatorTable(2, (0, 0, 0, 0))
    assert not is_associated(sierpinski, empty)
    with pytest.raises(InputError):
        is_associated(sierpinski, OperatorTable(1, (0, 1)))


def test_builtin_examples(sierpinski):
    d2 = FiniteTopology.discrete(2)
    assert make_builtin("interior_closure", d2)(1) == 1
    assert make_builtin("interior_closure", sierpinski)(1) == 3
    assert make_builtin("closure_interior", sierpinski)(2) == 0
    with pytest.raises(InputError, match="unknown"):
        make_builtin("bogus", sierpinski)


def test_property_probes_match_oracle():
    for top in small_topologies(3):
        sp = oracle.space(top)
        kinds = BUILTIN_KINDS + ("interior",)
        for kind in kinds:
            t = make_builtin(kind, top)
            nt = oracle.operator(t)
            assert is_monotone(t) == oracle.monotone(sp.points, nt)
            assert preserves_binary_unions(t) == oracle.preserves_unions(sp.points, nt)
            assert distributes_over_open_intersection(top, t) == oracle.distributes(sp, nt)


def test_probe_examples(sierpinski):
    assert is_monotone(OperatorTable(1, (0, 1)))
    assert not is_monotone(OperatorTable(1, (1, 0)))
    for top in small_topologies(3):
        for kind in BUILTIN_KINDS:
            assert is_monotone(make_builtin(kind, top))
        assert preserves_binary_unions(make_builtin("closure", top))
        assert distributes_over_open_intersection(top, make_builtin("identity", top))
        assert distributes_over_open_intersection(top, make_builtin("constant_full", top))
    assert not preserves_binary_unions(make_builtin("interior", sierpinski))


def test_monotone_implies_union_containment():
    rng = random.Random(5)
    for top in small_topologies(3):
        for _ in range(20):
            t = random_associated_operator(top, rng)
            if not is_monotone(t):
                continue
            size = 1 << top.n
            for a, b in itertools.product(range(size), repeat=2):
                assert (t(a) | t(b)) & ~t(a | b) == 0


def test_random_operators_are_associated_and_seeded():
    for top in small_topologies(3):
        a = operator_pool(top, "random", seed=3, k=10)
        b = operator_pool(top, "random", seed=3, k=10)
        c = operator_pool(top, "random", seed=4, k=10)
        assert a == b
        assert len(a) == len(BUILTIN_KINDS) + 10
        assert all(is_associated(top, t) for t in a)
        if top.n >= 2:
            assert a != c


def test_exhaustive_pool_size():
    # every subset image is free except the opens, whose images must contain them
    for top in enumerate_topologies(2):
        ops = list(all_associated_operators(top))
        expected = 1
        for m in range(4):
            expected *= 2 ** (2 - bin(m).count("1")) if top.is_open(m) else 4
        assert len(ops) == expected
        assert len(set(ops)) == len(ops)
        naive = [t for t in itertools.product(range(4), repeat=4)
                 if all(w & ~t[w] == 0 for w in top.opens.masks)]
        assert [o.images for o in ops] == naive
    everything = operator_pool(FiniteTopology.indiscrete(2), "exhaustive")
    assert len(everything) == 256
    assert [t.images for t in everything] == list(itertools.product(range(4), repeat=4))
    with pytest.raises(CapabilityError):
        list(all_associated_operators(FiniteTopology.discrete(3)))


def test_pair_pools():
    top = FiniteTopology.sierpinski()
    assert len(operator_pairs(top, "builtin")) == 25
    assert len(operator_pairs(top, "random", k=7)) == 32
    with pytest.raises(InputError):
        operator_pairs(top, "nope")


def test_bispace_rejects_unassociated(sierpinski):
    idt = make_builtin("identity", sierpinski)
    with pytest.raises(InputError, match="t2"):
        BiOperatorSpace(sierpinski, idt, OperatorTable(2, (0, 0, 0, 0)))


def test_json_roundtrip(sierpinski):
    t = make_builtin("closure", sierpinski)
    assert t.to_json() == {"builtin": "closure"}
    assert OperatorTable.from_json(t.to_json(), sierpinski) == t
    tab = t.to_json(tabulate=True)
    assert tab == {"n": 2, "images": [0, 3, 2, 3]}
    assert OperatorTable.from_json(tab) == t
    with pytest.raises(InputError, match="space"):
        OperatorTable.from_json({"builtin": "closure"})
    with pytest.raises(InputError, match="operator.n"):
        OperatorTable.from_json({"n": 1, "images": [0, 1]}, sierpinski)
