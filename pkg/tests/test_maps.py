import itertools

import pytest

from topoforge import oracle
from topoforge.errors import InputError
from topoforge.maps import (
    FiniteFunction,
    ProductSpace,
    all_functions,
    box_mask,
    equalizer,
    finite_subcover,
    graph_function,
    graph_mask,
    graph_preimages,
    has_contra_T12_closed_graph,
    is_class_continuous,
    is_continuous,
    is_contra_b_continuous,
    is_contra_compact,
    is_contra_compact_subset,
    is_contra_continuous,
    is_contra_pre_continuous,
    is_contra_semi_continuous,
    is_contra_T12_continuous,
    is_pointwise_class_continuous,
    is_T12_connected,
    is_urysohn,
    preimage,
    product_topology,
)
from topoforge.operators import BiOperatorSpace, make_builtin
from topoforge.setcore import FiniteTopology, enumerate_topologies, is_topology

from conftest import builtin_bispaces, small_topologies


def identity_bi(top):
    idt = make_builtin("identity", top)
    return BiOperatorSpace(top, idt, idt)


def test_function_validation():
    with pytest.raises(InputError, match=r"images\[1\]"):
        FiniteFunction(2, 2, (0, 2))
    with pytest.raises(InputError, match="length"):
        FiniteFunction(2, 2, (0,))
    f = FiniteFunction(3, 2, (1, 1, 0))
    assert FiniteFunction.from_json(f.to_json()) == f
    with pytest.raises(InputError, match="f.cod_n"):
        FiniteFunction.from_json({"dom_n": 1, "images": [0]}, "f")


def test_all_functions_order():
    fs = all_functions(2, 3)
    assert len(fs) == 9
    assert [f.images for f in fs] == list(itertools.product(range(3), repeat=2))


def test_preimage_examples():
    f = FiniteFunction(3, 2, (1, 1, 0))
    assert preimage(f, 2).mask == 3
    c = FiniteFunction.constant(3, 2, 1)
    assert preimage(c, 2).mask == 7
    idt = FiniteFunction.identity(3)
    assert all(preimage(idt, b).mask == b for b in range(8))


def test_preimage_laws():
    for n, m in itertools.product(range(1, 4), repeat=2):
        full_x, full_y = (1 << n) - 1, (1 << m) - 1
        for f in all_functions(n, m):
            p = f.preimages
            for a, b in itertools.product(range(1 << m), repeat=2):
                assert p[a | b] == p[a] | p[b]
                assert p[a & b] == p[a] & p[b]
                assert p[full_y ^ a] == full_x ^ p[a]


def test_contra_continuity_examples(sierpinski):
    d = FiniteTopology.discrete(3)
    assert is_contra_continuous(FiniteFunction.constant(2, 2, 0), sierpinski, sierpinski)
    assert not is_contra_continuous(FiniteFunction.identity(2), sierpinski, sierpinski)
    assert is_contra_continuous(FiniteFunction.identity(3), d, d)
    with pytest.raises(InputError):
        is_contra_continuous(FiniteFunction.identity(3), sierpinski, d)


def test_continuity_classes_match_oracle():
    for top_x in small_topologies(2):
        sx = oracle.space(top_x)
        for top_y in small_topologies(2):
            sy = oracle.space(top_y)
            for f in all_functions(top_x.n, top_y.n):
                fm = oracle.function_map(f)
                assert is_contra_continuous(f, top_x, top_y) == oracle.contra_continuous(fm, sx, sy)
                for kind, fn, naive in (("semi", is_contra_semi_continuous, sx.semi_open),
                                        ("pre", is_contra_pre_continuous, sx.pre_open),
                                        ("b", is_contra_b_continuous, sx.b_open)):
                    closed = lambda a, naive=naive: naive(sx.points - a)
                    assert fn(f, top_x, top_y) == oracle.contra_with(fm, sy, closed)


def test_pointwise_agrees_with_preimage_form():
    for top_x in small_topologies(2):
        for top_y in small_topologies(2):
            for f in all_functions(top_x.n, top_y.n):
                for kind in ("semi", "pre", "b"):
                    assert is_pointwise_class_continuous(f, top_x, top_y, kind) == \
                        is_class_continuous(f, top_x, top_y, kind)


def test_pointwise_examples():
    for top_x in small_topologies(2):
        for top_y in small_topologies(2):
            for f in all_functions(top_x.n, top_y.n):
                if is_continuous(f, top_x, top_y) or len(set(f.images)) == 1:
                    for kind in ("semi", "pre", "b"):
                        assert is_pointwise_class_continuous(f, top_x, top_y, kind)


def test_contra_T12_examples(reference_space):
    for top in small_topologies(3):
        for top_y in small_topologies(2):
            for f in all_functions(top.n, top_y.n):
                assert is_contra_T12_continuous(identity_bi(top), top_y, f)
            c = FiniteFunction.constant(top.n, top_y.n, 0)
            bi = BiOperatorSpace(top, make_builtin("closure", top), make_builtin("closure_interior", top))
            assert is_contra_T12_continuous(bi, top_y, c)
    bi = BiOperatorSpace(reference_space, make_builtin("closure_interior", reference_space),
                         make_builtin("interior_closure", reference_space))
    y = FiniteTopology.discrete(2)
    assert any(not is_contra_T12_continuous(bi, y, f) for f in all_functions(3, 2))


def test_contra_implies_contra_T12():
    for bi in builtin_bispaces(2):
        for top_y in small_topologies(2):
            for f in all_functions(bi.n, top_y.n):
                if is_contra_continuous(f, bi.top, top_y):
                    assert is_contra_T12_continuous(bi, top_y, f)


def test_contra_T12_matches_oracle():
    for bi in builtin_bispaces(2):
        nb = oracle.bi(bi.top, bi.t1, bi.t2)
        for top_y in small_topologies(2):
            for f in all_functions(bi.n, top_y.n):
                got = is_contra_T12_continuous(bi, top_y, f)
                assert got == oracle.contra_t12_continuous(oracle.function_map(f), nb, oracle.space(top_y))


def test_product_examples(sierpinski):
    for a, b in ((1, 2), (2, 2), (1, 3)):
        assert product_topology(FiniteTopology.discrete(a), FiniteTopology.discrete(b)).top == \
            FiniteTopology.discrete(a * b)
        assert product_topology(FiniteTopology.indiscrete(a), FiniteTopology.indiscrete(b)).top == \
            FiniteTopology.indiscrete(a * b)
    prod = product_topology(sierpinski, sierpinski)
    boxes = [box_mask(u, v, 2, 2) for u in sierpinski.opens for v in sierpinski.opens]
    unions = {0}
    for r in range(1, len(boxes) + 1):
        for combo in itertools.combinations(boxes, r):
            acc = 0
            for bx in combo:
                acc |= bx
            unions.add(acc)
    assert set(prod.top.opens.masks) == unions
    assert len(unions) == 6
    assert is_topology(4, prod.top.opens)


def test_product_matches_oracle():
    for x in small_topologies(2):
        for y in small_topologies(2):
            prod = product_topology(x, y)
            naive = oracle.product_of(x, y)
            got = {sum(1 << (a * y.n + b) for a, b in u) for u in naive.opens}
            assert got == set(prod.top.opens.masks)


def test_pairing():
    prod = ProductSpace(2, 3, product_topology(FiniteTopology.discrete(2), FiniteTopology.discrete(3)).top)
    assert prod.pair(1, 2) == 5
    f = FiniteFunction(2, 3, (2, 0))
    assert graph_mask(f) == (1 << 2) | (1 << 3)


def test_graph_function_examples():
    g = graph_function(FiniteFunction(1, 2, (1,)))
    assert g.images == (1,)
    g = graph_function(FiniteFunction.identity(2))
    assert g.images == (0, 3)


def test_graph_function_identity():
    for x in small_topologies(3):
        for y in small_topologies(3):
            for f in all_functions(x.n, y.n):
                g = graph_function(f)
                for u in y.opens.masks:
                    assert f.preimages[u] == g.preimages[box_mask(x.full, u, x.n, y.n)]


def test_graph_preimages_are_preimages_of_product_opens():
    x, y = FiniteTopology.sierpinski(), FiniteTopology.discrete(2)
    prod = product_topology(x, y)
    for f in all_functions(2, 2):
        g = graph_function(f)
        assert set(graph_preimages(x, y, f)) == {g.preimages[o] for o in prod.top.opens.masks}


def test_closed_graph_examples():
    for n in (1, 2, 3):
        d = FiniteTopology.discrete(n)
        for m in (1, 2):
            for f in all_functions(n, m):
                assert has_contra_T12_closed_graph(identity_bi(d), FiniteTopology.discrete(m), f)
    for top in small_topologies(2):
        for f in all_functions(top.n, 2):
            assert not has_contra_T12_closed_graph(identity_bi(top), FiniteTopology.indiscrete(2), f)


def test_closed_graph_forms_agree_with_oracle():
    for bi in builtin_bispaces(2):
        nb = oracle.bi(bi.top, bi.t1, bi.t2)
        for y in small_topologies(2):
            sy = oracle.space(y)
            for f in all_functions(bi.n, y.n):
                img = has_contra_T12_closed_graph(bi, y, f, form="image")
                assert img == has_contra_T12_closed_graph(bi, y, f, form="box")
                assert img == oracle.closed_graph(nb, sy, oracle.function_map(f))


@pytest.mark.slow
def test_closed_graph_forms_agree_n3():
    y = FiniteTopology.from_masks(2, [0, 1, 3])
    for bi in builtin_bispaces(3):
        if bi.n < 3:
            continue
        for f in all_functions(3, 2):
            assert has_contra_T12_closed_graph(bi, y, f, "image") == has_contra_T12_closed_graph(bi, y, f, "box")


def test_contra_compact_always_true():
    for top in small_topologies(3):
        assert is_contra_compact(top)
        for a in range(1 << top.n):
            assert is_contra_compact_subset(top, a)
            if top.n <= 2:
                assert oracle.contra_compact(oracle.space(top), oracle.to_set(a))
    assert finite_subcover([1, 2, 3], 3) is not None
    assert finite_subcover([1], 3) is None
    assert finite_subcover([], 0) == []


def test_urysohn():
    for top in small_topologies(4):
        assert is_urysohn(top) == (len(top.opens) == 1 << top.n)
        if top.n <= 3:
            assert is_urysohn(top) == oracle.urysohn(oracle.space(top))
    assert not is_urysohn(FiniteTopology.sierpinski())


def test_connectedness():
    for top in enumerate_topologies(1):
        assert is_T12_connected(identity_bi(top))
        assert is_T12_connected(identity_bi(top), "literal")
    for top in small_topologies(3):
        if top.n >= 2:
            assert not is_T12_connected(identity_bi(top))
    for bi in builtin_bispaces(3):
        nb = oracle.bi(bi.top, bi.t1, bi.t2)
        for variant in ("disjoint", "literal"):
            assert is_T12_connected(bi, variant) == oracle.t12_connected(nb, variant)
        proper = [u for u in bi.t12_members if u not in (0, bi.full)]
        if proper:
            assert not is_T12_connected(bi, "literal")


def test_equalizer():
    f, g = FiniteFunction(2, 2, (0, 1)), FiniteFunction(2, 2, (0, 0))
    assert equalizer(f, g).mask == 1
    assert equalizer(f, f).mask == 3
    assert equalizer(FiniteFunction.constant(3, 2, 0), FiniteFunction.constant(3, 2, 1)).mask == 0
    with pytest.raises(InputError):
        equalizer(f, FiniteFunction(3, 2, (0, 0, 0)))
