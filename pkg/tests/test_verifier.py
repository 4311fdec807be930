import hashlib
import io
import itertools
import json

import pytest

from topoforge import oracle, verifier
from topoforge.errors import CapabilityError, CrossValidationError, InputError
from topoforge.maps import FiniteFunction
from topoforge.operators import BiOperatorSpace, all_associated_operators, make_builtin
from topoforge.setcore import FiniteTopology, enumerate_topologies
from topoforge.verifier import (
    Instance,
    SweepConfig,
    TheoremId,
    check,
    classify,
    cross_validate,
    find_intersection_witness,
    iter_sweep,
    resolve_theorem,
    run_sweep,
    verify_witness,
)


def ops(top, k1, k2):
    return make_builtin(k1, top), make_builtin(k2, top)


def test_resolve_theorem():
    assert resolve_theorem("T48") is TheoremId.T48_graph_function
    assert resolve_theorem("C412_dense_agreement") is TheoremId.C412_dense_agreement
    assert resolve_theorem("r33") is TheoremId.R33_chain
    with pytest.raises(InputError, match="ambiguous"):
        resolve_theorem("L42")
    with pytest.raises(InputError, match="unknown"):
        resolve_theorem("T99")


def test_classification_algebra():
    assert classify(False, False) == classify(False, True) == "vacuous"
    assert classify(True, True) == "confirmed"
    assert classify(True, False) == "counterexample"
    for theorem in TheoremId:
        for v in iter_sweep(theorem, SweepConfig(max_n=2)):
            assert (v.classification == "counterexample") == (v.hypothesis_holds and not v.conclusion_holds)
            assert (v.classification == "vacuous") == (not v.hypothesis_holds)


@pytest.mark.parametrize("theorem", list(TheoremId))
def test_every_verdict_cross_validates_small(theorem):
    for v in iter_sweep(theorem, SweepConfig(max_n=2)):
        assert cross_validate(v), v.key


@pytest.mark.parametrize("theorem", [TheoremId.L42_part1, TheoremId.R43_intersection_witness,
                                     TheoremId.T46_graph_preimage, TheoremId.T414_not_discrete])
def test_random_pool_cross_validates(theorem):
    config = SweepConfig(min_n=3, max_n=3, pool="random", random_k=2, seed=11)
    seen = 0
    for v in iter_sweep(theorem, config):
        # the oracle is slow; sample the stream
        seen += 1
        if seen % 97 == 0 or v.classification == "counterexample":
            assert cross_validate(v, strict=True)


def test_check_examples():
    top = FiniteTopology.discrete(2)
    idt = make_builtin("identity", top)
    inst = Instance(top, idt, idt, FiniteTopology.discrete(2), FiniteFunction.identity(2))
    assert check("T414", inst).classification == "vacuous"
    same = FiniteFunction(2, 2, (1, 0))
    v = check("T49", Instance(top, idt, idt, FiniteTopology.discrete(2), same, same))
    assert v.classification == "confirmed"
    assert v.witness is None


def test_t48_never_counterexample_on_exhaustive_pool():
    summary = run_sweep("T48", SweepConfig(max_n=2, pool="exhaustive"))
    assert summary["counterexamples"] == 0
    assert summary["instances"] > 100000


def test_shape_errors(sierpinski):
    t = make_builtin("closure", sierpinski)
    with pytest.raises(InputError, match="top_y"):
        check("T46", Instance(sierpinski, t, t))
    with pytest.raises(InputError, match="g"):
        check("T49", Instance(sierpinski, t, t, sierpinski, FiniteFunction.identity(2)))
    with pytest.raises(InputError, match="f.dom_n"):
        check("T48", Instance(sierpinski, t, t, sierpinski, FiniteFunction.identity(3)))
    with pytest.raises(InputError, match="variant"):
        check("T48", Instance(sierpinski, t, t, sierpinski, FiniteFunction.identity(2)), variant="union")


def test_variants():
    top = FiniteTopology.sierpinski()
    t1, t2 = ops(top, "closure", "interior_closure")
    inst = Instance(top, t1, t2)
    mono = check("L42_part2", inst)
    union = check("L42_part2", inst, variant="union")
    assert set(mono.parts["hypothesis"]) == {"t1_monotone", "t2_monotone"}
    assert set(union.parts["hypothesis"]) == {"t1_preserves_unions", "t2_preserves_unions"}
    assert union.key.endswith("variant=union")
    assert cross_validate(union)
    summary = run_sweep("L42_part2", SweepConfig(max_n=3, variant="union"))
    assert summary["counterexamples"] == 0
    lit = run_sweep("T414", SweepConfig(max_n=2, variant="literal"))
    assert lit["variant"] == "literal"


def test_c412_with_given_dense_set(reference_space):
    t1, t2 = ops(reference_space, "identity", "identity")
    y = FiniteTopology.discrete(2)
    f = g = FiniteFunction.constant(3, 2, 1)
    inst = Instance(reference_space, t1, t2, y, f, g, a=7)
    v = check("C412", inst)
    assert v.classification == "confirmed"
    assert v.parts["hypothesis"]["agree_on_T12_dense_set"]
    # a proper subset is never dense under identity operators
    v = check("C412", Instance(reference_space, t1, t2, y, f, g, a=3))
    assert not v.parts["hypothesis"]["agree_on_T12_dense_set"]
    assert cross_validate(v)


def test_injected_fault_is_caught(monkeypatch):
    real = verifier._CHECKERS[TheoremId.T48_graph_function]

    def broken(inst, variant):
        hyp, concl, w = real(inst, variant)
        return hyp, {"contra_T12_continuous": not concl["contra_T12_continuous"]}, w

    monkeypatch.setitem(verifier._CHECKERS, TheoremId.T48_graph_function, broken)
    top = FiniteTopology.sierpinski()
    t1, t2 = ops(top, "closure", "closure")
    v = check("T48", Instance(top, t1, t2, top, FiniteFunction.identity(2)))
    assert cross_validate(v) is False
    with pytest.raises(CrossValidationError) as err:
        cross_validate(v, strict=True)
    assert err.value.predicate == "contra_T12_continuous"
    # sweeps refuse to emit a counterexample the oracle disputes
    with pytest.raises(CrossValidationError):
        for _ in iter_sweep("T48", SweepConfig(max_n=2)):
            pass


def _report(theorem, config):
    buf = io.StringIO()
    run_sweep(theorem, config, buf)
    return buf.getvalue()


def test_reports_are_deterministic():
    config = SweepConfig(max_n=2, pool="random", seed=7, random_k=5)
    a = _report("T46", config)
    b = _report("T46", config)
    assert hashlib.sha256(a.encode()).digest() == hashlib.sha256(b.encode()).digest()
    lines = a.splitlines()
    summary = json.loads(lines[-1])
    assert summary["seed"] == 7
    assert summary["instances"] == len(lines) - 1
    first = json.loads(lines[0])
    assert set(first) == {"theorem", "instance", "hypothesis_holds", "conclusion_holds", "classification", "witness"}


def test_workers_do_not_change_report():
    config = SweepConfig(max_n=2)
    assert _report("C412", config) == _report("C412", SweepConfig(max_n=2, workers=2))


def test_config_limits():
    with pytest.raises(CapabilityError):
        run_sweep("T46", SweepConfig(max_n=4))
    with pytest.raises(CapabilityError):
        run_sweep("R33", SweepConfig(max_n=5))
    with pytest.raises(CapabilityError):
        run_sweep("L42_part1", SweepConfig(max_n=3, pool="exhaustive"))
    with pytest.raises(InputError):
        run_sweep("T46", SweepConfig(max_n=2, pool="bogus"))
    with pytest.raises(InputError):
        run_sweep("T46", SweepConfig(max_n=0))


def test_subset_only_sweep_reaches_n4():
    summary = run_sweep("L42_part1", SweepConfig(min_n=4, max_n=4))
    assert summary["instances"] == 355 * 25
    assert summary["counterexamples"] == 0


def test_instance_json_roundtrip(reference_space):
    t1, t2 = ops(reference_space, "closure_interior", "interior_closure")
    inst = Instance(reference_space, t1, t2, FiniteTopology.discrete(2), FiniteFunction(3, 2, (0, 1, 1)),
                    FiniteFunction(3, 2, (0, 0, 1)), a=5)
    back = Instance.from_json(json.loads(json.dumps(inst.to_json())))
    assert back == inst
    assert back.key() == inst.key()
    with pytest.raises(InputError, match="a"):
        Instance.from_json({"space": reference_space.to_json(), "a": 8})
    with pytest.raises(InputError, match="space"):
        Instance.from_json({})


def test_reference_witness(reference_space):
    t1, t2 = ops(reference_space, "closure_interior", "interior_closure")
    w = find_intersection_witness(spaces=[BiOperatorSpace(reference_space, t1, t2)])
    assert (w.a, w.b, w.intersection) == (5, 6, 4)
    assert verify_witness(w)
    assert w.to_json()["cross_validated"] is True


def test_default_witness_search(reference_space):
    w = find_intersection_witness(SweepConfig(max_n=3))
    assert w.top == reference_space
    assert (w.a, w.b, w.intersection) == (5, 6, 4)
    # the first pool pair is (interior_closure, closure_interior) which has the same T12 family
    assert {w.t1.builtin, w.t2.builtin} == {"interior_closure", "closure_interior"}
    assert verify_witness(w)


def test_identity_operators_have_no_witness():
    for top in itertools.chain(*(enumerate_topologies(n) for n in (1, 2, 3))):
        idt = make_builtin("identity", top)
        assert find_intersection_witness(spaces=[BiOperatorSpace(top, idt, idt)]) is None


def test_exhaustive_n2_has_no_witness():
    # locked result: on two points every intersection of T12-open sets is T12-open
    assert find_intersection_witness(SweepConfig(max_n=2, pool="exhaustive")) is None
    for top in enumerate_topologies(2):
        pool = list(all_associated_operators(top))
        for t1, t2 in itertools.product(pool, repeat=2):
            nb = oracle.bi(top, t1, t2)
            opens = nb.t12_opens
            assert all(nb.t12_open(a & b) for a in opens for b in opens)


def test_r43_counterexamples_are_the_witnesses():
    bad = [v for v in iter_sweep("R43", SweepConfig(max_n=3)) if v.classification == "counterexample"]
    assert len(bad) == 18
    for v in bad:
        w = v.witness
        assert w["intersection"] == w["a"] & w["b"]
        assert cross_validate(v, strict=True)
