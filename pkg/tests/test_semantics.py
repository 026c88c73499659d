import numpy as np
import pytest

from int2gc.algebra import (H2GCAlgebra, chain, check_identity, enumerate_h2gc,
                            heyting_from_lattice)
from int2gc.formula import enumerate_formulas, parse
from int2gc.proof.systems import get_system
from int2gc.semantics import (UnboundVariable, check_axiom_suite, eval_formula,
                              evaluate_all, find_algebraic_countermodel,
                              valid_in_algebra)

from oracles import eval_brute


def test_three_chain_axiom5(three_chain):
    f = "G(p->q) -> (F p -> F q)"
    assert three_chain.names[eval_formula(f, three_chain, {"p": "1", "q": "u"})] == "u"
    v = valid_in_algebra(f, three_chain)
    # the first witness in lexicographic order; the (1, u) valuation fails too
    assert not v.ok and v.witness == {"p": "u", "q": "0"}
    assert eval_formula(f, three_chain, v.witness) != three_chain.top


def test_constants(three_chain):
    assert eval_formula("top", three_chain, {}) == three_chain.top
    assert eval_formula("bot", three_chain, {}) == three_chain.bottom


def test_identity_algebra_unit():
    alg = H2GCAlgebra.make(heyting_from_lattice(chain(3)))
    assert eval_formula("p -> H F p", alg, {"p": "u"}) == alg.top


def test_unbound(three_chain):
    with pytest.raises(UnboundVariable):
        eval_formula("p & q", three_chain, {"p": "u"})


def test_eval_matches_recursive_oracle():
    forms = list(enumerate_formulas(["p"], 2))[::7]
    for alg in list(enumerate_h2gc(3))[::4]:
        for e in alg.names:
            memo = {}
            for f in forms:
                assert eval_formula(f, alg, {"p": e}, memo) == eval_brute(f, alg, {"p": e})


def test_evaluate_all_matches_pointwise(three_chain):
    f = parse("G(p -> q) -> (F p -> F q) | ~r")
    vals = evaluate_all(f, three_chain, ["p", "q", "r"])
    for idx in np.ndindex(vals.shape):
        v = dict(zip("pqr", idx))
        assert vals[idx] == eval_formula(f, three_chain, v)


def test_unit_valid_everywhere():
    for alg in enumerate_h2gc(4):
        assert valid_in_algebra("p -> H F p", alg)
        assert valid_in_algebra("p -> p", alg)


def test_fs1_identity_is_axiom_validity():
    for alg in enumerate_h2gc(4):
        assert check_identity(alg, "fs1") == valid_in_algebra(
            "F(p->q) -> (G p -> F q)", alg).ok


def test_countermodels():
    assert find_algebraic_countermodel("p -> H F p", 5) is None
    alg, v = find_algebraic_countermodel("bot", 3)
    assert alg.n == 2 and v == {}
    alg, v = find_algebraic_countermodel("G(p|q) -> G p | F q", 5, require_fs=True)
    assert alg.n <= 5 and not valid_in_algebra("G(p|q) -> G p | F q", alg)


def test_parallel_search_gives_same_first_witness():
    f = "G(p|q) -> G p | F q"
    a = find_algebraic_countermodel(f, 4, require_fs=True)
    b = find_algebraic_countermodel(f, 4, require_fs=True, jobs=2, chunk=8)
    assert a[0].signature() == b[0].signature() and a[1] == b[1]


def test_axiom_suites():
    assert check_axiom_suite("Int2GC", 4).ok
    assert check_axiom_suite("Int2GC+FS", 4).ok
    rep = check_axiom_suite("IKt-Ewald", 3, enumerate_h2gc(3))
    assert not rep.ok
    assert "IK11" in {name for name, _, _ in rep.failures}


def test_axiom11_split(three_chain):
    ik = get_system("IKt-Ewald")
    from int2gc.semantics import _schema_instance
    inst = _schema_instance(ik.axioms["IK11"])
    assert all(valid_in_algebra(inst, a) for a in enumerate_h2gc(3, True))
    assert not valid_in_algebra(inst, three_chain)


def test_empty_system_report():
    from dataclasses import replace
    empty = replace(get_system("Int2GC"), axioms={})
    rep = check_axiom_suite(empty, 2)
    assert rep.ok and rep.checked == 0


def test_rules_preserve_validity_per_algebra():
    pairs = [("p", "q"), ("p & q", "p"), ("F p", "q | p"), ("p -> q", "H q")]
    for alg in enumerate_h2gc(3):
        for a, b in pairs:
            assert valid_in_algebra(f"F({a}) -> {b}", alg).ok == \
                valid_in_algebra(f"({a}) -> H({b})", alg).ok
            assert valid_in_algebra(f"P({a}) -> {b}", alg).ok == \
                valid_in_algebra(f"({a}) -> G({b})", alg).ok
            if valid_in_algebra(f"({a}) -> {b}", alg):
                assert valid_in_algebra(f"F({a}) -> F({b})", alg)
