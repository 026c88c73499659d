"""Randomised invariants (hypothesis)."""

import numpy as np
from hypothesis import given, settings, strategies as st

from int2gc.algebra import (enumerate_h2gc, enumerate_heyting, is_galois_pair,
                            is_galois_pair_identities)
from int2gc.formula import (And, BoxG, BoxH, DiaF, DiaP, Imp, Not, Or, Var,
                            compose, parse, substitute, to_str)
from int2gc.kripke import KripkeModel, enumerate_frames, truth_set, up_sets
from int2gc.rough import box_g, box_h, dia_f, dia_p, random_context
from int2gc.semantics import eval_formula

VARS = ["p", "q", "r"]
HEYTING = list(enumerate_heyting(5))
H2GC = list(enumerate_h2gc(3))
FRAMES = list(enumerate_frames(3, "fs")) + list(enumerate_frames(2, "int2gc"))

leaves = st.sampled_from([Var(x) for x in VARS])


def _extend(children):
    unary = st.sampled_from([Not, DiaF, BoxG, DiaP, BoxH])
    binary = st.sampled_from([And, Or, Imp])
    return (st.builds(lambda c, x: c(x), unary, children)
            | st.builds(lambda c, x, y: c(x, y), binary, children, children))


formulas = st.recursive(leaves, _extend, max_leaves=8)
substs = st.dictionaries(st.sampled_from(VARS), formulas, max_size=3)


@given(formulas)
def test_print_parse_round_trip(f):
    assert parse(to_str(f)) == f


@given(formulas, substs, substs)
def test_substitution_composes(f, s1, s2):
    assert substitute(substitute(f, s1), s2) == substitute(f, compose(s1, s2))
    assert substitute(f, {}) == f


@given(st.sampled_from(HEYTING), st.data())
def test_galois_checkers_agree(h, data):
    n = h.n
    phi = np.array(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    psi = np.array(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    assert is_galois_pair(h, phi, psi) == is_galois_pair_identities(h, phi, psi)


@given(st.sampled_from(H2GC), formulas, substs, st.data())
def test_evaluation_commutes_with_substitution(alg, f, s, data):
    v = {x: data.draw(st.integers(0, alg.n - 1)) for x in VARS}
    lifted = {x: (eval_formula(s[x], alg, v) if x in s else v[x]) for x in VARS}
    assert eval_formula(substitute(f, s), alg, v) == eval_formula(f, alg, lifted)


@given(st.sampled_from(H2GC), formulas, formulas, st.data())
def test_evaluation_is_a_homomorphism(alg, f, g, data):
    v = {x: data.draw(st.integers(0, alg.n - 1)) for x in VARS}
    a, b = eval_formula(f, alg, v), eval_formula(g, alg, v)
    lat = alg.heyting.lattice
    assert eval_formula(And(f, g), alg, v) == lat.meet[a, b]
    assert eval_formula(Or(f, g), alg, v) == lat.join[a, b]
    assert eval_formula(Imp(f, g), alg, v) == alg.heyting.rpc[a, b]
    assert eval_formula(DiaF(f), alg, v) == alg.fdia[a]
    assert eval_formula(BoxH(f), alg, v) == alg.hbox[a]


@settings(max_examples=200)
@given(st.sampled_from(FRAMES), formulas, st.data())
def test_truth_sets_are_up_closed(frame, f, data):
    ups = up_sets(frame.leq)
    val = {x: ups[data.draw(st.integers(0, len(ups) - 1))] for x in VARS}
    s = truth_set(KripkeModel.make(frame, val), f)
    assert not (frame.leq & s[:, None] & ~s[None, :]).any()


@given(st.sampled_from(HEYTING), st.integers(1, 3), st.integers(0, 2**32 - 1), st.data())
def test_rough_operators_form_galois_pairs(h, m, seed, data):
    ctx = random_context(np.random.default_rng(seed), h, m)
    phi = np.array(data.draw(st.lists(st.integers(0, h.n - 1), min_size=m, max_size=m)))
    psi = np.array(data.draw(st.lists(st.integers(0, h.n - 1), min_size=m, max_size=m)))
    le = h.lattice.leq

    def below(x, y):
        return bool(le[x, y].all())

    assert below(dia_f(ctx, phi), psi) == below(phi, box_h(ctx, psi))
    assert below(dia_p(ctx, phi), psi) == below(phi, box_g(ctx, psi))
