from int2gc.algebra import (H2GCAlgebra, chain, enumerate_h2gc,
                            heyting_from_lattice)
from int2gc.canonical import (NotFS, canonical_frame, canonical_valuation,
                              key_lemma_check, preimage_galois_check)
from int2gc.formula import enumerate_formulas
from int2gc.kripke import check_frame


def test_three_chain_int2gc(three_chain):
    cf = canonical_frame(three_chain, "int2gc")
    assert list(cf.worlds) == ["{1}", "{u,1}"]
    assert (cf.r1 == cf.leq.T).all()          # superset
    assert not cf.r2.any()
    assert check_frame(cf.frame)


def test_two_element_identity():
    cf = canonical_frame(H2GCAlgebra.make(heyting_from_lattice(chain(2))), "fs")
    assert list(cf.worlds) == ["{1}"]
    assert cf.r1.all() and cf.r2.all() and not cf.flagged


def test_fs_kind_on_non_fs_algebra_is_flagged(three_chain):
    cf = canonical_frame(three_chain, "fs")
    assert cf.flagged and isinstance(cf.warnings[0], NotFS)


def test_canonical_valuation(three_chain):
    m = canonical_valuation(three_chain, {"p": "1", "q": "0", "r": "u"}, "int2gc")
    assert m.valuation["p"].all() and not m.valuation["q"].any()
    assert m.worlds_of("r") == ["{u,1}"]


def test_characterisations_agree_up_to_5():
    # canonical_frame asserts the two preimage descriptions coincide
    for alg in enumerate_h2gc(5):
        canonical_frame(alg, "int2gc")


def test_preimage_galois():
    for alg in enumerate_h2gc(4):
        assert preimage_galois_check(alg)


def test_canonical_fs_frames_pass_r4_r5():
    for alg in enumerate_h2gc(5, require_fs=True):
        assert check_frame(canonical_frame(alg, "fs").frame)


def test_key_lemma_small():
    forms = list(enumerate_formulas(["p"], 2))
    alg = H2GCAlgebra.make(heyting_from_lattice(chain(2)))
    for e in alg.names:
        assert key_lemma_check(alg, {"p": e}, forms).ok
    for alg in enumerate_h2gc(3, require_fs=True):
        cf = canonical_frame(alg, "fs")
        for e in alg.names:
            assert key_lemma_check(alg, {"p": e}, ["p"], cf=cf).ok


def test_key_lemma_detects_a_wrong_frame(three_chain):
    # on a non-FS algebra the FS canonical model misreads some formula
    forms = list(enumerate_formulas(["p"], 2))
    bad = [key_lemma_check(three_chain, {"p": e}, forms, "fs") for e in three_chain.names]
    assert not all(r.ok for r in bad)


def test_key_lemma_int2gc_kind():
    forms = list(enumerate_formulas(["p"], 1))
    for alg in list(enumerate_h2gc(3))[::3]:
        cf = canonical_frame(alg, "int2gc")
        for e in alg.names:
            assert key_lemma_check(alg, {"p": e}, forms, "int2gc", cf).ok
