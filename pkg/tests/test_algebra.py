import numpy as np
import pytest

from int2gc.algebra import (CapExceeded, NotAPartialOrder, NotHeyting,
                            H2GCAlgebra, build_lattice, chain, check_h2gc,
                            check_identity, enumerate_galois_pairs,
                            enumerate_h2gc, enumerate_heyting, fs_flags,
                            heyting_algebras_of_size, heyting_from_lattice,
                            identity_witness, is_distributive, is_galois_pair,
                            is_galois_pair_identities, prime_filters,
                            right_adjoint)
from int2gc.canonical import prime_filter_extension

from oracles import (count_h2gc_classes, galois_pairs_brute, lattices_brute,
                     prime_filters_brute, rpc_brute)


def chain3():
    return heyting_from_lattice(chain(3))


def test_build_lattice_chain():
    l = chain(3)
    assert l.names == ("0", "u", "1")
    assert (l.meet == np.minimum.outer(range(3), range(3))).all()
    assert (l.join == np.maximum.outer(range(3), range(3))).all()


def test_example_lattice(lattice5):
    h = lattice5
    a, b, c = (h.index(x) for x in "abc")
    assert h.join[a, b] == c and h.meet[a, b] == h.bottom
    assert h.rpc[a, h.bottom] == b and h.rpc[b, h.bottom] == a
    assert h.rpc[c, a] == a == rpc_brute(h, c, a)


def test_cycle_rejected():
    with pytest.raises(NotAPartialOrder):
        build_lattice(["x", "y", "z"], [("x", "y"), ("y", "x")])


def test_diamond_not_heyting():
    m3 = build_lattice(["0", "a", "b", "c", "1"],
                       [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])
    assert not is_distributive(m3)
    with pytest.raises(NotHeyting):
        heyting_from_lattice(m3)


def test_rpc_agrees_with_brute_force():
    for h in enumerate_heyting(5):
        for a in range(h.n):
            for b in range(h.n):
                assert h.rpc[a, b] == rpc_brute(h, a, b)


def test_three_chain_rpc():
    h = chain3()
    assert h.names[h.rpc[h.index("1"), h.index("u")]] == "u"


@pytest.mark.parametrize("phi, psi, ok", [
    ([0, 1, 2], [0, 1, 2], True),
    ([0, 0, 0], [2, 2, 2], True),
    ([2, 2, 2], [0, 1, 2], False),
])
def test_is_galois_pair(phi, psi, ok):
    h = chain3()
    assert is_galois_pair(h, phi, psi) is ok
    assert is_galois_pair_identities(h, phi, psi) is ok


def test_galois_checkers_agree_on_all_pairs_of_maps():
    from itertools import product
    for h in enumerate_heyting(4):
        maps = [np.array(m) for m in product(range(h.n), repeat=h.n)]
        for phi in maps:
            for psi in maps:
                assert is_galois_pair(h, phi, psi) == is_galois_pair_identities(h, phi, psi)


def test_right_adjoint_examples(lattice5):
    h = chain3()
    assert list(right_adjoint(h, [0, 1, 2])) == [0, 1, 2]
    assert list(right_adjoint(h, [0, 0, 0])) == [2, 2, 2]
    a, b, c, one = (lattice5.index(x) for x in "abc1")
    phi = [0, one, 0, c, one]
    assert right_adjoint(lattice5, phi) is None


def test_galois_pair_counts():
    assert len(list(enumerate_galois_pairs(chain3()))) == 6
    assert len(list(enumerate_galois_pairs(heyting_from_lattice(chain(2))))) == 2


def test_galois_pairs_match_brute_force():
    for h in enumerate_heyting(4):
        got = {(tuple(p), tuple(q)) for p, q in enumerate_galois_pairs(h)}
        want = {(tuple(p), tuple(q)) for p, q in galois_pairs_brute(h)}
        assert got == want


def test_adjoint_boundary_values():
    for h in enumerate_heyting(5):
        for phi, psi in enumerate_galois_pairs(h):
            assert phi[h.bottom] == h.bottom and psi[h.top] == h.top
            a = np.arange(h.n)
            assert h.leq[a, psi[phi]].all() and h.leq[phi[psi], a].all()
            assert (phi[psi[phi]] == phi).all() and (psi[phi[psi]] == psi).all()


def test_check_h2gc(three_chain):
    assert check_h2gc(three_chain)
    assert check_h2gc(H2GCAlgebra.make(chain3()))
    bad = H2GCAlgebra.make(chain3(), fdia=[2, 2, 2])
    assert not check_h2gc(bad)


def test_three_chain_fs1_witness(three_chain):
    assert not check_identity(three_chain, "fs1")
    assert identity_witness(three_chain, "fs1") == (0, 0)


def test_identity_algebra_satisfies_everything():
    for h in enumerate_heyting(4):
        fl = fs_flags(H2GCAlgebra.make(h))
        assert all((fl.fs1, fl.fs2, fl.fs3, fl.fs4, fl.d1, fl.d2))


def test_prime_filters_examples(lattice5):
    def named(h, fs):
        return [{h.names[i] for i in f} for f in fs]
    assert named(chain3(), prime_filters(chain3())) == [{"1"}, {"u", "1"}]
    got = named(lattice5, prime_filters(lattice5))
    assert sorted(map(sorted, got)) == sorted(map(sorted, [{"1"}, {"a", "c", "1"},
                                                           {"b", "c", "1"}]))
    two = heyting_from_lattice(chain(2))
    assert len(prime_filters(two)) == 1


def test_prime_filters_match_brute_force():
    for h in enumerate_heyting(7):
        assert set(prime_filters(h)) == set(prime_filters_brute(h))


def test_prime_filter_extension(lattice5):
    h = chain3()
    assert prime_filter_extension(h, ["1"]) == {h.index("1")}
    up_c = ["c", "1"]
    f = prime_filter_extension(lattice5, up_c, ["0"])
    assert {lattice5.names[i] for i in f} in ({"a", "c", "1"}, {"b", "c", "1"})
    assert prime_filter_extension(lattice5, up_c, ["a", "b"]) is None


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 5), (7, 8)])
def test_heyting_counts(n, count):
    assert len(heyting_algebras_of_size(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_heyting_counts_match_brute_force(n):
    assert lattices_brute(n) == len(heyting_algebras_of_size(n))


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_heyting(8))
    with pytest.raises(CapExceeded):
        list(enumerate_h2gc(8))


def test_h2gc_counts_match_brute_force():
    for fs in (False, True):
        want = sum(count_h2gc_classes(h, fs) for h in enumerate_heyting(4))
        assert sum(1 for _ in enumerate_h2gc(4, require_fs=fs)) == want


def test_pinned_counts():
    assert [sum(1 for _ in enumerate_h2gc(k)) for k in range(1, 5)] == [1, 5, 41, 577]
    assert [sum(1 for _ in enumerate_h2gc(k, True)) for k in range(1, 5)] == [1, 3, 11, 76]


def test_three_chain_in_enumeration(three_chain):
    sig = three_chain.signature()
    assert any(a.signature() == sig for a in enumerate_h2gc(3) if a.n == 3)
    assert not any(a.signature() == sig for a in enumerate_h2gc(3, True) if a.n == 3)


def test_enumeration_is_deterministic():
    a = [x.signature() for x in enumerate_h2gc(4)]
    b = [x.signature() for x in enumerate_h2gc(4)]
    assert a == b


def test_fs_triples_agree():
    for alg in enumerate_h2gc(4):
        fl = fs_flags(alg)
        assert fl.fs1 == fl.d1 == fl.fs4
        assert fl.fs2 == fl.d2 == fl.fs3
