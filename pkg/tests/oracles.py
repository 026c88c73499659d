"""Slow, obviously-correct reference computations used by the tests."""

from itertools import permutations, product

import numpy as np


def leq_of(h):
    return np.asarray(h.leq, dtype=bool)


def all_maps(n):
    return [np.array(m) for m in product(range(n), repeat=n)]


def galois_pairs_brute(h):
    """Every (phi, psi) with phi(a) <= b iff a <= psi(b), by trying all maps."""
    le = leq_of(h)
    n = h.n
    out = []
    maps = all_maps(n)
    for phi in maps:
        for psi in maps:
            if all(le[phi[a], b] == le[a, psi[b]] for a in range(n) for b in range(n)):
                out.append((phi, psi))
    return out


def count_h2gc_classes(h, require_fs=False):
    """Orbits of (pair, pair) under automorphisms of h, counted by canonical form."""
    le = leq_of(h)
    n = h.n
    auts = [np.array(p) for p in permutations(range(n))
            if (le[np.ix_(p, p)] == le).all()]
    pairs = galois_pairs_brute(h)
    seen = set()
    for (f, hh), (pp, g) in product(pairs, repeat=2):
        if require_fs and not fs_brute(h, f, g, pp, hh):
            continue
        forms = []
        for a in auts:
            inv = np.argsort(a)
            forms.append(tuple(tuple(a[t[inv]]) for t in (f, g, pp, hh)))
        seen.add(min(forms))
    return len(seen)


def rpc_brute(h, a, b):
    le = leq_of(h)
    cands = [x for x in range(h.n) if le[h.meet[a, x], b]]
    top = [x for x in cands if all(le[y, x] for y in cands)]
    assert len(top) == 1
    return top[0]


def fs_brute(h, F, G, P, H):
    n = h.n
    r = lambda a, b: rpc_brute(h, a, b)
    for a in range(n):
        for b in range(n):
            if r(F[r(a, b)], r(G[a], F[b])) != h.top:
                return False
            if r(P[r(a, b)], r(H[a], P[b])) != h.top:
                return False
    return True


def lattices_brute(n):
    """Isomorphism classes of distributive lattices on n labelled elements,
    found by trying every order relation."""
    from int2gc.algebra import AlgebraError, is_distributive, lattice_from_leq
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    classes = set()
    for bits in product((False, True), repeat=len(off)):
        m = np.eye(n, dtype=bool)
        for (i, j), on in zip(off, bits):
            m[i, j] = on
        try:
            lat = lattice_from_leq([str(i) for i in range(n)], m)
        except AlgebraError:
            continue
        if not is_distributive(lat):
            continue
        classes.add(min(m[np.ix_(p, p)].tobytes() for p in permutations(range(n))))
    return len(classes)


def prime_filters_brute(h):
    le = leq_of(h)
    n = h.n
    out = []
    for bits in product((False, True), repeat=n):
        s = {i for i in range(n) if bits[i]}
        if not s or h.bottom in s:
            continue
        if any(le[a, b] and b not in s for a in s for b in range(n)):
            continue
        if any(h.meet[a, b] not in s for a in s for b in s):
            continue
        if any(h.join[a, b] in s and a not in s and b not in s
               for a in range(n) for b in range(n)):
            continue
        out.append(frozenset(s))
    return out


def eval_brute(f, alg, v):
    """Plain recursive evaluator with the rpc recomputed from the order."""
    from int2gc.formula import (And, BoxG, BoxH, DiaF, DiaP, Imp, Not, Or, Var, TOP, BOT)
    h = alg.heyting
    if isinstance(f, Var):
        return alg.index(v[f.name])
    if f is TOP:
        return h.top
    if f is BOT:
        return h.bottom
    if isinstance(f, Not):
        return rpc_brute(h, eval_brute(f.f, alg, v), h.bottom)
    if isinstance(f, (And, Or, Imp)):
        a, b = eval_brute(f.l, alg, v), eval_brute(f.r, alg, v)
        if isinstance(f, And):
            return int(h.meet[a, b])
        if isinstance(f, Or):
            return int(h.join[a, b])
        return rpc_brute(h, a, b)
    op = {DiaF: alg.fdia, BoxG: alg.gbox, DiaP: alg.pdia, BoxH: alg.hbox}[type(f)]
    return int(op[eval_brute(f.f, alg, v)])


def sat_brute(frame, val, w, f):
    """Satisfaction straight from the clauses, world by world."""
    from int2gc.formula import (And, BoxG, BoxH, DiaF, DiaP, Imp, Not, Or, Var, TOP, BOT)
    le = frame.leq
    rf, rp = frame.modal_relations()
    n = frame.n
    s = lambda x, g: sat_brute(frame, val, x, g)
    if isinstance(f, Var):
        return bool(val[f.name][w])
    if f is TOP:
        return True
    if f is BOT:
        return False
    if isinstance(f, Not):
        return all(not s(y, f.f) for y in range(n) if le[w, y])
    if isinstance(f, And):
        return s(w, f.l) and s(w, f.r)
    if isinstance(f, Or):
        return s(w, f.l) or s(w, f.r)
    if isinstance(f, Imp):
        return all(not s(y, f.l) or s(y, f.r) for y in range(n) if le[w, y])
    if isinstance(f, DiaF):
        return any(rf[w, y] and s(y, f.f) for y in range(n))
    if isinstance(f, BoxH):
        return all(s(y, f.f) for y in range(n) if rf[y, w])
    if isinstance(f, DiaP):
        return any(rp[y, w] and s(y, f.f) for y in range(n))
    if isinstance(f, BoxG):
        return all(s(y, f.f) for y in range(n) if rp[w, y])
    raise TypeError(f)


def compose_brute(s, t):
    n = len(s)
    return np.array([[any(s[x, z] and t[z, y] for z in range(n)) for y in range(n)]
                     for x in range(n)])
