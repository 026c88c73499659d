"""Finite Heyting algebras with two Galois pairs.

Elements are addressed by integer index; ``names`` carries the display
labels.  Operation tables are numpy integer arrays, the order is a boolean
matrix with ``leq[a, b]`` meaning ``a <= b``.

The unary operations of an :class:`H2GCAlgebra` follow the tense reading of
the language:

* ``fdia`` interprets ``F`` and is the lower adjoint of ``hbox`` (``H``);
* ``pdia`` interprets ``P`` and is the lower adjoint of ``gbox`` (``G``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from typing import Iterator, Mapping, Sequence

import numpy as np

DEFAULT_CAP = 7

__all__ = [
    "AlgebraError", "NotAPartialOrder", "NotALattice", "NoBounds", "NotHeyting",
    "CapExceeded", "FiniteLattice", "HeytingAlgebra", "H2GCAlgebra", "FSFlags",
    "build_lattice", "lattice_from_leq", "heyting_from_lattice", "is_distributive",
    "is_galois_pair", "is_galois_pair_identities", "right_adjoint",
    "check_h2gc", "check_identity", "fs_flags", "IDENTITIES",
    "join_irreducibles", "prime_filters", "is_filter", "is_prime_filter",
    "generated_filter", "automorphisms", "enumerate_heyting",
    "heyting_algebras_of_size", "enumerate_galois_pairs", "enumerate_h2gc",
    "identity_h2gc", "transitive_closure", "chain",
]


class AlgebraError(ValueError):
    pass


class NotAPartialOrder(AlgebraError):
    pass


class NotALattice(AlgebraError):
    pass


class NoBounds(AlgebraError):
    pass


class NotHeyting(AlgebraError):
    pass


class CapExceeded(AlgebraError):
    pass


def transitive_closure(m: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean matrix (Warshall)."""
    c = np.array(m, dtype=bool) | np.eye(len(m), dtype=bool)
    for k in range(len(c)):
        c |= c[:, k:k + 1] & c[k:k + 1, :]
    return c


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    names: tuple[str, ...]
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        if isinstance(name, (int, np.integer)):
            return int(name)
        try:
            return self.names.index(str(name))
        except ValueError:
            raise KeyError(f"unknown element {name!r}") from None

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(a, b)`` with ``b`` covering ``a``."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        out = []
        for a, b in zip(*np.nonzero(lt)):
            between = lt[a] & lt[:, b]
            if not between.any():
                out.append((int(a), int(b)))
        return out


def lattice_from_leq(names: Sequence[str], leq: np.ndarray) -> FiniteLattice:
    leq = np.asarray(leq, dtype=bool)
    n = len(names)
    if n == 0:
        raise NoBounds("empty carrier")
    if not leq.diagonal().all() or (transitive_closure(leq) != leq).any():
        raise NotAPartialOrder("relation is not reflexive and transitive")
    if not (leq & leq.T == np.eye(n, dtype=bool)).all():
        i, j = np.argwhere((leq & leq.T) & ~np.eye(n, dtype=bool))[0]
        raise NotAPartialOrder(
            f"{names[i]} <= {names[j]} and {names[j]} <= {names[i]}")
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        raise NoBounds("lattice needs a least and a greatest element")
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            lower = np.flatnonzero(leq[:, a] & leq[:, b])
            glb = lower[leq[lower][:, lower].all(axis=0)]
            upper = np.flatnonzero(leq[a] & leq[b])
            lub = upper[leq[upper][:, upper].all(axis=1)]
            if len(glb) != 1 or len(lub) != 1:
                raise NotALattice(f"{names[a]} and {names[b]} lack a meet or join")
            meet[a, b] = meet[b, a] = glb[0]
            join[a, b] = join[b, a] = lub[0]
    return FiniteLattice(tuple(str(x) for x in names), leq, meet, join,
                         int(bottoms[0]), int(tops[0]))


def build_lattice(elements: Sequence, order_pairs) -> FiniteLattice:
    """Lattice on ``elements`` whose order is generated by ``order_pairs``.

    The pairs need not be covers; the reflexive-transitive closure is taken.
    """
    names = [str(e) for e in elements]
    if len(set(names)) != len(names):
        raise AlgebraError("duplicate element names")
    pos = {x: i for i, x in enumerate(names)}
    m = np.zeros((len(names), len(names)), dtype=bool)
    for a, b in order_pairs:
        try:
            m[pos[str(a)], pos[str(b)]] = True
        except KeyError as exc:
            raise AlgebraError(f"order pair mentions unknown element {exc}") from None
    return lattice_from_leq(names, transitive_closure(m))


def chain(n: int, names: Sequence[str] | None = None) -> FiniteLattice:
    """The ``n``-element chain; the three-element chain is named ``0 < u < 1``."""
    if names is None:
        names = ["0", "u", "1"] if n == 3 else _names_for(n)
    return build_lattice(names, list(zip(names, names[1:])))


def is_distributive(l: FiniteLattice) -> bool:
    a, b, c = np.meshgrid(np.arange(l.n), np.arange(l.n), np.arange(l.n), indexing="ij")
    lhs = l.meet[a, l.join[b, c]]
    rhs = l.join[l.meet[a, b], l.meet[a, c]]
    return bool((lhs == rhs).all())


@dataclass(frozen=True, eq=False)
class HeytingAlgebra:
    lattice: FiniteLattice
    rpc: np.ndarray

    # convenience pass-throughs
    names = property(lambda self: self.lattice.names)
    leq = property(lambda self: self.lattice.leq)
    meet = property(lambda self: self.lattice.meet)
    join = property(lambda self: self.lattice.join)
    bottom = property(lambda self: self.lattice.bottom)
    top = property(lambda self: self.lattice.top)
    n = property(lambda self: self.lattice.n)

    def index(self, name) -> int:
        return self.lattice.index(name)

    @cached_property
    def neg(self) -> np.ndarray:
        return self.rpc[:, self.bottom]

    def __repr__(self):
        return f"HeytingAlgebra({list(self.names)})"


def heyting_from_lattice(l: FiniteLattice) -> HeytingAlgebra:
    """Attach the relative pseudocomplement ``a -> b = join{x : a & x <= b}``.

    Raises :class:`NotHeyting` when that join is not itself below ``b`` after
    meeting with ``a``, which happens exactly for non-distributive lattices.
    """
    n = l.n
    rpc = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            cand = l.bottom
            for x in np.flatnonzero(l.leq[l.meet[a], b]):
                cand = l.join[cand, x]
            if not l.leq[l.meet[a, cand], b]:
                raise NotHeyting(
                    f"no greatest x with {l.names[a]} & x <= {l.names[b]}")
            rpc[a, b] = cand
    return HeytingAlgebra(l, rpc)


def _as_table(h: HeytingAlgebra, op) -> np.ndarray:
    if op is None:
        return np.arange(h.n)
    if isinstance(op, Mapping):
        t = np.arange(h.n)
        for k, v in op.items():
            t[h.index(k)] = h.index(v)
        if len(op) != h.n:
            raise AlgebraError("unary table must be total on the carrier")
        return t
    if callable(op):
        return np.array([op(x) for x in range(h.n)], dtype=np.int64)
    t = np.asarray(op, dtype=np.int64)
    if t.shape != (h.n,) or (t < 0).any() or (t >= h.n).any():
        raise AlgebraError("unary table must be total on the carrier")
    return t


@dataclass(frozen=True, eq=False)
class H2GCAlgebra:
    """Heyting algebra with Galois pairs (fdia, hbox) and (pdia, gbox)."""

    heyting: HeytingAlgebra
    fdia: np.ndarray
    gbox: np.ndarray
    pdia: np.ndarray
    hbox: np.ndarray
    label: str = field(default="", compare=False)

    @classmethod
    def make(cls, h: HeytingAlgebra, fdia=None, gbox=None, pdia=None, hbox=None,
             label=""):
        """Build from tables given as dicts of names, sequences or callables.

        Omitted operations default to the identity.
        """
        return cls(h, _as_table(h, fdia), _as_table(h, gbox), _as_table(h, pdia),
                   _as_table(h, hbox), label)

    names = property(lambda self: self.heyting.names)
    n = property(lambda self: self.heyting.n)
    bottom = property(lambda self: self.heyting.bottom)
    top = property(lambda self: self.heyting.top)

    def index(self, name) -> int:
        return self.heyting.index(name)

    def op(self, name: str) -> np.ndarray:
        return getattr(self, name)

    def signature(self) -> tuple:
        return tuple(tuple(int(x) for x in t)
                     for t in (self.fdia, self.gbox, self.pdia, self.hbox))

    def __repr__(self):
        nm = self.names
        tabs = ", ".join(
            f"{k}={[nm[i] for i in getattr(self, k)]}"
            for k in ("fdia", "gbox", "pdia", "hbox"))
        return f"H2GCAlgebra({list(nm)}, {tabs})"


def identity_h2gc(h: HeytingAlgebra) -> H2GCAlgebra:
    return H2GCAlgebra.make(h)


# -- Galois connections ----------------------------------------------------

def is_galois_pair(h: HeytingAlgebra, phi, psi) -> bool:
    """``phi(p) <= q  iff  p <= psi(q)`` for all ``p, q``."""
    phi, psi = np.asarray(phi), np.asarray(psi)
    lhs = h.leq[phi[:, None], np.arange(h.n)[None, :]]
    rhs = h.leq[np.arange(h.n)[:, None], psi[None, :]]
    return bool((lhs == rhs).all())


def is_galois_pair_identities(h: HeytingAlgebra, phi, psi) -> bool:
    """Same question answered through the lattice identities: ``phi`` preserves
    binary joins, ``psi`` binary meets, ``a = a & psi(phi(a))`` and
    ``a = a | phi(psi(a))``."""
    phi, psi = np.asarray(phi), np.asarray(psi)
    a = np.arange(h.n)
    j, m = h.join, h.meet
    ok = (phi[j] == j[phi[:, None], phi[None, :]]).all()
    ok &= (psi[m] == m[psi[:, None], psi[None, :]]).all()
    ok &= (m[a, psi[phi]] == a).all()
    ok &= (j[a, phi[psi]] == a).all()
    return bool(ok)


def right_adjoint(h: HeytingAlgebra, phi) -> np.ndarray | None:
    """Upper adjoint of ``phi`` or ``None`` when ``phi`` does not preserve
    finite joins (the empty join included)."""
    phi = np.asarray(phi)
    if phi[h.bottom] != h.bottom:
        return None
    if not (phi[h.join] == h.join[phi[:, None], phi[None, :]]).all():
        return None
    psi = np.empty(h.n, dtype=np.int64)
    for q in range(h.n):
        acc = h.bottom
        for p in np.flatnonzero(h.leq[phi, q]):
            acc = h.join[acc, p]
        psi[q] = acc
    return psi


def check_h2gc(alg: H2GCAlgebra) -> bool:
    return (is_galois_pair(alg.heyting, alg.fdia, alg.hbox)
            and is_galois_pair(alg.heyting, alg.pdia, alg.gbox))


def _identity_values(alg: H2GCAlgebra, which: str) -> np.ndarray:
    h = alg.heyting
    r, m = h.rpc, h.meet
    a, b = np.meshgrid(np.arange(h.n), np.arange(h.n), indexing="ij")
    F, G, P, H = alg.fdia, alg.gbox, alg.pdia, alg.hbox
    if which == "fs1":    # F(a->b) -> (G a -> F b)
        return r[F[r[a, b]], r[G[a], F[b]]]
    if which == "fs2":    # P(a->b) -> (H a -> P b)
        return r[P[r[a, b]], r[H[a], P[b]]]
    if which == "fs3":    # (F a -> G b) -> G(a->b)
        return r[r[F[a], G[b]], G[r[a, b]]]
    if which == "fs4":    # (P a -> H b) -> H(a->b)
        return r[r[P[a], H[b]], H[r[a, b]]]
    if which == "d1":     # F a & G b -> F(a & b)
        return r[m[F[a], G[b]], F[m[a, b]]]
    if which == "d2":     # P a & H b -> P(a & b)
        return r[m[P[a], H[b]], P[m[a, b]]]
    raise ValueError(f"unknown identity {which!r}")


IDENTITIES = ("fs1", "fs2", "fs3", "fs4", "d1", "d2")


def check_identity(alg: H2GCAlgebra, which: str) -> bool:
    """Whether the named identity evaluates to the top element for all pairs."""
    return bool((_identity_values(alg, which) == alg.top).all())


def identity_witness(alg: H2GCAlgebra, which: str):
    """First pair ``(a, b)`` violating the identity, or ``None``."""
    bad = np.argwhere(_identity_values(alg, which) != alg.top)
    return None if len(bad) == 0 else (int(bad[0][0]), int(bad[0][1]))


@dataclass(frozen=True)
class FSFlags:
    fs1: bool
    fs2: bool
    fs3: bool
    fs4: bool
    d1: bool
    d2: bool

    @property
    def is_fs(self) -> bool:
        return self.fs1 and self.fs2


def fs_flags(alg: H2GCAlgebra) -> FSFlags:
    return FSFlags(**{k: check_identity(alg, k) for k in IDENTITIES})


# -- filters ---------------------------------------------------------------

def is_filter(h: HeytingAlgebra, s) -> bool:
    s = set(s)
    if not s:
        return False
    for a in s:
        if not set(np.flatnonzero(h.leq[a]).tolist()) <= s:
            return False
        for b in s:
            if h.meet[a, b] not in s:
                return False
    return True


def is_prime_filter(h: HeytingAlgebra, s) -> bool:
    s = set(s)
    if not is_filter(h, s) or h.bottom in s:
        return False
    return all(a in s or b in s
               for a in range(h.n) for b in range(h.n) if h.join[a, b] in s)


def generated_filter(h: HeytingAlgebra, s) -> frozenset:
    """Smallest filter containing ``s`` (the whole carrier if ``s`` meets to 0)."""
    m = h.top
    for a in s:
        m = h.meet[m, a]
    return frozenset(np.flatnonzero(h.leq[m]).tolist())


def join_irreducibles(h) -> list[int]:
    """Elements with exactly one lower cover."""
    l = h.lattice if isinstance(h, HeytingAlgebra) else h
    lower = {}
    for a, b in l.covers():
        lower.setdefault(b, []).append(a)
    return [x for x in range(l.n) if len(lower.get(x, [])) == 1]


def prime_filters(h: HeytingAlgebra) -> list[frozenset]:
    """All proper prime filters, ordered by size then by sorted member indices.

    In a finite distributive lattice these are the principal filters of the
    join-irreducible elements.
    """
    fs = [frozenset(np.flatnonzero(h.leq[j]).tolist()) for j in join_irreducibles(h)]
    return sorted(fs, key=lambda f: (len(f), sorted(f)))


# -- enumeration -----------------------------------------------------------

def _check_cap(max_size: int, cap: int):
    if max_size > cap:
        raise CapExceeded(f"size {max_size} exceeds cap {cap}")


def _natural_orders(n: int) -> Iterator[np.ndarray]:
    """Transitive upper-triangular orders with 0 as bottom and n-1 as top."""
    if n == 1:
        yield np.ones((1, 1), dtype=bool)
        return
    mid = list(range(1, n - 1))
    pairs = [(i, j) for i in mid for j in mid if i < j]
    for bits in product((False, True), repeat=len(pairs)):
        m = np.eye(n, dtype=bool)
        m[0, :] = True
        m[:, n - 1] = True
        for (i, j), on in zip(pairs, bits):
            m[i, j] = on
        if (transitive_closure(m) == m).all():
            yield m


def _is_canonical(m: np.ndarray) -> bool:
    n = len(m)
    code = m.tobytes()
    mid = list(range(1, n - 1))
    for perm in permutations(mid):
        p = [0, *perm, n - 1] if n > 1 else [0]
        q = m[np.ix_(p, p)]
        if np.triu(q).sum() != q.sum():
            continue
        if q.tobytes() < code:
            return False
    return True


_MID_NAMES = "abcdefghijklmnopqrstuvwxyz"


def _names_for(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    return ["0", *_MID_NAMES[:n - 2], "1"]


_HEYTING_CACHE: dict[int, list[HeytingAlgebra]] = {}


def heyting_algebras_of_size(n: int, cap: int = DEFAULT_CAP) -> list[HeytingAlgebra]:
    """One representative per isomorphism class of Heyting algebras with
    exactly ``n`` elements, in increasing order of their order matrices."""
    _check_cap(n, cap)
    if n not in _HEYTING_CACHE:
        found = []
        for m in _natural_orders(n):
            try:
                lat = lattice_from_leq(_names_for(n), m)
            except AlgebraError:
                continue
            if not is_distributive(lat) or not _is_canonical(m):
                continue
            found.append((m.tobytes(), heyting_from_lattice(lat)))
        found.sort(key=lambda t: t[0])
        _HEYTING_CACHE[n] = [h for _, h in found]
    return list(_HEYTING_CACHE[n])


def enumerate_heyting(max_size: int, cap: int = DEFAULT_CAP) -> Iterator[HeytingAlgebra]:
    """Heyting algebras with at most ``max_size`` elements, up to isomorphism."""
    _check_cap(max_size, cap)
    for n in range(1, max_size + 1):
        yield from heyting_algebras_of_size(n, cap)


def automorphisms(h: HeytingAlgebra) -> list[np.ndarray]:
    n = h.n
    out = []
    for perm in permutations(range(n)):
        p = np.array(perm)
        if (h.leq[np.ix_(p, p)] == h.leq).all():
            out.append(p)
    return out


def enumerate_galois_pairs(h: HeytingAlgebra) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Every Galois pair ``(phi, psi)`` on ``h``.

    Lower adjoints are exactly the join-preserving maps; on a distributive
    lattice these correspond to monotone maps from the join-irreducibles into
    the carrier, extended by ``phi(x) = join{g(j) : j <= x}``.
    """
    J = join_irreducibles(h)
    below = [[k for k in range(i) if h.leq[J[k], J[i]]] for i in range(len(J))]

    def extend(g):
        phi = np.full(h.n, h.bottom, dtype=np.int64)
        for x in range(h.n):
            acc = h.bottom
            for j, gj in zip(J, g):
                if h.leq[j, x]:
                    acc = h.join[acc, gj]
            phi[x] = acc
        return phi

    def rec(g):
        i = len(g)
        if i == len(J):
            phi = extend(g)
            yield phi, right_adjoint(h, phi)
            return
        for v in range(h.n):
            if all(h.leq[g[k], v] for k in below[i]):
                yield from rec(g + [v])

    yield from rec([])


_PAIR_CACHE: dict[int, list] = {}


def _pairs(h: HeytingAlgebra):
    key = id(h)
    if key not in _PAIR_CACHE:
        _PAIR_CACHE[key] = (h, list(enumerate_galois_pairs(h)))
    return _PAIR_CACHE[key][1]


def enumerate_h2gc(max_size: int, require_fs: bool = False,
                   cap: int = DEFAULT_CAP, sizes=None) -> Iterator[H2GCAlgebra]:
    """All H2GC algebras (or H2GC+FS algebras) with at most ``max_size``
    elements, one per isomorphism class of the full signature.

    Order: size, then Heyting representative, then the (fdia, pdia) pair
    indices.  Within an orbit of the automorphism group the lexicographically
    least table pair is kept.
    """
    _check_cap(max_size, cap)
    for n in (sizes or range(1, max_size + 1)):
        for hi, h in enumerate(heyting_algebras_of_size(n, cap)):
            pairs = _pairs(h)
            auts = [p for p in automorphisms(h) if not (p == np.arange(n)).all()]
            inv = [np.argsort(p) for p in auts]
            for (fd, hb), (pd, gb) in product(pairs, pairs):
                code = (tuple(fd), tuple(pd))
                if any((tuple(p[fd[q]]), tuple(p[pd[q]])) < code
                       for p, q in zip(auts, inv)):
                    continue
                alg = H2GCAlgebra(h, fd, gb, pd, hb,
                                  label=f"n{n}.h{hi}")
                if require_fs and not (check_identity(alg, "fs1")
                                       and check_identity(alg, "fs2")):
                    continue
                yield alg
