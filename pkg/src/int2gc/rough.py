"""Rough H-sets: approximation operators over an H-valued relation.

For a finite Heyting algebra H, a finite universe U and a relation
``R : U x U -> H`` the four operators on H-sets ``phi : U -> H`` are::

    dia_f(phi)(x) = join_y  R(x, y) & phi(y)
    box_g(phi)(x) = meet_y  R(x, y) -> phi(y)
    dia_p(phi)(x) = join_y  R(y, x) & phi(y)
    box_h(phi)(x) = meet_y  R(y, x) -> phi(y)

``dia_f`` is lower adjoint to ``box_h`` and ``dia_p`` to ``box_g`` in the
pointwise order.  H-sets are integer arrays indexed like ``universe``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .algebra import CapExceeded, FiniteLattice, H2GCAlgebra, HeytingAlgebra
from .results import Report

__all__ = [
    "RoughContext", "UniverseMismatch", "dia_f", "box_g", "dia_p", "box_h",
    "power_algebra", "verify_rough_laws", "all_hsets", "random_context",
    "classical_upper", "classical_lower", "DEFAULT_POWER_CAP",
]

DEFAULT_POWER_CAP = 512


class UniverseMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RoughContext:
    algebra: HeytingAlgebra
    universe: tuple
    relation: np.ndarray
    sets: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.universe)

    @classmethod
    def make(cls, algebra: HeytingAlgebra, universe: Sequence[str],
             relation, sets: Mapping | None = None) -> "RoughContext":
        """``relation`` is a nested dict ``{x: {y: element}}`` or a matrix;
        missing entries of a dict are 0."""
        universe = tuple(universe)
        m = len(universe)
        if isinstance(relation, Mapping):
            r = np.full((m, m), algebra.bottom, dtype=np.int64)
            pos = {u: i for i, u in enumerate(universe)}
            for x, row in relation.items():
                for y, e in row.items():
                    if x not in pos or y not in pos:
                        raise UniverseMismatch(f"relation mentions {x!r}/{y!r}")
                    r[pos[x], pos[y]] = algebra.index(e)
        else:
            r = np.asarray(relation, dtype=np.int64)
            if r.shape != (m, m):
                raise UniverseMismatch("relation shape does not match universe")
        ctx = cls(algebra, universe, r, {})
        for k, s in (sets or {}).items():
            ctx.sets[k] = ctx.hset(s)
        return ctx

    def hset(self, phi) -> np.ndarray:
        """Coerce a dict ``{x: element}`` or a sequence to an index array."""
        if isinstance(phi, Mapping):
            if set(phi) != set(self.universe):
                raise UniverseMismatch("H-set must be total on the universe")
            return np.array([self.algebra.index(phi[x]) for x in self.universe],
                            dtype=np.int64)
        arr = np.asarray(phi)
        if arr.shape[-1:] != (self.m,):
            raise UniverseMismatch(
                f"H-set has length {arr.shape[-1:]}, universe has {self.m}")
        if arr.dtype.kind in "iu":
            return arr.astype(np.int64)
        return np.vectorize(self.algebra.index)(arr).astype(np.int64)

    def named(self, phi) -> dict:
        return {x: self.algebra.names[int(e)] for x, e in zip(self.universe, phi)}


def _fold(table: np.ndarray, arr: np.ndarray, start: int) -> np.ndarray:
    """Left fold of a binary table along the last axis."""
    acc = np.full(arr.shape[:-1], start, dtype=np.int64)
    for k in range(arr.shape[-1]):
        acc = table[acc, arr[..., k]]
    return acc


def _apply(ctx: RoughContext, phi, rel: np.ndarray, diamond: bool):
    h = ctx.algebra
    phi = ctx.hset(phi)
    # terms[..., x, y] combine rel[x, y] with phi[..., y]
    p = phi[..., None, :]
    if diamond:
        return _fold(h.join, h.meet[rel, p], h.bottom)
    return _fold(h.meet, h.rpc[rel, p], h.top)


def dia_f(ctx: RoughContext, phi) -> np.ndarray:
    return _apply(ctx, phi, ctx.relation, True)


def box_g(ctx: RoughContext, phi) -> np.ndarray:
    return _apply(ctx, phi, ctx.relation, False)


def dia_p(ctx: RoughContext, phi) -> np.ndarray:
    return _apply(ctx, phi, ctx.relation.T, True)


def box_h(ctx: RoughContext, phi) -> np.ndarray:
    return _apply(ctx, phi, ctx.relation.T, False)


OPERATORS = {"diaF": dia_f, "boxG": box_g, "diaP": dia_p, "boxH": box_h}


def all_hsets(ctx: RoughContext) -> np.ndarray:
    """Every H-set, in mixed-radix order (first universe point most significant)."""
    n, m = ctx.algebra.n, ctx.m
    return np.array(list(product(range(n), repeat=m)), dtype=np.int64).reshape(-1, m)


def power_algebra(ctx: RoughContext, cap: int = DEFAULT_POWER_CAP) -> H2GCAlgebra:
    """The algebra of all H-sets with pointwise operations and the four
    approximation operators."""
    h = ctx.algebra
    total = h.n ** ctx.m
    if total > cap:
        raise CapExceeded(f"{total} H-sets exceed the cap {cap}")
    sets = all_hsets(ctx)
    radix = h.n ** np.arange(ctx.m - 1, -1, -1)

    def code(arr):
        return (arr * radix).sum(-1)

    a, b = sets[:, None, :], sets[None, :, :]
    leq = h.leq[a, b].all(-1)
    lat = FiniteLattice(
        tuple("(" + ",".join(h.names[e] for e in s) + ")" for s in sets),
        leq, code(h.meet[a, b]), code(h.join[a, b]),
        int(code(np.full(ctx.m, h.bottom))), int(code(np.full(ctx.m, h.top))))
    heyting = HeytingAlgebra(lat, code(h.rpc[a, b]))
    return H2GCAlgebra(heyting, code(dia_f(ctx, sets)), code(box_g(ctx, sets)),
                       code(dia_p(ctx, sets)), code(box_h(ctx, sets)),
                       label="rough power algebra")


def _leq(h, x, y) -> np.ndarray:
    """Pointwise order of stacks of H-sets."""
    return h.leq[x, y].all(-1)


def verify_rough_laws(ctx: RoughContext, samples: int | None = None,
                      seed: int = 0, exhaustive_limit: int = 625) -> Report:
    """Check the rough-set laws without building the power algebra.

    Checked: monotonicity of the four operators, both adjunctions, the
    unit/counit inequalities, d1 and d2.  Also records (as notes, not
    failures) whether the disjunctive laws ``G(p|q) -> G p | F q`` and
    ``H(p|q) -> H p | P q`` hold, with the values at the first point where
    they do not.

    All H-sets are used when there are at most ``exhaustive_limit`` of them
    (or when ``samples`` is None and that is feasible); otherwise ``samples``
    seeded random sets.
    """
    h = ctx.algebra
    total = h.n ** ctx.m
    if samples is None and total <= exhaustive_limit:
        sets = all_hsets(ctx)
        mode = "exhaustive"
    else:
        rng = np.random.default_rng(seed)
        sets = rng.integers(0, h.n, size=(samples or 64, ctx.m))
        mode = f"{len(sets)} samples (seed {seed})"
    rep = Report(f"rough laws, {mode}")
    x, y = sets[:, None, :], sets[None, :, :]
    shape = (len(sets), len(sets), ctx.m)
    x, y = np.broadcast_to(x, shape), np.broadcast_to(y, shape)
    F, G, P, H = (dia_f(ctx, sets), box_g(ctx, sets),
                  dia_p(ctx, sets), box_h(ctx, sets))
    ops = {"diaF": F, "boxG": G, "diaP": P, "boxH": H}
    le = _leq(h, x, y)

    def record(name, ok):
        rep.checked += int(np.size(ok))
        if not np.all(ok):
            idx = np.argwhere(~np.asarray(ok))[0]
            rep.fail({"law": name, "at": [ctx.named(sets[i]) for i in idx]})

    for nm, out in ops.items():
        record(f"monotone {nm}", ~le | _leq(h, out[:, None, :], out[None, :, :]))
    # fdia(phi) <= psi  iff  phi <= hbox(psi); likewise pdia / gbox
    record("adjunction diaF/boxH", _leq(h, F[:, None, :], y) == _leq(h, x, H[None, :, :]))
    record("adjunction diaP/boxG", _leq(h, P[:, None, :], y) == _leq(h, x, G[None, :, :]))
    record("unit boxH diaF", _leq(h, sets, box_h(ctx, F)))
    record("counit diaF boxH", _leq(h, dia_f(ctx, H), sets))
    record("unit boxG diaP", _leq(h, sets, box_g(ctx, P)))
    record("counit diaP boxG", _leq(h, dia_p(ctx, G), sets))
    meet = h.meet[x, y]
    # d1: F a & G b <= F(a & b);  d2: P a & H b <= P(a & b)
    record("d1", _leq(h, h.meet[F[:, None, :], G[None, :, :]], dia_f(ctx, meet)))
    record("d2", _leq(h, h.meet[P[:, None, :], H[None, :, :]], dia_p(ctx, meet)))

    join = h.join[x, y]
    for name, box, dia, nxt in (("G(p|q) -> G p | F q", box_g, F, G),
                                ("H(p|q) -> H p | P q", box_h, P, H)):
        lhs = box(ctx, join)
        rhs = h.join[nxt[:, None, :], dia[None, :, :]]
        bad = np.argwhere(~h.leq[lhs, rhs])
        if len(bad):
            i, j, u = bad[0]
            rep.notes.append({
                "law": name, "holds": False,
                "p": ctx.named(sets[i]), "q": ctx.named(sets[j]),
                "point": ctx.universe[u],
                "lhs": h.names[lhs[i, j, u]], "rhs": h.names[rhs[i, j, u]]})
        else:
            rep.notes.append({"law": name, "holds": True})
    named = list(ctx.sets)
    if len(named) >= 2:
        # the same laws at the first two named sets, point by point
        p, q = ctx.sets[named[0]], ctx.sets[named[1]]
        pq = h.join[p, q]
        for name, lhs, rhs in (
                ("G(p|q) -> G p | F q", box_g(ctx, pq),
                 h.join[box_g(ctx, p), dia_f(ctx, q)]),
                ("H(p|q) -> H p | P q", box_h(ctx, pq),
                 h.join[box_h(ctx, p), dia_p(ctx, q)])):
            rep.notes.append({
                "law": name, "p": named[0], "q": named[1],
                "values": {u: [h.names[a], h.names[b]]
                           for u, a, b in zip(ctx.universe, lhs, rhs)},
                "holds": bool(h.leq[lhs, rhs].all())})
    return rep


def random_context(rng: np.random.Generator, heyting: HeytingAlgebra,
                   m: int) -> RoughContext:
    """Context on ``m`` points with a uniformly random H-valued relation."""
    universe = [f"x{i}" for i in range(m)]
    rel = rng.integers(0, heyting.n, size=(m, m))
    return RoughContext.make(heyting, universe, rel)


def classical_upper(rel: np.ndarray, s: np.ndarray) -> np.ndarray:
    """``{x : some y with x R y lies in s}`` for crisp ``rel`` and set ``s``."""
    m = len(s)
    return np.array([any(rel[x, y] and s[y] for y in range(m)) for x in range(m)])


def classical_lower(rel: np.ndarray, s: np.ndarray) -> np.ndarray:
    """``{x : every y with x R y lies in s}``."""
    m = len(s)
    return np.array([all(s[y] for y in range(m) if rel[x, y]) for x in range(m)])
