"""Finite Kripke frames and models for IntGC, Int2GC and Int2GC+FS.

Relations are square boolean numpy matrices indexed by world number.
Composition is diagrammatic::

    x (S o T) y  iff  there is z with x S z and z T y

so ``compose(S, T)`` is the boolean matrix product ``S @ T``.  Reading it
the other way round silently swaps conditions (R4) and (R5) below.

Frame conditions, with ``>=`` the converse of the preorder ``<=``:

* IntGC:     ``>= o R o >=  <=  R``                                   (R1)
* Int2GC:    ``>= o R1 o >= <= R1``  and  ``<= o R2 o <= <= R2``      (R2, R3)
* FS:        ``R o <= <= <= o R``    and  ``>= o R <= R o >=``        (R4, R5)

Satisfaction.  ``->`` and ``~`` look at all ``<=``-successors.  On an
Int2GC frame ``F`` is existential forward along R1, ``H`` universal
backward along R1, ``P`` existential backward along R2 and ``G`` universal
forward along R2.  An FS frame is read through R1 = R o >= and
R2 = <= o R.  An IntGC frame interprets only ``F`` and ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import ClassVar, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .formula import (And, BoxG, BoxH, DiaF, DiaP, Formula, Imp, Not, Or, Var,
                      _Const, TOP, as_formula, variables)
from .results import Verdict
from .semantics import UnboundVariable

__all__ = [
    "FrameError", "NotAPreorder", "InvalidInputFrame", "NotUpClosed",
    "EmptyLevel", "CapExceeded", "IntGCFrame", "Int2GCFrame", "FSFrame",
    "KripkeModel", "compose", "check_frame", "frame_conditions",
    "derived_int2gc_frame", "split_intgc_frames", "join_intgc_frames",
    "truth_set", "satisfies", "up_sets", "valid_in_frame", "check_persistence",
    "reachable_truth_sets", "enumerate_frames", "find_kripke_countermodel",
    "build_preference_frame", "all_preorders", "preorder_reps", "make_frame",
    "DEFAULT_WORLD_CAP",
]

DEFAULT_WORLD_CAP = 4


class FrameError(ValueError):
    pass


class NotAPreorder(FrameError):
    pass


class InvalidInputFrame(FrameError):
    pass


class NotUpClosed(FrameError):
    pass


class EmptyLevel(FrameError):
    pass


class CapExceeded(FrameError):
    pass


def compose(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Diagrammatic composition; works on stacks of matrices too."""
    return (s.astype(np.int32) @ t.astype(np.int32)) > 0


def _world_names(n: int) -> tuple[str, ...]:
    return tuple(f"w{i}" for i in range(n))


@dataclass(frozen=True, eq=False)
class _Frame:
    worlds: tuple
    leq: np.ndarray
    kind: ClassVar[str] = ""

    @property
    def n(self) -> int:
        return len(self.worlds)

    @property
    def geq(self) -> np.ndarray:
        return self.leq.T

    def index(self, w) -> int:
        if isinstance(w, (int, np.integer)):
            return int(w)
        return self.worlds.index(w)

    def modal_relations(self):
        """``(rf, rp)``: F/H are read along ``rf``, P/G along ``rp``."""
        raise NotImplementedError

    def __eq__(self, other):
        return (type(self) is type(other) and self.worlds == other.worlds
                and all(np.array_equal(a, b)
                        for a, b in zip(self._mats(), other._mats())))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class IntGCFrame(_Frame):
    r: np.ndarray = None
    kind: ClassVar[str] = "intgc"

    def _mats(self):
        return (self.leq, self.r)

    def modal_relations(self):
        return self.r, None


@dataclass(frozen=True, eq=False)
class Int2GCFrame(_Frame):
    r1: np.ndarray = None
    r2: np.ndarray = None
    kind: ClassVar[str] = "int2gc"

    def _mats(self):
        return (self.leq, self.r1, self.r2)

    def modal_relations(self):
        return self.r1, self.r2


@dataclass(frozen=True, eq=False)
class FSFrame(_Frame):
    r: np.ndarray = None
    kind: ClassVar[str] = "fs"

    def _mats(self):
        return (self.leq, self.r)

    def modal_relations(self):
        return compose(self.r, self.geq), compose(self.leq, self.r)


_KINDS = {"intgc": IntGCFrame, "int2gc": Int2GCFrame, "fs": FSFrame}


def _pairs_to_matrix(worlds, pairs) -> np.ndarray:
    idx = {w: i for i, w in enumerate(worlds)}
    m = np.zeros((len(worlds), len(worlds)), dtype=bool)
    for a, b in pairs:
        m[idx[a], idx[b]] = True
    return m


def make_frame(kind: str, worlds: Sequence[str], leq, close: bool = True, **rels):
    """Build a frame from pair lists (or matrices).

    With ``close`` the ``leq`` pairs are closed reflexively and transitively.
    """
    worlds = tuple(worlds)
    n = len(worlds)

    def mat(x):
        if isinstance(x, np.ndarray):
            return x.astype(bool)
        return _pairs_to_matrix(worlds, x)

    le = mat(leq)
    if close:
        le = le | np.eye(n, dtype=bool)
        while True:
            nxt = le | compose(le, le)
            if (nxt == le).all():
                break
            le = nxt
    cls = _KINDS[kind]
    return cls(worlds, le, **{k: mat(v) for k, v in rels.items()})


# -- frame conditions ------------------------------------------------------

def _included(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a <= b`` for (stacks of) relations."""
    return ~(a & ~b).any(axis=(-2, -1))


def frame_conditions(leq: np.ndarray, kind: str, r=None, r1=None, r2=None) -> dict:
    """Inclusion verdicts of the kind's conditions, as boolean arrays.

    ``r``/``r1``/``r2`` may be stacks ``(..., n, n)``; ``leq`` is shared.
    """
    geq = leq.T
    if kind == "intgc":
        return {"R1": _included(compose(compose(geq, r), geq), r)}
    if kind == "int2gc":
        return {"R2": _included(compose(compose(geq, r1), geq), r1),
                "R3": _included(compose(compose(leq, r2), leq), r2)}
    if kind == "fs":
        return {"R4": _included(compose(r, leq), compose(leq, r)),
                "R5": _included(compose(geq, r), compose(r, geq))}
    raise ValueError(f"unknown frame kind {kind!r}")


def _preorder_witness(frame) -> Verdict | None:
    le = frame.leq
    n = frame.n
    for i in range(n):
        if not le[i, i]:
            w = frame.worlds[i]
            return Verdict(False, {"condition": "NotAPreorder", "pair": [w, w]},
                           "<= is not reflexive")
    bad = np.argwhere(compose(le, le) & ~le)
    if len(bad):
        i, j = bad[0]
        return Verdict(False, {"condition": "NotAPreorder",
                               "pair": [frame.worlds[i], frame.worlds[j]]},
                       "<= is not transitive")
    return None


def check_frame(frame, kind: str | None = None) -> Verdict:
    """Check the preorder and the inclusions of ``kind`` (default: the
    frame's own kind).  The witness names the first pair in the left-hand
    relation missing from the right-hand one."""
    kind = kind or frame.kind
    pre = _preorder_witness(frame)
    if pre is not None:
        return pre
    le, ge = frame.leq, frame.geq
    if kind == "intgc":
        r = frame.r if isinstance(frame, (IntGCFrame, FSFrame)) else frame.r1
        checks = [("R1", compose(compose(ge, r), ge), r)]
    elif kind == "int2gc":
        r1, r2 = frame.modal_relations() if isinstance(frame, FSFrame) else (
            frame.r1, frame.r2)
        checks = [("R2", compose(compose(ge, r1), ge), r1),
                  ("R3", compose(compose(le, r2), le), r2)]
    elif kind == "fs":
        r = frame.r
        checks = [("R4", compose(r, le), compose(le, r)),
                  ("R5", compose(ge, r), compose(r, ge))]
    else:
        raise ValueError(f"unknown frame kind {kind!r}")
    for name, lhs, rhs in checks:
        bad = np.argwhere(lhs & ~rhs)
        if len(bad):
            i, j = bad[0]
            return Verdict(False, {"condition": name,
                                   "pair": [frame.worlds[i], frame.worlds[j]]},
                           f"{name} fails")
    return Verdict(True)


def derived_int2gc_frame(f: FSFrame) -> Int2GCFrame:
    """``(X, <=, R o >=, <= o R)``."""
    v = check_frame(f, "fs")
    if not v:
        raise InvalidInputFrame(f"not an FS frame: {v.witness}")
    r1, r2 = f.modal_relations()
    return Int2GCFrame(f.worlds, f.leq, r1, r2)


def split_intgc_frames(f: Int2GCFrame) -> tuple[IntGCFrame, IntGCFrame]:
    """``(X, <=, R1)`` and ``(X, <=, R2^-1)``."""
    v = check_frame(f, "int2gc")
    if not v:
        raise InvalidInputFrame(f"not an Int2GC frame: {v.witness}")
    return (IntGCFrame(f.worlds, f.leq, f.r1.copy()),
            IntGCFrame(f.worlds, f.leq, f.r2.T.copy()))


def join_intgc_frames(a: IntGCFrame, b: IntGCFrame) -> Int2GCFrame:
    """Inverse of :func:`split_intgc_frames`."""
    if a.worlds != b.worlds or not np.array_equal(a.leq, b.leq):
        raise InvalidInputFrame("frames differ in worlds or order")
    for g in (a, b):
        v = check_frame(g, "intgc")
        if not v:
            raise InvalidInputFrame(f"not an IntGC frame: {v.witness}")
    return Int2GCFrame(a.worlds, a.leq, a.r.copy(), b.r.T.copy())


# -- satisfaction ----------------------------------------------------------

def _truth(f: Formula, val: Mapping[str, np.ndarray], leq, rf, rp, n: int, memo):
    """Truth sets as boolean arrays ``(..., n)``; relations broadcast against
    ``A[..., None, :]``."""

    def sw(m):
        return np.swapaxes(m, -1, -2)

    def ev(g):
        if g in memo:
            return memo[g]
        if isinstance(g, Var):
            if g.name not in val:
                raise UnboundVariable(g.name)
            r = val[g.name]
        elif isinstance(g, _Const):
            r = np.full(n, g is TOP)
        elif isinstance(g, Not):
            r = ~(ev(g.f)[..., None, :] & leq).any(-1)
        elif isinstance(g, And):
            r = ev(g.l) & ev(g.r)
        elif isinstance(g, Or):
            r = ev(g.l) | ev(g.r)
        elif isinstance(g, Imp):
            bad = ev(g.l) & ~ev(g.r)
            r = ~(bad[..., None, :] & leq).any(-1)
        else:
            rel = rf if isinstance(g, (DiaF, BoxH)) else rp
            if rel is None:
                raise ValueError(f"{type(g).__name__} is not interpreted on this frame")
            a = ev(g.f)
            if isinstance(g, DiaF):
                r = (a[..., None, :] & rel).any(-1)
            elif isinstance(g, BoxH):
                r = ~(~a[..., None, :] & sw(rel)).any(-1)
            elif isinstance(g, DiaP):
                r = (a[..., None, :] & sw(rel)).any(-1)
            else:
                r = ~(~a[..., None, :] & rel).any(-1)
        memo[g] = r
        return r

    return ev(f)


def up_sets(leq: np.ndarray) -> np.ndarray:
    """All ``<=``-up-closed subsets as rows of a boolean array, ordered by
    their bitmask (world 0 is the lowest bit)."""
    n = leq.shape[0]
    masks = np.arange(1 << n)
    sets = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    bad = (sets[:, :, None] & leq[None] & ~sets[:, None, :]).any(axis=(1, 2))
    return sets[~bad]


def _is_up_closed(leq, s) -> bool:
    return not (s[:, None] & leq & ~s[None, :]).any()


@dataclass(frozen=True, eq=False)
class KripkeModel:
    frame: object
    valuation: dict

    def __post_init__(self):
        n = self.frame.n
        for k, s in self.valuation.items():
            if s.shape != (n,):
                raise FrameError(f"valuation of {k} has wrong length")

    @classmethod
    def make(cls, frame, valuation: Mapping, check: bool = True) -> "KripkeModel":
        """``valuation`` maps variables to world lists or boolean vectors.

        With ``check`` every set must be ``<=``-up-closed.
        """
        val = {}
        for k, ws in valuation.items():
            if isinstance(ws, np.ndarray) and ws.dtype == bool:
                s = ws.copy()
            else:
                s = np.zeros(frame.n, dtype=bool)
                for w in ws:
                    s[frame.index(w)] = True
            if check and not _is_up_closed(frame.leq, s):
                raise NotUpClosed(f"v({k}) is not up-closed")
            val[k] = s
        return cls(frame, val)

    def worlds_of(self, name: str) -> list:
        return [w for w, b in zip(self.frame.worlds, self.valuation[name]) if b]


def truth_set(m: KripkeModel, f: Formula | str) -> np.ndarray:
    f = as_formula(f)
    rf, rp = m.frame.modal_relations()
    return _truth(f, m.valuation, m.frame.leq, rf, rp, m.frame.n, {})


def satisfies(m: KripkeModel, w, f: Formula | str) -> bool:
    return bool(truth_set(m, f)[m.frame.index(w)])


def _valuation_grid(leq, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Up-sets and the index grid of all ``k``-tuples of them (lexicographic)."""
    ups = up_sets(leq)
    grid = np.array(list(product(range(len(ups)), repeat=k)), dtype=np.int64)
    return ups, grid.reshape(len(grid), k)


def valid_in_frame(f: Formula | str, frame) -> Verdict:
    """Valid iff true at every world under every up-set valuation of the
    variables of ``f``.  The witness is ``{"valuation": ..., "world": ...}``."""
    f = as_formula(f)
    names = variables(f)
    ups, grid = _valuation_grid(frame.leq, len(names))
    val = {nm: ups[grid[:, i]] for i, nm in enumerate(names)}
    rf, rp = frame.modal_relations()
    t = np.broadcast_to(_truth(f, val, frame.leq, rf, rp, frame.n, {}),
                        (len(grid), frame.n))
    bad = np.argwhere(~t)
    if not len(bad):
        return Verdict(True)
    vi, wi = bad[0]
    wit = {"valuation": {nm: [frame.worlds[j] for j in np.flatnonzero(val[nm][vi])]
                         for nm in names},
           "world": frame.worlds[wi]}
    return Verdict(False, wit, "formula false at world")


def check_persistence(m: KripkeModel, formulas: Iterable) -> Verdict:
    """Whether ``x |= A`` and ``x <= y`` give ``y |= A`` for all listed ``A``."""
    rf, rp = m.frame.modal_relations()
    memo = {}
    le = m.frame.leq
    for f in formulas:
        f = as_formula(f)
        t = _truth(f, m.valuation, le, rf, rp, m.frame.n, memo)
        bad = np.argwhere(t[:, None] & le & ~t[None, :])
        if len(bad):
            x, y = bad[0]
            return Verdict(False, {"formula": str(f), "x": m.frame.worlds[x],
                                   "y": m.frame.worlds[y]}, "persistence fails")
    return Verdict(True)


def _pack(sets: np.ndarray) -> np.ndarray:
    return (sets.astype(np.int64) << np.arange(sets.shape[-1])).sum(-1)


def reachable_truth_sets(m: KripkeModel, max_depth: int,
                         names: Sequence[str] | None = None) -> np.ndarray:
    """Distinct truth sets of all formulas of depth <= ``max_depth`` over
    ``names`` (default: every variable of the valuation).

    Truth sets are compositional, so closing the atomic sets under the
    connectives ``max_depth`` times yields exactly the truth sets of the
    formulas of bounded depth, without listing the formulas.
    """
    fr = m.frame
    n = fr.n
    rf, rp = fr.modal_relations()
    le = fr.leq
    names = sorted(m.valuation) if names is None else list(names)
    atoms = np.array([m.valuation[k] for k in names]
                     + [np.ones(n, bool), np.zeros(n, bool)]).reshape(-1, n)

    def uniq(s):
        _, i = np.unique(_pack(s), return_index=True)
        return s[np.sort(i)]

    cur = uniq(atoms)
    for _ in range(max_depth):
        memo = {}
        a = cur
        val = {"a": a, "l": a[:, None, :], "r": a[None, :, :]}
        new = [atoms]
        for op in (Not(Var("a")), DiaF(Var("a")), BoxH(Var("a"))):
            new.append(_truth(op, val, le, rf, rp, n, memo))
        if rp is not None:
            for op in (DiaP(Var("a")), BoxG(Var("a"))):
                new.append(_truth(op, val, le, rf, rp, n, memo))
        for op in (And(Var("l"), Var("r")), Or(Var("l"), Var("r")),
                   Imp(Var("l"), Var("r"))):
            new.append(np.broadcast_to(_truth(op, val, le, rf, rp, n, memo),
                                       (len(a), len(a), n)).reshape(-1, n))
        cur = uniq(np.concatenate(new))
    return cur


# -- enumeration -----------------------------------------------------------

def _bits(n: int) -> np.ndarray:
    """All ``2**(n*n)`` relations on ``n`` worlds, code order."""
    codes = np.arange(1 << (n * n), dtype=np.int64)
    return (((codes[:, None] >> np.arange(n * n)) & 1).astype(bool)
            .reshape(-1, n, n))


def _code(rels: np.ndarray) -> np.ndarray:
    n = rels.shape[-1]
    return (rels.reshape(*rels.shape[:-2], n * n).astype(np.int64)
            << np.arange(n * n)).sum(-1)


@lru_cache(maxsize=None)
def all_preorders(n: int) -> np.ndarray:
    """Every preorder on ``n`` labelled worlds, in code order."""
    if n == 0:
        return np.zeros((1, 0, 0), bool)
    rels = _bits(n)
    rels = rels[np.diagonal(rels, axis1=1, axis2=2).all(1)]
    return rels[_included(compose(rels, rels), rels)]


@lru_cache(maxsize=None)
def preorder_reps(n: int) -> tuple:
    """One preorder per isomorphism class (least code in its orbit) with its
    automorphism group, as ``(leq, [perm, ...])`` pairs in code order."""
    pre = all_preorders(n)
    codes = _code(pre)
    perms = [np.array(p) for p in permutations(range(n))]
    out = []
    for le, c in zip(pre, codes):
        imgs = [int(_code(le[np.ix_(np.argsort(p), np.argsort(p))])) for p in perms]
        if min(imgs) < c:
            continue
        auts = [p for p, ci in zip(perms, imgs) if ci == c]
        out.append((le, auts))
    return tuple(out)


def _permute(rels: np.ndarray, p: np.ndarray) -> np.ndarray:
    q = np.argsort(p)
    return rels[..., q, :][..., :, q]


def _canonical_mask(rels: np.ndarray, auts) -> np.ndarray:
    c = _code(rels)
    keep = np.ones(len(rels), bool)
    for p in auts:
        keep &= _code(_permute(rels, p)) >= c
    return keep


def _frame_groups(n: int, kind: str) -> Iterator[tuple]:
    """Yield ``(leq, rf, rp, build)`` groups; ``rf``/``rp`` are stacks of the
    relations the satisfaction clauses use and ``build(i)`` makes the
    ``i``-th frame of the group."""
    worlds = _world_names(n)
    rels = _bits(n)
    for le, auts in preorder_reps(n):
        if kind in ("intgc", "fs"):
            ok = frame_conditions(le, kind, r=rels)
            good = rels[np.logical_and.reduce(list(ok.values()))]
            good = good[_canonical_mask(good, auts)]
            if not len(good):
                continue
            if kind == "fs":
                rf, rp = compose(good, le.T), compose(le, good)
                cls = FSFrame
            else:
                rf, rp, cls = good, None, IntGCFrame
            yield le, rf, rp, (lambda i, g=good, c=cls, l=le: c(worlds, l, g[i]))
        elif kind == "int2gc":
            ok1 = rels[frame_conditions(le, "int2gc", r1=rels, r2=rels)["R2"]]
            ok2 = rels[frame_conditions(le, "int2gc", r1=rels, r2=rels)["R3"]]
            c1 = _code(ok1)
            c2 = _code(ok2)
            for i, r1 in enumerate(ok1):
                stab = []
                skip = False
                for p in auts:
                    cp = int(_code(_permute(r1, p)))
                    if cp < c1[i]:
                        skip = True
                        break
                    if cp == c1[i]:
                        stab.append(p)
                if skip:
                    continue
                keep = np.ones(len(ok2), bool)
                for p in stab:
                    keep &= _code(_permute(ok2, p)) >= c2
                r2s = ok2[keep]
                rf = np.broadcast_to(r1, r2s.shape)
                yield le, rf, r2s, (lambda j, a=r1, b=r2s, l=le:
                                    Int2GCFrame(worlds, l, a, b[j]))
        else:
            raise ValueError(f"unknown frame kind {kind!r}")


def _check_world_cap(max_worlds, cap):
    if max_worlds > cap:
        raise CapExceeded(f"{max_worlds} worlds exceeds cap {cap}")


def enumerate_frames(max_worlds: int, kind: str = "fs",
                     cap: int = DEFAULT_WORLD_CAP) -> Iterator:
    """Frames of ``kind`` with 1..max_worlds worlds, one per isomorphism
    class.  Order: world count, preorder representative, relation code."""
    _check_world_cap(max_worlds, cap)
    for n in range(1, max_worlds + 1):
        for le, rf, rp, build in _frame_groups(n, kind):
            for i in range(len(rf)):
                yield build(i)


def frame_groups(max_worlds: int, kind: str = "fs", cap: int = DEFAULT_WORLD_CAP):
    """Batched view of :func:`enumerate_frames` (same order)."""
    _check_world_cap(max_worlds, cap)
    for n in range(1, max_worlds + 1):
        yield from _frame_groups(n, kind)


def batch_truth(f: Formula, le, rf, rp, names, max_cells: int = 1 << 22):
    """Truth arrays ``(B, V, n)`` for a group of frames sharing ``le``, over
    all up-set valuations of ``names``; computed in chunks of frames."""
    n = le.shape[0]
    ups, grid = _valuation_grid(le, len(names))
    val = {nm: ups[grid[:, i]][None] for i, nm in enumerate(names)}
    b = len(rf)
    step = max(1, max_cells // max(1, len(grid) * n * n))
    for s in range(0, b, step):
        rf_c = rf[s:s + step][:, None]
        rp_c = None if rp is None else rp[s:s + step][:, None]
        t = _truth(f, val, le, rf_c, rp_c, n, {})
        yield s, np.broadcast_to(t, (len(rf_c), len(grid), n)), ups, grid


def find_kripke_countermodel(f: Formula | str, max_worlds: int, kind: str = "fs",
                             cap: int = DEFAULT_WORLD_CAP):
    """First ``(model, world)`` refuting ``f`` over frames of ``kind`` with at
    most ``max_worlds`` worlds, searched by world count; or ``None``."""
    f = as_formula(f)
    names = variables(f)
    for le, rf, rp, build in frame_groups(max_worlds, kind, cap):
        for s, t, ups, grid in batch_truth(f, le, rf, rp, names):
            bad = np.argwhere(~t)
            if len(bad):
                bi, vi, wi = bad[0]
                frame = build(s + bi)
                m = KripkeModel.make(frame, {nm: ups[grid[vi, i]]
                                             for i, nm in enumerate(names)})
                return m, frame.worlds[wi]
    return None


def build_preference_frame(levels: Sequence[Sequence[str]]) -> FSFrame:
    """Worlds arranged in levels.  ``x <= y`` iff ``x = y`` or ``x`` sits on a
    strictly lower level; ``x R y`` iff both share a level."""
    if not levels or any(len(lv) == 0 for lv in levels):
        raise EmptyLevel("levels must be nonempty")
    worlds = [w for lv in levels for w in lv]
    if len(set(worlds)) != len(worlds):
        raise FrameError("levels must be disjoint")
    lvl = np.array([i for i, lv in enumerate(levels) for _ in lv])
    le = (lvl[:, None] < lvl[None, :]) | np.eye(len(worlds), dtype=bool)
    r = lvl[:, None] == lvl[None, :]
    return FSFrame(tuple(worlds), le, r)
