"""Canonical frames of finite H2GC algebras.

Worlds are the proper prime filters of the algebra ordered by inclusion.
For filters ``x, y``::

    x R1 y  iff  y <= {a : F a in x}     iff  {a : H a in y} <= x
    x R2 y  iff  {a : G a in x} <= y     iff  x <= {a : P a in y}

The FS canonical frame takes ``R = R1 & R2``.  A canonical valuation puts
``x`` in ``v*(p)`` exactly when ``v(p)`` is a member of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .algebra import H2GCAlgebra, HeytingAlgebra, fs_flags, prime_filters
from .formula import as_formula
from .kripke import FSFrame, Int2GCFrame, KripkeModel, _truth, check_frame
from .results import Report
from .semantics import eval_formula, resolve_valuation

__all__ = [
    "CanonicalFrame", "NotFS", "canonical_frame", "canonical_valuation",
    "key_lemma_check", "prime_filter_extension", "filter_name",
    "preimage", "preimage_galois_check",
]


class NotFS(UserWarning):
    """An FS canonical frame was requested for an algebra without fs1/fs2."""


def filter_name(h, f) -> str:
    return "{" + ",".join(h.names[i] for i in sorted(f)) + "}"


def preimage(op: np.ndarray, s) -> frozenset:
    """``{a : op(a) in s}``."""
    s = set(s)
    return frozenset(a for a in range(len(op)) if int(op[a]) in s)


@dataclass(eq=False)
class CanonicalFrame:
    algebra: H2GCAlgebra
    filters: list
    frame: object
    kind: str
    r1: np.ndarray
    r2: np.ndarray
    warnings: list = field(default_factory=list)

    @property
    def worlds(self):
        return self.frame.worlds

    @property
    def leq(self):
        return self.frame.leq

    @property
    def flagged(self) -> bool:
        return bool(self.warnings)


def _relations(alg: H2GCAlgebra, filters):
    k = len(filters)
    r1 = np.zeros((k, k), bool)
    r2 = np.zeros((k, k), bool)
    r1_alt = np.zeros((k, k), bool)
    r2_alt = np.zeros((k, k), bool)
    pre = {nm: [preimage(alg.op(nm), x) for x in filters]
           for nm in ("fdia", "gbox", "pdia", "hbox")}
    for i, x in enumerate(filters):
        for j, y in enumerate(filters):
            r1[i, j] = y <= pre["fdia"][i]
            r1_alt[i, j] = pre["hbox"][j] <= x
            r2[i, j] = pre["gbox"][i] <= y
            r2_alt[i, j] = x <= pre["pdia"][j]
    return r1, r2, r1_alt, r2_alt


def canonical_frame(alg: H2GCAlgebra, kind: str = "int2gc") -> CanonicalFrame:
    """Canonical Int2GC or FS frame of ``alg``.

    Both descriptions of each relation are computed and must agree.  For
    ``kind="fs"`` on an algebra failing fs1 or fs2 the frame is still built
    but carries a :class:`NotFS` warning, since (R4)/(R5) may then fail.
    """
    if kind not in ("int2gc", "fs"):
        raise ValueError(f"unknown canonical kind {kind!r}")
    filters = prime_filters(alg.heyting)
    r1, r2, r1_alt, r2_alt = _relations(alg, filters)
    if not (np.array_equal(r1, r1_alt) and np.array_equal(r2, r2_alt)):
        raise AssertionError("preimage characterisations disagree; "
                             "the unary tables are not Galois pairs")
    worlds = tuple(filter_name(alg.heyting, f) for f in filters)
    le = np.array([[x <= y for y in filters] for x in filters], dtype=bool)
    le = le.reshape(len(filters), len(filters))
    warnings = []
    if kind == "fs":
        if not fs_flags(alg).is_fs:
            warnings.append(NotFS("algebra fails fs1 or fs2"))
        frame = FSFrame(worlds, le, r1 & r2)
    else:
        frame = Int2GCFrame(worlds, le, r1, r2)
    return CanonicalFrame(alg, filters, frame, kind, r1, r2, warnings)


def canonical_valuation(alg: H2GCAlgebra, v: Mapping, kind: str = "fs",
                        cf: CanonicalFrame | None = None) -> KripkeModel:
    """Model on the canonical frame with ``x in v*(p)`` iff ``v(p) in x``."""
    cf = cf or canonical_frame(alg, kind)
    v = resolve_valuation(alg, v)
    val = {p: np.array([a in x for x in cf.filters], dtype=bool)
           for p, a in v.items()}
    return KripkeModel.make(cf.frame, val)


def key_lemma_check(alg: H2GCAlgebra, v: Mapping, formulas: Iterable,
                    kind: str = "fs", cf: CanonicalFrame | None = None) -> Report:
    """Check ``x |= A  iff  v(A) in x`` on the canonical model for every
    listed formula and prime filter ``x``."""
    cf = cf or canonical_frame(alg, kind)
    model = canonical_valuation(alg, v, kind, cf)
    rf, rp = cf.frame.modal_relations()
    member = np.array([[a in x for x in cf.filters] for a in range(alg.n)],
                      dtype=bool).reshape(alg.n, len(cf.filters))
    rep = Report(f"key lemma on {alg.label or 'algebra'}")
    amemo, kmemo = {}, {}
    for f in formulas:
        f = as_formula(f)
        a = eval_formula(f, alg, v, amemo)
        t = _truth(f, model.valuation, cf.frame.leq, rf, rp, cf.frame.n, kmemo)
        rep.checked += 1
        if not np.array_equal(np.broadcast_to(t, member[a].shape), member[a]):
            bad = int(np.flatnonzero(t != member[a])[0])
            rep.fail({"formula": str(f), "world": cf.worlds[bad],
                      "value": alg.names[a], "satisfied": bool(t[bad])})
    if not check_frame(cf.frame):
        rep.notes.append("canonical frame fails its frame conditions")
    return rep


def prime_filter_extension(h: HeytingAlgebra, base, forbidden=()):
    """First prime filter (in :func:`prime_filters` order) containing
    ``base`` and disjoint from ``forbidden``, or ``None``."""
    if isinstance(h, H2GCAlgebra):
        h = h.heyting

    def idx(xs):
        return {x if isinstance(x, (int, np.integer)) else h.index(x) for x in xs}

    b, bad = idx(base), idx(forbidden)
    for f in prime_filters(h):
        if b <= f and not (f & bad):
            return f
    return None


def preimage_galois_check(alg: H2GCAlgebra) -> bool:
    """On up-sets ``x, y`` of the carrier:
    ``{a : H a in x} <= y`` iff ``x <= {a : F a in y}``."""
    h = alg.heyting
    n = h.n
    ups = []
    for mask in range(1 << n):
        s = frozenset(i for i in range(n) if mask >> i & 1)
        if all(b in s for a in s for b in np.flatnonzero(h.leq[a])):
            ups.append(s)
    for x in ups:
        hx = preimage(alg.hbox, x)
        for y in ups:
            if (hx <= y) != (x <= preimage(alg.fdia, y)):
                return False
    return True
