"""Algebraic semantics: valuations into finite H2GC algebras.

A valuation maps variable names to carrier elements (names or indices).
Truth is "evaluates to the top element".  Besides the plain recursive
evaluator there is a vectorised one that computes the value of a formula
under every valuation at once as a numpy array with one axis per variable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Iterable, Mapping

import numpy as np

from .algebra import DEFAULT_CAP, H2GCAlgebra, enumerate_h2gc
from .formula import (And, BoxG, BoxH, DiaF, DiaP, Formula, Imp, Not, Or, Var,
                      _Const, as_formula, variables, TOP)
from .results import Report, Verdict

__all__ = [
    "UnboundVariable", "eval_formula", "evaluate_all", "valid_in_algebra",
    "find_algebraic_countermodel", "check_axiom_suite", "resolve_valuation",
]


class UnboundVariable(KeyError):
    def __str__(self):
        return f"variable {self.args[0]!r} has no value"


_UNARY_OPS = {DiaF: "fdia", BoxG: "gbox", DiaP: "pdia", BoxH: "hbox"}


def resolve_valuation(alg: H2GCAlgebra, v: Mapping) -> dict[str, int]:
    """Turn element names into indices; integers pass through."""
    return {k: (x if isinstance(x, (int, np.integer)) else alg.index(x))
            for k, x in v.items()}


def eval_formula(f: Formula | str, alg: H2GCAlgebra, v: Mapping,
                 cache: dict | None = None) -> int:
    """Value (an element index) of ``f`` under ``v``.

    ``cache`` may be shared between calls with the same algebra and
    valuation; it is keyed by subformula.
    """
    f = as_formula(f)
    v = resolve_valuation(alg, v)
    h = alg.heyting
    memo = {} if cache is None else cache

    def ev(g):
        if g in memo:
            return memo[g]
        if isinstance(g, Var):
            if g.name not in v:
                raise UnboundVariable(g.name)
            r = int(v[g.name])
        elif isinstance(g, _Const):
            r = h.top if g is TOP else h.bottom
        elif isinstance(g, Not):
            r = int(h.neg[ev(g.f)])
        elif isinstance(g, And):
            r = int(h.meet[ev(g.l), ev(g.r)])
        elif isinstance(g, Or):
            r = int(h.join[ev(g.l), ev(g.r)])
        elif isinstance(g, Imp):
            r = int(h.rpc[ev(g.l), ev(g.r)])
        else:
            r = int(alg.op(_UNARY_OPS[type(g)])[ev(g.f)])
        memo[g] = r
        return r

    return ev(f)


# ``eval`` is the natural name but shadows the builtin inside this module
eval = eval_formula  # noqa: A001


def evaluate_all(f: Formula | str, alg: H2GCAlgebra,
                 names: list[str] | None = None, memo: dict | None = None) -> np.ndarray:
    """Values of ``f`` under every valuation of ``names``.

    The result has one axis of length ``alg.n`` per name, in the given order
    (default: the sorted variables of ``f``).  ``memo`` may be shared between
    calls with the same algebra and ``names``.
    """
    f = as_formula(f)
    names = variables(f) if names is None else list(names)
    k, n = len(names), alg.n
    h = alg.heyting
    axis = {nm: i for i, nm in enumerate(names)}
    shape = (n,) * k
    memo = {} if memo is None else memo

    def ev(g):
        if g in memo:
            return memo[g]
        if isinstance(g, Var):
            if g.name not in axis:
                raise UnboundVariable(g.name)
            s = [1] * k
            s[axis[g.name]] = n
            r = np.arange(n).reshape(s)
        elif isinstance(g, _Const):
            r = np.full([1] * k, h.top if g is TOP else h.bottom)
        elif isinstance(g, Not):
            r = h.neg[ev(g.f)]
        elif isinstance(g, And):
            r = h.meet[ev(g.l), ev(g.r)]
        elif isinstance(g, Or):
            r = h.join[ev(g.l), ev(g.r)]
        elif isinstance(g, Imp):
            r = h.rpc[ev(g.l), ev(g.r)]
        else:
            r = alg.op(_UNARY_OPS[type(g)])[ev(g.f)]
        memo[g] = r
        return r

    return np.broadcast_to(ev(f), shape)


def valid_in_algebra(f: Formula | str, alg: H2GCAlgebra) -> Verdict:
    """Valid iff the value is 1 under every valuation of the variables of ``f``.

    The witness of a failure is the lexicographically first bad valuation,
    as a dict of element names.
    """
    f = as_formula(f)
    names = variables(f)
    vals = evaluate_all(f, alg, names)
    bad = np.argwhere(vals != alg.top)
    if len(bad) == 0:
        return Verdict(True)
    idx = bad[0]
    w = {nm: alg.names[int(i)] for nm, i in zip(names, idx)}
    return Verdict(False, w, f"value {alg.names[int(vals[tuple(idx)])]}")


def _first_refuted(args):
    f, algs = args
    for i, alg in enumerate(algs):
        v = valid_in_algebra(f, alg)
        if not v.ok:
            return i, v.witness
    return None


def find_algebraic_countermodel(f: Formula | str, max_size: int,
                                require_fs: bool = False, cap: int = DEFAULT_CAP,
                                jobs: int = 1, chunk: int = 256):
    """First ``(algebra, valuation)`` in enumeration order where ``f`` is not 1.

    Algebras are searched by size, then enumeration order; valuations
    lexicographically.  Returns ``None`` when the bounded search space holds
    no countermodel.  With ``jobs > 1`` chunks of the algebra stream are
    checked in parallel and the earliest hit wins.
    """
    f = as_formula(f)
    stream = enumerate_h2gc(max_size, require_fs=require_fs, cap=cap)
    if jobs <= 1:
        for alg in stream:
            v = valid_in_algebra(f, alg)
            if not v.ok:
                return alg, v.witness
        return None

    def chunks():
        while True:
            c = list(islice(stream, chunk))
            if not c:
                return
            yield c

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        pending = []
        it = chunks()
        for c in it:
            pending.append((c, ex.submit(_first_refuted, (f, c))))
            if len(pending) >= 2 * jobs:
                c0, fut = pending.pop(0)
                hit = fut.result()
                if hit is not None:
                    for _, other in pending:
                        other.cancel()
                    return c0[hit[0]], hit[1]
        for c0, fut in pending:
            hit = fut.result()
            if hit is not None:
                return c0[hit[0]], hit[1]
    return None


def _schema_instance(schema: Formula) -> Formula:
    """Instantiate metavariables with distinct fresh variables p0, p1, ..."""
    from .formula import instantiate, metavariables
    return instantiate(schema, {m: Var(f"p{i}")
                                for i, m in enumerate(metavariables(schema))})


def check_axiom_suite(system, max_size: int, algebras: Iterable | None = None
                      ) -> Report:
    """Check every axiom schema of ``system`` on every algebra of its class.

    ``system`` is a :class:`~int2gc.proof.ProofSystem` or the name of a
    builtin one.  The class is H2GC+FS when the system needs the Fischer
    Servi identities, H2GC otherwise.
    """
    from .proof.systems import get_system
    sysm = get_system(system) if isinstance(system, str) else system
    rep = Report(f"axioms of {sysm.name} over algebras <= {max_size}")
    if algebras is None:
        algebras = list(enumerate_h2gc(max_size, require_fs=sysm.requires_fs))
    else:
        algebras = list(algebras)
    for name, schema in sysm.axioms.items():
        inst = _schema_instance(schema)
        for alg in algebras:
            rep.checked += 1
            v = valid_in_algebra(inst, alg)
            if not v.ok:
                rep.fail((name, alg.label or repr(alg), v.witness))
    return rep
