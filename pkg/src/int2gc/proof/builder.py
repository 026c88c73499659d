"""Programmatic construction of Hilbert proofs.

The builder keeps a stack of hypotheses.  A formula ``X`` derived under
hypotheses ``H1 .. Hk`` is stored as the line ``H1 -> (H2 -> ... -> X)``,
so leaving a scope turns ``X`` into ``Hk -> X`` for free.  Modus ponens
under hypotheses is compiled with ``A1``/``A2``, the usual proof of the
deduction theorem.  Modal rules and substitution only apply to lines
derived without hypotheses.

Macros such as :meth:`Builder.mono` and :meth:`Builder.gc` use a rule when
the system has it and otherwise emulate it with the system's axioms, so a
single derivation can be replayed in several systems.
"""

from __future__ import annotations

from contextlib import contextmanager

from ..formula import (And, BoxG, BoxH, DiaF, DiaP, Formula, Imp, Not, BOT,
                       TOP, as_formula, instantiate)
from .checker import (Justification, ProofLine, ProofScript, check_line,
                      depends_on_premise)
from .systems import ProofSystem, get_system

__all__ = ["Builder", "NotDerived"]


class NotDerived(Exception):
    """A builder step cited a formula that has not been derived."""


def _f(x) -> Formula:
    return as_formula(x)


_MODAL = {"F": DiaF, "G": BoxG, "P": DiaP, "H": BoxH}


class Builder:
    def __init__(self, system: ProofSystem | str, premises=()):
        self.system = get_system(system) if isinstance(system, str) else system
        self.premises = [_f(p) for p in premises]
        self.lines: list[ProofLine] = []
        self.index: dict[Formula, int] = {}
        self.ctx: list[Formula] = []
        self.dependent: set[int] = set()

    # -- raw lines ---------------------------------------------------------

    def _emit(self, f: Formula, just: Justification) -> int:
        if f in self.index:
            return self.index[f]
        k = len(self.lines) + 1
        check_line(self.system, [ln.f for ln in self.lines], k, f, just,
                   self.premises, self.dependent)
        if depends_on_premise(just, self.dependent):
            self.dependent.add(k)
        self.lines.append(ProofLine(f, just))
        self.index[f] = k
        return k

    def _wrap(self, d: int, x: Formula) -> Formula:
        for h in reversed(self.ctx[:d]):
            x = Imp(h, x)
        return x

    def _known(self, d: int, x: Formula) -> bool:
        return self._wrap(d, x) in self.index

    def _raise(self, x: Formula, j: int, d: int) -> None:
        """Known under ``ctx[:j]``; make it known under ``ctx[:d]``."""
        for lvl in range(j, d):
            h = self.ctx[lvl]
            inst = Imp(x, Imp(h, x))
            self._axiom_at(lvl, "A1", inst)
            self._mp_at(lvl, x, Imp(h, x))

    def _axiom_at(self, d: int, name: str, f: Formula) -> None:
        self._emit(f, Justification.axiom(name))
        self._raise(f, 0, d)

    def _mp_at(self, d: int, a: Formula, b: Formula) -> None:
        if self._known(d, b):
            return
        if d == 0:
            self._emit(b, Justification.mp(self.index[a], self.index[Imp(a, b)]))
            return
        h = self.ctx[d - 1]
        a2 = Imp(Imp(h, Imp(a, b)), Imp(Imp(h, a), Imp(h, b)))
        self._axiom_at(d - 1, "A2", a2)
        self._mp_at(d - 1, Imp(h, Imp(a, b)), Imp(Imp(h, a), Imp(h, b)))
        self._mp_at(d - 1, Imp(h, a), Imp(h, b))

    def _need(self, x: Formula) -> Formula:
        d = len(self.ctx)
        for j in range(d, -1, -1):
            if self._known(j, x):
                self._raise(x, j, d)
                return x
        raise NotDerived(str(x))

    def has(self, x) -> bool:
        x = _f(x)
        return any(self._known(j, x) for j in range(len(self.ctx) + 1))

    # -- basic steps -------------------------------------------------------

    def ax(self, name: str, **binding) -> Formula:
        """Instance of axiom ``name`` with metavariables bound to formulas."""
        f = instantiate(self.system.axioms[name], {k: _f(v) for k, v in binding.items()})
        self._axiom_at(len(self.ctx), name, f)
        return f

    def mp(self, a, b) -> Formula:
        """From ``a`` and ``a -> b`` conclude ``b``."""
        a, b = _f(a), _f(b)
        self._need(a)
        self._need(Imp(a, b))
        self._mp_at(len(self.ctx), a, b)
        return b

    def premise(self, x) -> Formula:
        x = _f(x)
        self._emit(x, Justification.premise())
        return x

    def _top_level(self, x: Formula) -> int:
        if x not in self.index:
            raise NotDerived(f"{x} is not derived without hypotheses")
        return self.index[x]

    def rule(self, name: str, x) -> Formula:
        """Apply a one-premise rule to a line derived without hypotheses."""
        from .systems import RULE_SHAPES, match_schema
        x = _f(x)
        i = self._top_level(x)
        prem, concl = RULE_SHAPES[name]
        b = match_schema(prem, x)
        if b is None:
            raise NotDerived(f"{name} does not apply to {x}")
        c = instantiate(concl, b)
        self._emit(c, Justification.rule(name, i))
        return c

    def subst(self, x, mapping) -> Formula:
        from ..formula import substitute
        x = _f(x)
        i = self._top_level(x)
        m = {k: _f(v) for k, v in mapping.items()}
        c = substitute(x, m)
        self._emit(c, Justification.subst(i, m))
        return c

    @contextmanager
    def assume(self, h):
        h = _f(h)
        self.ctx.append(h)
        try:
            yield h
        finally:
            self.ctx.pop()

    def hyp(self, h) -> Formula:
        """Use hypothesis ``h`` from the current stack."""
        h = _f(h)
        d = len(self.ctx)
        i = max(k for k, x in enumerate(self.ctx) if x == h)
        self.refl_at(i, h)
        self._raise(h, i + 1, d)
        return h

    # -- intuitionistic toolkit -------------------------------------------

    def refl_at(self, d: int, x: Formula) -> Formula:
        xx = Imp(x, x)
        if not self._known(0, xx):
            # A1, A2, MP, A1, MP
            a = Imp(x, Imp(xx, x))
            self._emit(a, Justification.axiom("A1"))
            a2 = Imp(a, Imp(Imp(x, xx), xx))
            self._emit(a2, Justification.axiom("A2"))
            self._mp_at(0, a, Imp(Imp(x, xx), xx))
            self._emit(Imp(x, xx), Justification.axiom("A1"))
            self._mp_at(0, Imp(x, xx), xx)
        self._raise(xx, 0, d)
        return xx

    def refl(self, x) -> Formula:
        return self.refl_at(len(self.ctx), _f(x))

    def syll(self, ab, bc) -> Formula:
        """From ``a -> b`` and ``b -> c`` conclude ``a -> c``."""
        ab, bc = _f(ab), _f(bc)
        assert ab.r == bc.l, (ab, bc)
        self._need(ab)
        self._need(bc)
        with self.assume(ab.l) as a:
            self.hyp(a)
            self.mp(a, ab.r)
            self.mp(bc.l, bc.r)
        return Imp(ab.l, bc.r)

    def chain(self, *imps) -> Formula:
        out = _f(imps[0])
        for nxt in imps[1:]:
            out = self.syll(out, nxt)
        return out

    def conj(self, a, b) -> Formula:
        a, b = _f(a), _f(b)
        self.ax("A5", A=a, B=b)
        self.mp(a, Imp(b, And(a, b)))
        return self.mp(b, And(a, b))

    def left(self, ab) -> Formula:
        ab = _f(ab)
        self.ax("A3", A=ab.l, B=ab.r)
        return self.mp(ab, ab.l)

    def right(self, ab) -> Formula:
        ab = _f(ab)
        self.ax("A4", A=ab.l, B=ab.r)
        return self.mp(ab, ab.r)

    def cases(self, aorb, ac, bc) -> Formula:
        """From ``a | b``, ``a -> c`` and ``b -> c`` conclude ``c``."""
        aorb, ac, bc = _f(aorb), _f(ac), _f(bc)
        c = ac.r
        self.ax("A8", A=aorb.l, B=aorb.r, C=c)
        self.mp(ac, Imp(bc, Imp(aorb, c)))
        self.mp(bc, Imp(aorb, c))
        return self.mp(aorb, c)

    def iff(self, ab, ba) -> Formula:
        return self.conj(ab, ba)

    def top(self) -> Formula:
        """Derive ``top``."""
        pp = self.refl(TOP)
        self.ax("A12", A=Imp(TOP, TOP))
        return self.mp(pp, TOP)

    def not_bot(self) -> Formula:
        """Derive ``~bot``."""
        nb = Not(BOT)
        self.refl(BOT)
        self.ax("A9", A=BOT, B=BOT)
        self.mp(Imp(BOT, BOT), Imp(Imp(BOT, nb), nb))
        self.ax("A11", A=nb)
        return self.mp(Imp(BOT, nb), nb)

    def neg_intro(self, xbot) -> Formula:
        """From ``x -> bot`` conclude ``~x``."""
        xbot = _f(xbot)
        x = xbot.l
        self._need(xbot)
        nb = self.not_bot()
        self.ax("A1", A=nb, B=x)
        self.mp(nb, Imp(x, nb))
        self.ax("A9", A=x, B=BOT)
        self.mp(xbot, Imp(Imp(x, nb), Not(x)))
        return self.mp(Imp(x, nb), Not(x))

    # -- modal macros (arguments must be derived without hypotheses) -----

    def _has(self, rule):
        return self.system.has_rule(rule)

    def unit(self, a) -> Formula:
        """``a -> H F a``."""
        a = _f(a)
        if self._has("GC_FH_intro"):
            self.refl(DiaF(a))
            return self.rule("GC_FH_intro", Imp(DiaF(a), DiaF(a)))
        return self.ax("IK9", A=a)

    def counit(self, a) -> Formula:
        """``F H a -> a``."""
        a = _f(a)
        if self._has("GC_FH_elim"):
            self.refl(BoxH(a))
            return self.rule("GC_FH_elim", Imp(BoxH(a), BoxH(a)))
        return self.ax("IK8", A=a)

    def unit_pg(self, a) -> Formula:
        """``a -> G P a``."""
        a = _f(a)
        if self._has("GC_PG_intro"):
            self.refl(DiaP(a))
            return self.rule("GC_PG_intro", Imp(DiaP(a), DiaP(a)))
        return self.ax("IK9'", A=a)

    def counit_pg(self, a) -> Formula:
        """``P G a -> a``."""
        a = _f(a)
        if self._has("GC_PG_elim"):
            self.refl(BoxG(a))
            return self.rule("GC_PG_elim", Imp(BoxG(a), BoxG(a)))
        return self.ax("IK8'", A=a)

    def mono(self, op: str, ab) -> Formula:
        """From ``a -> b`` conclude ``op a -> op b`` for ``op`` in F, G, P, H."""
        ab = _f(ab)
        a, b = ab.l, ab.r
        c = _MODAL[op]
        target = Imp(c(a), c(b))
        if self.has(target):
            return self._need(target)
        if op == "F" and self._has("RMF"):
            return self.rule("RMF", ab)
        if op == "P" and self._has("RMP"):
            return self.rule("RMP", ab)
        if self._has("GC_FH_intro"):
            if op == "F":
                self.gc("FH_elim", self.syll(ab, self.unit(b)))
            elif op == "H":
                self.gc("FH_intro", self.syll(self.counit(a), ab))
            elif op == "P":
                self.gc("PG_elim", self.syll(ab, self.unit_pg(b)))
            else:
                self.gc("PG_intro", self.syll(self.counit_pg(a), ab))
            return self._need(target)
        # tense systems: necessitation plus axioms 2 and 5
        if op in ("G", "F"):
            nec = self.rule("RG", ab)
            ax = "IK2" if op == "G" else "IK5"
        else:
            nec = self.rule("RH", ab)
            ax = "IK2'" if op == "H" else "IK5'"
        self.ax(ax, A=a, B=b)
        return self.mp(nec, target)

    def gc(self, which: str, x) -> Formula:
        """Galois rule ``which`` in FH_intro, FH_elim, PG_intro, PG_elim,
        used directly or emulated."""
        x = _f(x)
        name = "GC_" + which
        if self._has(name):
            return self.rule(name, x)
        if which == "FH_elim":            # a -> H b  gives  F a -> b
            a, b = x.l, x.r.f
            return self.syll(self.mono("F", x), self.counit(b))
        if which == "FH_intro":           # F a -> b  gives  a -> H b
            a = x.l.f
            return self.syll(self.unit(a), self.mono("H", x))
        if which == "PG_elim":            # a -> G b  gives  P a -> b
            a, b = x.l, x.r.f
            return self.syll(self.mono("P", x), self.counit_pg(b))
        if which == "PG_intro":           # P a -> b  gives  a -> G b
            a = x.l.f
            return self.syll(self.unit_pg(a), self.mono("G", x))
        raise ValueError(which)

    # -- output ------------------------------------------------------------

    def script(self, name: str, target, description: str = "") -> ProofScript:
        """Script whose last line is ``target`` (copied to the end if it was
        derived earlier)."""
        target = _f(target)
        if self.ctx:
            raise NotDerived("open hypotheses remain")
        k = self._top_level(target)
        lines = list(self.lines)
        if k != len(lines):
            lines.append(lines[k - 1])
        return ProofScript(self.system.name, lines, name,
                           [p for p in self.premises], description)
