"""The shipped proof corpus.

Each entry names a system, optional premises and a function that drives a
:class:`~int2gc.proof.builder.Builder` and returns the target formula.
Schematic statements are proved at variable level with ``p``, ``q``;
substitution closure makes this as good as the schema.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..formula import (And, BoxG, BoxH, DiaF, DiaP, Formula, Imp, Not, Or, Var,
                       BOT, TOP, instantiate, parse)
from .builder import Builder
from .checker import ProofScript
from .systems import IK_AXIOMS

__all__ = ["CorpusEntry", "CORPUS", "build_script", "script_corpus",
           "NON_THEOREMS"]

p, q = Var("p"), Var("q")

# formulas with a countermodel among small H2GC algebras, used as mutation probes
NON_THEOREMS = [
    "G(p->q) -> (F p -> F q)",
    "G(p|q) -> G p | F q",
    "p | ~p",
    "G p -> p",
    "p -> F p",
]


class _Pair:
    """One Galois pair, seen through the builder's macros."""

    def __init__(self, dia, box, tag):
        self.dia, self.box, self.tag = dia, box, tag   # tag "FH" or "PG"

    def unit(self, b, a):
        return b.unit(a) if self.tag == "FH" else b.unit_pg(a)

    def counit(self, b, a):
        return b.counit(a) if self.tag == "FH" else b.counit_pg(a)

    def intro(self, b, x):
        return b.gc(self.tag + "_intro", x)

    def elim(self, b, x):
        return b.gc(self.tag + "_elim", x)

    @property
    def d(self):
        return "F" if self.tag == "FH" else "P"

    @property
    def b(self):
        return "H" if self.tag == "FH" else "G"


FH = _Pair(DiaF, BoxH, "FH")
PG = _Pair(DiaP, BoxG, "PG")


# -- Galois connection consequences ----------------------------------------

def unit_(pr):
    return lambda b: pr.unit(b, p)


def counit_(pr):
    return lambda b: pr.counit(b, p)


def dia_idem(b, pr, a=p):
    """``D a <-> D B D a``."""
    D = pr.dia
    fwd = b.mono(pr.d, pr.unit(b, a))
    back = pr.counit(b, D(a))
    return b.iff(fwd, back)


def box_idem(b, pr, a=p):
    """``B a <-> B D B a``."""
    fwd = pr.unit(b, pr.box(a))
    back = b.mono(pr.b, pr.counit(b, a))
    return b.iff(fwd, back)


def box_top(b, pr):
    x = b.ax("A12", A=pr.dia(TOP))
    pr.intro(b, x)
    b.top()
    return b.mp(TOP, pr.box(TOP))


def dia_bot_imp(b, pr):
    """``D bot -> bot``."""
    return pr.elim(b, b.ax("A11", A=pr.box(BOT)))


def not_dia_bot(b, pr):
    return b.neg_intro(dia_bot_imp(b, pr))


def box_meet(b, pr, a=p, c=q):
    """``B a & B c -> B(a & c)``."""
    B, D = pr.box, pr.dia
    x = And(B(a), B(c))
    # the two projections, found again by mp below
    b.syll(b.mono(pr.d, b.ax("A3", A=B(a), B=B(c))), pr.counit(b, a))
    b.syll(b.mono(pr.d, b.ax("A4", A=B(a), B=B(c))), pr.counit(b, c))
    with b.assume(D(x)) as h:
        b.hyp(h)
        b.conj(b.mp(D(x), a), b.mp(D(x), c))
    return pr.intro(b, Imp(D(x), And(a, c)))


def box_and(b, pr, a=p, c=q):
    """``B(a & c) <-> B a & B c``."""
    B = pr.box
    b.mono(pr.b, b.ax("A3", A=a, B=c))
    b.mono(pr.b, b.ax("A4", A=a, B=c))
    with b.assume(B(And(a, c))) as h:
        b.hyp(h)
        b.conj(b.mp(h, B(a)), b.mp(h, B(c)))
    fwd = Imp(B(And(a, c)), And(B(a), B(c)))
    return b.iff(fwd, box_meet(b, pr, a, c))


def dia_or(b, pr, a=p, c=q):
    """``D(a | c) <-> D a | D c``."""
    D, B = pr.dia, pr.box
    y = Or(D(a), D(c))
    back_l = b.mono(pr.d, b.ax("A6", A=a, B=c))
    back_r = b.mono(pr.d, b.ax("A7", A=a, B=c))
    b.ax("A8", A=D(a), B=D(c), C=D(Or(a, c)))
    b.mp(back_l, Imp(back_r, Imp(y, D(Or(a, c)))))
    back = b.mp(back_r, Imp(y, D(Or(a, c))))
    ua = b.syll(pr.unit(b, a), b.mono(pr.b, b.ax("A6", A=D(a), B=D(c))))
    uc = b.syll(pr.unit(b, c), b.mono(pr.b, b.ax("A7", A=D(a), B=D(c))))
    b.ax("A8", A=a, B=c, C=B(y))
    b.mp(ua, Imp(uc, Imp(Or(a, c), B(y))))
    join = b.mp(uc, Imp(Or(a, c), B(y)))
    fwd = pr.elim(b, join)
    return b.iff(fwd, back)


def modus_ponens_and(b, a, c):
    """``(a -> c) & a -> c``."""
    x = And(Imp(a, c), a)
    with b.assume(x) as h:
        b.hyp(h)
        b.left(x)
        b.right(x)
        b.mp(a, c)
    return Imp(x, c)


def box_k(b, pr, a=p, c=q):
    """``B(a -> c) -> (B a -> B c)``."""
    B = pr.box
    meet = box_meet(b, pr, Imp(a, c), a)
    m = b.mono(pr.b, modus_ponens_and(b, a, c))
    chain = b.syll(meet, m)
    with b.assume(B(Imp(a, c))) as h1:
        with b.assume(B(a)) as h2:
            b.conj(b.hyp(h1), b.hyp(h2))
            b.mp(chain.l, B(c))
    return Imp(B(Imp(a, c)), Imp(B(a), B(c)))


# -- Fischer Servi axioms and their variants -------------------------------

def _axiom_or(b, names, **bind):
    for n in names:
        if n in b.system.axioms:
            return b.ax(n, **bind)
    return None


def fs1(b, a=p, c=q):
    """``F(a -> c) -> (G a -> F c)``."""
    got = _axiom_or(b, ["FS1", "IK11"], A=a, B=c)
    if got is not None:
        return got
    if "D1" in b.system.axioms:
        return fs_from_d(b, FH, BoxG, a, c)
    if "FS4" in b.system.axioms or "IK10'" in b.system.axioms:
        return fs1_from_fs4(b, a, c)
    raise KeyError("no route to FS1")


def fs2(b, a=p, c=q):
    """``P(a -> c) -> (H a -> P c)``."""
    got = _axiom_or(b, ["FS2", "IK11'"], A=a, B=c)
    if got is not None:
        return got
    if "D2" in b.system.axioms:
        return fs_from_d(b, PG, BoxH, a, c)
    if "FS3" in b.system.axioms or "IK10" in b.system.axioms:
        return fs2_from_fs3(b, a, c)
    raise KeyError("no route to FS2")


def fs3(b, a=p, c=q):
    """``(F a -> G c) -> G(a -> c)``."""
    got = _axiom_or(b, ["FS3", "IK10"], A=a, B=c)
    return got if got is not None else fs3_from_fs2(b, a, c)


def fs4(b, a=p, c=q):
    """``(P a -> H c) -> H(a -> c)``."""
    got = _axiom_or(b, ["FS4", "IK10'"], A=a, B=c)
    return got if got is not None else fs4_from_fs1(b, a, c)


def fs4_from_fs1(b, a=p, c=q):
    x = Imp(DiaP(a), BoxH(c))
    ax = fs1(b, DiaP(a), BoxH(c))            # F x -> (G P a -> F H c)
    up = b.unit_pg(a)
    down = b.counit(c)
    with b.assume(DiaF(x)) as h:
        b.hyp(h)
        b.mp(h, ax.r)
        with b.assume(a) as ha:
            b.hyp(ha)
            b.mp(a, up.r)
            b.mp(up.r, down.l)
            b.mp(down.l, c)
    return FH.intro(b, Imp(DiaF(x), Imp(a, c)))


def fs1_from_fs4(b, a=p, c=q):
    y = Imp(DiaP(BoxG(a)), BoxH(DiaF(c)))
    b.counit_pg(a)
    un = b.unit(c)
    with b.assume(Imp(a, c)) as h:
        b.hyp(h)
        with b.assume(DiaP(BoxG(a))) as h2:
            b.hyp(h2)
            b.mp(h2, a)
            b.mp(a, c)
            b.mp(c, un.r)
    mono = b.mono("F", Imp(Imp(a, c), y))
    ax = fs4(b, BoxG(a), DiaF(c))             # y -> H(G a -> F c)
    return b.syll(mono, FH.elim(b, ax))


def fs3_from_fs2(b, a=p, c=q):
    x = Imp(DiaF(a), BoxG(c))
    ax = fs2(b, DiaF(a), BoxG(c))            # P x -> (H F a -> P G c)
    up = b.unit(a)
    down = b.counit_pg(c)
    with b.assume(DiaP(x)) as h:
        b.hyp(h)
        b.mp(h, ax.r)
        with b.assume(a) as ha:
            b.hyp(ha)
            b.mp(a, up.r)
            b.mp(up.r, down.l)
            b.mp(down.l, c)
    return PG.intro(b, Imp(DiaP(x), Imp(a, c)))


def fs2_from_fs3(b, a=p, c=q):
    y = Imp(DiaF(BoxH(a)), BoxG(DiaP(c)))
    b.counit(a)
    un = b.unit_pg(c)
    with b.assume(Imp(a, c)) as h:
        b.hyp(h)
        with b.assume(DiaF(BoxH(a))) as h2:
            b.hyp(h2)
            b.mp(h2, a)
            b.mp(a, c)
            b.mp(c, un.r)
    mono = b.mono("P", Imp(Imp(a, c), y))
    ax = fs3(b, BoxH(a), DiaP(c))             # y -> G(H a -> P c)
    return b.syll(mono, PG.elim(b, ax))


def fs_from_d(b, pr, other_box, a=p, c=q):
    """``D(a -> c) -> (O a -> D c)`` from the Dunn axiom ``D x & O y -> D(x & y)``."""
    D = pr.dia
    name = "D1" if pr.tag == "FH" else "D2"
    d = b.ax(name, A=Imp(a, c), B=a)          # D(a->c) & O a -> D((a->c) & a)
    m = b.mono(pr.d, modus_ponens_and(b, a, c))
    chain = b.syll(d, m)
    with b.assume(D(Imp(a, c))) as h1:
        with b.assume(other_box(a)) as h2:
            b.conj(b.hyp(h1), b.hyp(h2))
            b.mp(chain.l, D(c))
    return Imp(D(Imp(a, c)), Imp(other_box(a), D(c)))


def dunn(b, pr, a=p, c=q):
    """``D a & O c -> D(a & c)`` with ``O`` the box of the other pair."""
    D = pr.dia
    O = BoxG if pr.tag == "FH" else BoxH
    fs = fs1(b, c, And(a, c)) if pr.tag == "FH" else fs2(b, c, And(a, c))
    m = b.mono(pr.d, b.ax("A5", A=a, B=c))    # D a -> D(c -> a & c)
    x = And(D(a), O(c))
    with b.assume(x) as h:
        b.hyp(h)
        b.mp(b.left(x), m.r)
        b.mp(m.r, fs.r)
        b.mp(b.right(x), D(And(a, c)))
    return Imp(x, D(And(a, c)))


# -- Ewald's axioms --------------------------------------------------------

def ik6(b, pr, a=p, c=q):
    """``O a & D c -> D(a & c)``: (6) for F, (6') for P."""
    got = _axiom_or(b, ["IK6" if pr.tag == "FH" else "IK6'"], A=a, B=c)
    if got is not None:
        return got
    D = pr.dia
    O = BoxG if pr.tag == "FH" else BoxH
    fs = fs1(b, a, And(a, c)) if pr.tag == "FH" else fs2(b, a, And(a, c))
    with b.assume(c) as hc:
        with b.assume(a) as ha:
            b.conj(b.hyp(ha), b.hyp(hc))
    m = b.mono(pr.d, Imp(c, Imp(a, And(a, c))))
    x = And(O(a), D(c))
    with b.assume(x) as h:
        b.hyp(h)
        b.mp(b.right(x), m.r)
        b.mp(m.r, fs.r)
        b.mp(b.left(x), D(And(a, c)))
    return Imp(x, D(And(a, c)))


def ik5(b, pr, a=p, c=q):
    """``O(a -> c) -> (D a -> D c)``: (5) for F, (5') for P."""
    got = _axiom_or(b, ["IK5" if pr.tag == "FH" else "IK5'"], A=a, B=c)
    if got is not None:
        return got
    D = pr.dia
    O = BoxG if pr.tag == "FH" else BoxH
    six = ik6(b, pr, Imp(a, c), a)
    m = b.mono(pr.d, modus_ponens_and(b, a, c))
    chain = b.syll(six, m)
    with b.assume(O(Imp(a, c))) as h1:
        with b.assume(D(a)) as h2:
            b.conj(b.hyp(h1), b.hyp(h2))
            b.mp(chain.l, D(c))
    return Imp(O(Imp(a, c)), Imp(D(a), D(c)))


def ik7(b, pr, a=p):
    """``O ~a -> ~D a``: (7) for F, (7') for P."""
    got = _axiom_or(b, ["IK7" if pr.tag == "FH" else "IK7'"], A=a)
    if got is not None:
        return got
    D = pr.dia
    ob = "G" if pr.tag == "FH" else "H"
    O = BoxG if pr.tag == "FH" else BoxH
    bot_ = dia_bot_imp(b, pr)
    m = b.mono(ob, b.ax("A10", A=a, B=BOT))   # O ~a -> O(a -> bot)
    five = ik5(b, pr, a, BOT)
    with b.assume(O(Not(a))) as h:
        b.hyp(h)
        b.mp(h, m.r)
        b.mp(m.r, five.r)
        b.syll(Imp(D(a), D(BOT)), bot_)
        b.neg_intro(Imp(D(a), BOT))
    return Imp(O(Not(a)), Not(D(a)))


def ewald_axiom(b, n: int, prime: bool):
    """Derive (or cite) Ewald's axiom ``n`` (primed when ``prime``) at p, q."""
    name = f"IK{n}" + ("'" if prime else "")
    got = _axiom_or(b, [name], A=p, B=q)
    if got is not None:
        return got
    pr = PG if prime else FH
    boxed = FH if prime else PG        # the pair whose box is H (resp. G)
    if n == 2:
        return box_k(b, boxed)
    if n == 3:
        return box_and(b, boxed)
    if n == 4:
        return dia_or(b, pr)
    if n == 5:
        return ik5(b, pr)
    if n == 6:
        return ik6(b, pr)
    if n == 7:
        return ik7(b, pr)
    if n == 8:
        return pr.counit(b, p)
    if n == 9:
        return pr.unit(b, p)
    if n == 10:
        return fs4(b) if prime else fs3(b)
    if n == 11:
        return fs2(b) if prime else fs1(b)
    raise ValueError(n)


def ewald_target(n: int, prime: bool) -> Formula:
    s = IK_AXIOMS[f"IK{n}" + ("'" if prime else "")]
    return instantiate(s, {"A": p, "B": q})


# -- derived rules (scripts with premises) ---------------------------------

def rule_gc(which):
    def run(b):
        return b.gc(which, b.premise(b.premises[0]))
    return run


def rule_mono(op):
    def run(b):
        return b.mono(op, b.premise(b.premises[0]))
    return run


def rule_nec(op):
    """``a`` gives ``op a`` via the Galois rules."""
    def run(b):
        a = b.premise(b.premises[0])
        pr = PG if op == "G" else FH
        d = pr.dia(TOP)
        b.ax("A1", A=a, B=d)
        x = b.mp(a, Imp(d, a))              # D top -> a
        pr.intro(b, x)                       # top -> O a
        b.top()
        return b.mp(TOP, pr.box(a))
    return run


# -- registry --------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    system: str
    run: Callable
    target: str
    premises: tuple = ()
    description: str = ""


def _e(name, system, run, target, premises=(), description=""):
    return CorpusEntry(name, system, run, target, tuple(premises), description)


def _entries():
    out = []
    for pr, star in ((FH, ""), (PG, "*")):
        d, o = pr.d, pr.b
        out += [
            _e(f"gc1{star}-unit", "Int2GC", unit_(pr), f"p -> {o} {d} p",
               description="unit of the Galois pair"),
            _e(f"gc1{star}-counit", "Int2GC", counit_(pr), f"{d} {o} p -> p",
               description="counit of the Galois pair"),
            _e(f"gc2{star}-dia", "Int2GC", lambda b, pr=pr: dia_idem(b, pr),
               f"{d} p <-> {d} {o} {d} p"),
            _e(f"gc2{star}-box", "Int2GC", lambda b, pr=pr: box_idem(b, pr),
               f"{o} p <-> {o} {d} {o} p"),
            _e(f"gc3{star}-box", "Int2GC", lambda b, pr=pr: box_top(b, pr), f"{o} top"),
            _e(f"gc3{star}-dia", "Int2GC", lambda b, pr=pr: not_dia_bot(b, pr),
               f"~{d} bot"),
            _e(f"gc4{star}-box", "Int2GC", lambda b, pr=pr: box_and(b, pr),
               f"{o}(p & q) <-> {o} p & {o} q"),
            _e(f"gc4{star}-dia", "Int2GC", lambda b, pr=pr: dia_or(b, pr),
               f"{d}(p | q) <-> {d} p | {d} q"),
            _e(f"gc5{star}", "Int2GC", lambda b, pr=pr: box_k(b, pr),
               f"{o}(p -> q) -> ({o} p -> {o} q)"),
        ]
    # the single-pair system proves the unstarred facts as well
    out.append(_e("intgc-gc1-unit", "IntGC", unit_(FH), "p -> H F p"))
    out += [
        _e("fs1-implies-fs4", "Int2GC+{FS1}", fs4,
           "(P p -> H q) -> H(p -> q)"),
        _e("fs4-implies-fs1", "Int2GC+{FS4}", fs1,
           "F(p -> q) -> (G p -> F q)"),
        _e("fs2-implies-fs3", "Int2GC+{FS2}", fs3,
           "(F p -> G q) -> G(p -> q)"),
        _e("fs3-implies-fs2", "Int2GC+{FS3}", fs2,
           "P(p -> q) -> (H p -> P q)"),
        _e("fs-implies-d1", "Int2GC+FS", lambda b: dunn(b, FH), "F p & G q -> F(p & q)"),
        _e("fs-implies-d2", "Int2GC+FS", lambda b: dunn(b, PG), "P p & H q -> P(p & q)"),
        _e("d-implies-fs1", "Int2GC+FS-alt-D", fs1, "F(p -> q) -> (G p -> F q)"),
        _e("d-implies-fs2", "Int2GC+FS-alt-D", fs2, "P(p -> q) -> (H p -> P q)"),
    ]
    for n in range(2, 12):
        for prime in (False, True):
            tag = f"{n}" + ("'" if prime else "")
            out.append(_e(f"ik{tag}-in-fs", "Int2GC+FS",
                          lambda b, n=n, prime=prime: ewald_axiom(b, n, prime),
                          str(ewald_target(n, prime)),
                          description=f"IK_t axiom IK{tag} in Int2GC+FS"))
    for n in (3, 4, 6, 7, 10):
        for prime in (False, True):
            tag = f"{n}" + ("'" if prime else "")
            out.append(_e(f"ik{tag}-in-ikt-reduced", "IKt-reduced",
                          lambda b, n=n, prime=prime: ewald_axiom(b, n, prime),
                          str(ewald_target(n, prime)),
                          description=f"IK_t axiom IK{tag} from the reduced list"))
    gc_rules = [("FH", "FH_elim", "p -> H q", "F p -> q"),
                ("FH-intro", "FH_intro", "F p -> q", "p -> H q"),
                ("PG", "PG_elim", "p -> G q", "P p -> q"),
                ("PG-intro", "PG_intro", "P p -> q", "p -> G q")]
    for tag, which, prem, concl in gc_rules:
        out.append(_e(f"gc-rule-{tag}-in-ikt", "IKt-Ewald", rule_gc(which),
                      concl, [prem], "Galois rule derived in IK_t"))
        out.append(_e(f"gc-rule-{tag}-in-ikt-reduced", "IKt-reduced", rule_gc(which),
                      concl, [prem], "Galois rule derived from the reduced list"))
        out.append(_e(f"gc-rule-{tag}-in-int2gc-tense", "Int2GC-tense", rule_gc(which),
                      concl, [prem], "Galois rule derived in the tense axiomatisation"))
    for op in "FGPH":
        out.append(_e(f"mono-{op}-in-ikt", "IKt-Ewald", rule_mono(op),
                      f"{op} p -> {op} q", ["p -> q"], "monotonicity in IK_t"))
    out += [
        _e("RG-admissible-in-int2gc", "Int2GC", rule_nec("G"), "G p", ["p"]),
        _e("RH-admissible-in-int2gc", "Int2GC", rule_nec("H"), "H p", ["p"]),
        _e("RMF-admissible-in-int2gc", "Int2GC", rule_mono("F"), "F p -> F q", ["p -> q"]),
        _e("RMP-admissible-in-int2gc", "Int2GC", rule_mono("P"), "P p -> P q", ["p -> q"]),
    ]
    for n in (2, 8, 9):
        for prime in (False, True):
            tag = f"{n}" + ("'" if prime else "")
            out.append(_e(f"ik{tag}-in-int2gc", "Int2GC",
                          lambda b, n=n, prime=prime: ewald_axiom(b, n, prime),
                          str(ewald_target(n, prime)),
                          description=f"IK_t axiom IK{tag} in Int2GC"))
    return out


CORPUS = {e.name: e for e in _entries()}


def build_script(name: str) -> ProofScript:
    e = CORPUS[name]
    b = Builder(e.system, e.premises)
    got = e.run(b)
    target = parse(e.target)
    if got != target:
        raise AssertionError(f"{name}: derived {got}, expected {target}")
    return b.script(name, target, e.description)


def script_corpus() -> dict[str, ProofScript]:
    """All corpus scripts, built afresh (the shipped JSON equals these)."""
    return {n: build_script(n) for n in CORPUS}
