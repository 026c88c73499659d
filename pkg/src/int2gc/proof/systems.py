"""Hilbert systems: axiom schemas and rule sets.

Schemas are formulas over metavariables ``A``, ``B``, ``C``.  Every system
contains the intuitionistic base ``A1``..``A12`` and the substitution rule.
Tense axiom names follow Ewald's numbering: ``IK2`` .. ``IK11`` and the
mirror images ``IK2'`` .. ``IK11'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..formula import Formula, Meta, parse_schema, _Binary, _Unary

__all__ = [
    "ProofSystem", "BASE", "FS_AXIOMS", "IK_AXIOMS", "RULES", "RULE_SHAPES",
    "builtin_systems", "get_system", "UnknownSystem", "match_schema",
]


class UnknownSystem(KeyError):
    def __str__(self):
        return f"unknown proof system {self.args[0]!r}"


def _schemas(d: dict) -> dict:
    return {k: parse_schema(v) for k, v in d.items()}


BASE = _schemas({
    "A1": "A -> (B -> A)",
    "A2": "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    "A3": "A & B -> A",
    "A4": "A & B -> B",
    "A5": "A -> (B -> A & B)",
    "A6": "A -> A | B",
    "A7": "B -> A | B",
    "A8": "(A -> C) -> ((B -> C) -> (A | B -> C))",
    "A9": "(A -> B) -> ((A -> ~B) -> ~A)",
    "A10": "~A -> (A -> B)",
    "A11": "bot -> A",
    "A12": "A -> top",
})

FS_AXIOMS = _schemas({
    "FS1": "F(A -> B) -> (G A -> F B)",
    "FS2": "P(A -> B) -> (H A -> P B)",
    "FS3": "(F A -> G B) -> G(A -> B)",
    "FS4": "(P A -> H B) -> H(A -> B)",
    "D1": "F A & G B -> F(A & B)",
    "D2": "P A & H B -> P(A & B)",
})

IK_AXIOMS = _schemas({
    "IK2": "G(A -> B) -> (G A -> G B)",
    "IK3": "G(A & B) <-> G A & G B",
    "IK4": "F(A | B) <-> F A | F B",
    "IK5": "G(A -> B) -> (F A -> F B)",
    "IK6": "G A & F B -> F(A & B)",
    "IK7": "G ~A -> ~F A",
    "IK8": "F H A -> A",
    "IK9": "A -> H F A",
    "IK10": "(F A -> G B) -> G(A -> B)",
    "IK11": "F(A -> B) -> (G A -> F B)",
    "IK2'": "H(A -> B) -> (H A -> H B)",
    "IK3'": "H(A & B) <-> H A & H B",
    "IK4'": "P(A | B) <-> P A | P B",
    "IK5'": "H(A -> B) -> (P A -> P B)",
    "IK6'": "H A & P B -> P(A & B)",
    "IK7'": "H ~A -> ~P A",
    "IK8'": "P G A -> A",
    "IK9'": "A -> G P A",
    "IK10'": "(P A -> H B) -> H(A -> B)",
    "IK11'": "P(A -> B) -> (H A -> P B)",
})

# premise schema, conclusion schema
RULE_SHAPES = {
    "GC_FH_intro": ("F A -> B", "A -> H B"),
    "GC_FH_elim": ("A -> H B", "F A -> B"),
    "GC_PG_intro": ("P A -> B", "A -> G B"),
    "GC_PG_elim": ("A -> G B", "P A -> B"),
    "RG": ("A", "G A"),
    "RH": ("A", "H A"),
    "RMF": ("A -> B", "F A -> F B"),
    "RMP": ("A -> B", "P A -> P B"),
}
RULE_SHAPES = {k: (parse_schema(a), parse_schema(b)) for k, (a, b) in RULE_SHAPES.items()}
RULES = frozenset(RULE_SHAPES) | {"MP", "SUBST"}


def match_schema(s: Formula, f: Formula, binding: dict | None = None) -> dict | None:
    """The binding ``b`` with ``instantiate(s, b) == f``, or ``None``."""
    b = {} if binding is None else dict(binding)
    stack = [(s, f)]
    while stack:
        x, y = stack.pop()
        if isinstance(x, Meta):
            if x.name in b:
                if b[x.name] != y:
                    return None
            else:
                b[x.name] = y
        elif type(x) is not type(y):
            return None
        elif isinstance(x, _Unary):
            stack.append((x.f, y.f))
        elif isinstance(x, _Binary):
            stack.append((x.r, y.r))
            stack.append((x.l, y.l))
        elif x != y:
            return None
    return b


@dataclass(frozen=True)
class ProofSystem:
    """A named Hilbert system.

    ``identities`` lists the algebraic identities (from fs1..fs4, d1, d2) an
    H2GC algebra must satisfy to model the system; ``frame_kind`` names the
    Kripke frames used for desk-scale soundness checks.
    """

    name: str
    axioms: dict
    rules: frozenset
    identities: tuple = ()
    frame_kind: str = "int2gc"
    description: str = field(default="", compare=False)

    @property
    def requires_fs(self) -> bool:
        return {"fs1", "fs2"} <= set(self.identities)

    def has_rule(self, name: str) -> bool:
        return name in self.rules


def _pick(src: dict, names) -> dict:
    return {n: src[n] for n in names}


def _ik(nums):
    out = []
    for k in nums:
        out += [f"IK{k}", f"IK{k}'"]
    return out


_GC = frozenset({"GC_FH_intro", "GC_FH_elim", "GC_PG_intro", "GC_PG_elim"})
_TENSE = frozenset({"MP", "SUBST", "RG", "RH"})
_FS = ("fs1", "fs2")


def builtin_systems() -> list[ProofSystem]:
    base = dict(BASE)
    gc2 = _GC | {"MP", "SUBST"}
    systems = [
        ProofSystem("IntGC", base, frozenset({"MP", "SUBST", "GC_FH_intro", "GC_FH_elim"}),
                    (), "intgc", "intuitionistic logic with one Galois connection"),
        ProofSystem("Int2GC", base, gc2, (), "int2gc",
                    "intuitionistic logic with two Galois connections"),
        ProofSystem("Int2GC+FS", {**base, **_pick(FS_AXIOMS, ["FS1", "FS2"])}, gc2,
                    _FS, "fs", "Int2GC with Fischer Servi axioms FS1 and FS2"),
        ProofSystem("Int2GC+FS-alt-D", {**base, **_pick(FS_AXIOMS, ["D1", "D2"])}, gc2,
                    _FS, "fs", "Int2GC with the Dunn axioms D1 and D2"),
        ProofSystem("IKt-Ewald", {**base, **_pick(IK_AXIOMS, _ik(range(2, 12)))},
                    _TENSE, _FS, "fs", "Ewald's intuitionistic tense logic"),
        ProofSystem("IKt-reduced", {**base, **_pick(IK_AXIOMS, _ik([2, 5, 8, 9, 11]))},
                    _TENSE, _FS, "fs", "IK_t with half of Ewald's axioms"),
        ProofSystem("Int2GC-tense", {**base, **_pick(IK_AXIOMS, _ik([2, 8, 9]))},
                    _TENSE | {"RMF", "RMP"}, (), "int2gc",
                    "Int2GC axiomatised with tense axioms and monotonicity rules"),
    ]
    for ax, ident in (("FS1", "fs1"), ("FS4", "fs4"), ("FS2", "fs2"), ("FS3", "fs3")):
        systems.append(ProofSystem(
            f"Int2GC+{{{ax}}}", {**base, ax: FS_AXIOMS[ax]}, gc2, (ident,), "fs",
            f"Int2GC with the single axiom {ax}"))
    return systems


_BY_NAME = {s.name: s for s in builtin_systems()}


def get_system(name: str) -> ProofSystem:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownSystem(name) from None
