"""Proof scripts and the line-by-line checker.

A script is a list of lines, each a formula with a justification:

* ``axiom`` ``name``: the formula is an instance of the named schema;
* ``mp`` ``i``, ``j``: line ``j`` is ``line_i -> formula`` (1-based);
* ``rule`` ``name``, ``i``: the formula follows from line ``i`` by the rule;
* ``subst`` ``i``, ``map``: the formula is line ``i`` under the substitution;
* ``premise``: the formula is one of the script's declared premises.

A script with premises certifies a derived rule: from the premises the
last line follows using only the system's axioms and rules.  Premise
variables stand for arbitrary fixed formulas, so substitution may not be
applied to a line that depends on a premise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..formula import Formula, Imp, as_formula, substitute, to_str
from .systems import RULE_SHAPES, ProofSystem, get_system, match_schema

__all__ = [
    "Justification", "ProofLine", "ProofScript", "ProofVerdict", "ProofError",
    "BadAxiomInstance", "BadRuleApplication", "ForwardReference", "BadPremise",
    "check_proof", "check_line", "depends_on_premise",
]


class ProofError(Exception):
    pass


class BadAxiomInstance(ProofError):
    pass


class BadRuleApplication(ProofError):
    pass


class ForwardReference(ProofError):
    pass


class BadPremise(ProofError):
    pass


@dataclass(frozen=True)
class Justification:
    kind: str
    name: str | None = None
    i: int | None = None
    j: int | None = None
    map: tuple = ()

    @classmethod
    def axiom(cls, name):
        return cls("axiom", name=name)

    @classmethod
    def mp(cls, i, j):
        return cls("mp", i=i, j=j)

    @classmethod
    def rule(cls, name, i):
        return cls("rule", name=name, i=i)

    @classmethod
    def subst(cls, i, mapping: Mapping):
        items = tuple(sorted((k, as_formula(v)) for k, v in mapping.items()))
        return cls("subst", i=i, map=items)

    @classmethod
    def premise(cls):
        return cls("premise")

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.name is not None:
            d["name"] = self.name
        if self.i is not None:
            d["i"] = self.i
        if self.j is not None:
            d["j"] = self.j
        if self.kind == "subst":
            d["map"] = {k: to_str(v) for k, v in self.map}
        return d

    @classmethod
    def from_json(cls, d: Mapping) -> "Justification":
        kind = d["kind"]
        if kind == "subst":
            return cls.subst(d["i"], d.get("map", {}))
        return cls(kind, name=d.get("name"), i=d.get("i"), j=d.get("j"))


@dataclass(frozen=True)
class ProofLine:
    f: Formula
    just: Justification


@dataclass
class ProofScript:
    system: str
    lines: list
    name: str = ""
    premises: list = field(default_factory=list)
    description: str = ""

    @property
    def conclusion(self) -> Formula | None:
        return self.lines[-1].f if self.lines else None


@dataclass
class ProofVerdict:
    ok: bool
    line: int | None = None
    error: str | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        d = {"ok": self.ok}
        if not self.ok:
            d.update(line=self.line, error=self.error, reason=self.reason)
        return d


def _cited(k: int, idx, what: str) -> int:
    if not isinstance(idx, int) or idx < 1:
        raise BadRuleApplication(f"{what} must be a positive line number")
    if idx >= k:
        raise ForwardReference(f"{what}={idx} does not precede line {k}")
    return idx


def check_line(system: ProofSystem, formulas: list, k: int, f: Formula,
               just: Justification, premises=(), hypothetical=frozenset()) -> None:
    """Check line ``k`` (1-based) against the earlier ``formulas``; raises a
    :class:`ProofError` subclass on failure.

    ``hypothetical`` holds the (1-based) lines that depend on a premise.
    """
    kind = just.kind
    if kind == "axiom":
        schema = system.axioms.get(just.name)
        if schema is None:
            raise BadAxiomInstance(f"{system.name} has no axiom {just.name!r}")
        if match_schema(schema, f) is None:
            raise BadAxiomInstance(f"not an instance of {just.name}")
    elif kind == "mp":
        if "MP" not in system.rules:
            raise BadRuleApplication("system lacks MP")
        i = _cited(k, just.i, "i")
        j = _cited(k, just.j, "j")
        if formulas[j - 1] != Imp(formulas[i - 1], f):
            raise BadRuleApplication(f"line {j} is not line {i} -> this line")
    elif kind == "rule":
        if just.name not in system.rules or just.name not in RULE_SHAPES:
            raise BadRuleApplication(f"{system.name} has no rule {just.name!r}")
        i = _cited(k, just.i, "i")
        prem, concl = RULE_SHAPES[just.name]
        b = match_schema(prem, formulas[i - 1])
        if b is None or match_schema(concl, f, b) is None:
            raise BadRuleApplication(f"{just.name} does not yield this line from line {i}")
    elif kind == "subst":
        if "SUBST" not in system.rules:
            raise BadRuleApplication("system lacks substitution")
        i = _cited(k, just.i, "i")
        if i in hypothetical:
            raise BadRuleApplication(f"line {i} depends on a premise and cannot be substituted")
        if substitute(formulas[i - 1], dict(just.map)) != f:
            raise BadRuleApplication(f"substitution does not turn line {i} into this line")
    elif kind == "premise":
        if f not in premises:
            raise BadPremise("formula is not a declared premise")
    else:
        raise BadRuleApplication(f"unknown justification {kind!r}")


def check_proof(script: ProofScript, system: ProofSystem | None = None) -> ProofVerdict:
    """Accept iff every line is justified; otherwise report the first bad line.

    An empty script is rejected.  Unknown systems raise
    :class:`~int2gc.proof.systems.UnknownSystem`.
    """
    system = system or get_system(script.system)
    if not script.lines:
        return ProofVerdict(False, 0, "EmptyScript", "script has no lines")
    premises = [as_formula(p) for p in script.premises]
    formulas = []
    hyp = set()
    for k, line in enumerate(script.lines, start=1):
        try:
            check_line(system, formulas, k, line.f, line.just, premises, hyp)
        except ProofError as exc:
            return ProofVerdict(False, k, type(exc).__name__, str(exc))
        formulas.append(line.f)
        if depends_on_premise(line.just, hyp):
            hyp.add(k)
    return ProofVerdict(True)


def depends_on_premise(just: Justification, hypothetical) -> bool:
    """Whether a line with this justification depends on a premise, given
    the set of earlier lines that do."""
    if just.kind == "premise":
        return True
    return just.i in hypothetical or just.j in hypothetical
