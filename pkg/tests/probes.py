"""Mutation probes: try to pass a known non-theorem off as a script's last line.

Only candidates certified as non-derivable in the script's system (by a
small algebra of its class) are tried, since e.g. F-monotonicity is an
axiom of the FS systems.  Derivations without substitution into premise
lines are closed under instances, so refuting an instance suffices.
"""

from functools import lru_cache
from itertools import product

from int2gc.algebra import enumerate_h2gc, fs_flags
from int2gc.formula import (BOT, TOP, Imp, Var, _Binary, _Unary, parse,
                            substitute, variables)
from int2gc.proof import (Justification, ProofError, check_line,
                          depends_on_premise, get_system)
from int2gc.proof.derivations import NON_THEOREMS
from int2gc.proof.systems import RULE_SHAPES
from int2gc.semantics import valid_in_algebra


@lru_cache(maxsize=None)
def _algebras(identities):
    return [a for a in enumerate_h2gc(3) if all(getattr(fs_flags(a), i) for i in identities)]


def certified_non_theorems(system, premises=(), candidates=NON_THEOREMS):
    """The candidates with a semantic certificate of non-derivability: an
    instance (premise variables sent to variables or constants) and an
    algebra of the class where the premises are valid and the candidate is
    not."""
    prem = [parse(p) if isinstance(p, str) else p for p in premises]
    names = sorted({v for p in prem for v in variables(p)})
    images = [Var(v) for v in names] + [TOP, BOT]
    out = []
    for text in candidates:
        t = parse(text)
        for img in product(images, repeat=len(names)):
            sub = dict(zip(names, img))
            ps = [substitute(p, sub) for p in prem]
            ts = substitute(t, sub)
            if any(all(valid_in_algebra(p, a) for p in ps) and not valid_in_algebra(ts, a)
                   for a in _algebras(system.identities)):
                out.append(text)
                break
    return out


def var_match(g, f, b=None):
    """Substitution turning ``g`` into ``f`` (variables as placeholders)."""
    b = {} if b is None else b
    if isinstance(g, Var):
        if g.name in b and b[g.name] != f:
            return None
        b[g.name] = f
        return b
    if type(g) is not type(f):
        return None
    if isinstance(g, _Unary):
        return var_match(g.f, f.f, b)
    if isinstance(g, _Binary):
        return var_match(g.l, f.l, b) and var_match(g.r, f.r, b)
    return b if g == f else None


def justifications(system, formulas, f, original):
    """Every justification that could conceivably certify ``f`` after
    ``formulas``: the original one, each axiom, each rule on each earlier
    line, every MP pair whose major premise ends in ``f`` plus the
    neighbouring pairs, and the matching substitution from each line."""
    k = len(formulas) + 1
    yield original
    for name in system.axioms:
        yield Justification.axiom(name)
    for i in range(1, k):
        for name in RULE_SHAPES:
            yield Justification.rule(name, i)
        b = var_match(formulas[i - 1], f)
        yield Justification.subst(i, b if b else {})
    for j in range(1, k):
        g = formulas[j - 1]
        if isinstance(g, Imp) and g.r == f:
            for i in range(1, k):
                yield Justification.mp(i, j)
        yield Justification.mp(max(1, j - 1), j)


def probe(script, non_theorems=None):
    """Number of accepted mutations (should be 0) and attempts made."""
    system = get_system(script.system)
    premises = list(script.premises)
    if non_theorems is None:
        non_theorems = certified_non_theorems(system, tuple(premises))
    accepted = attempts = 0
    body = [ln.f for ln in script.lines[:-1]]
    whole = [ln.f for ln in script.lines]
    hyp = set()
    for k, ln in enumerate(script.lines, start=1):
        if depends_on_premise(ln.just, hyp):
            hyp.add(k)
    for text in non_theorems:
        f = parse(text)
        # swap the final line, and append after the full script
        for formulas, original in ((body, script.lines[-1].just),
                                   (whole, script.lines[-1].just)):
            for just in justifications(system, formulas, f, original):
                attempts += 1
                try:
                    check_line(system, formulas, len(formulas) + 1, f, just, premises, hyp)
                except ProofError:
                    continue
                accepted += 1
    return accepted, attempts
