"""Formulas of the bimodal intuitionistic language.

The four modal operators are written with the tense letters ``F``, ``G``,
``P`` and ``H``.  ``F``/``H`` form one Galois pair, ``P``/``G`` the other.

Concrete syntax (ASCII)::

    formula := imp ( "<->" imp )*
    imp     := or ( "->" imp )?
    or      := and ( "|" and )*
    and     := unary ( "&" unary )*
    unary   := ( "~" | "F" | "G" | "P" | "H" ) unary | atom
    atom    := "top" | "bot" | VAR | "(" formula ")"

``A <-> B`` is not a constructor; it parses to ``(A -> B) & (B -> A)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Formula", "Var", "Meta", "Top", "Bot", "Not", "And", "Or", "Imp",
    "DiaF", "BoxG", "DiaP", "BoxH", "TOP", "BOT",
    "iff", "parse", "parse_schema", "to_str", "substitute", "compose",
    "variables", "metavariables", "depth", "size", "subformulas",
    "enumerate_formulas", "count_formulas", "FormulaSyntaxError", "as_formula",
    "instantiate",
]


class Formula:
    """Base class of formula nodes.  Nodes are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_str(self)


@dataclass(frozen=True, repr=False)
class Var(Formula):
    name: str

    def __repr__(self):
        return f"Var({self.name!r})"


@dataclass(frozen=True, repr=False)
class Meta(Formula):
    """Schema metavariable (``A``, ``B``, ...); never appears in object formulas."""

    name: str

    def __repr__(self):
        return f"Meta({self.name!r})"


@dataclass(frozen=True, repr=False)
class _Const(Formula):
    name: str

    def __repr__(self):
        return self.name.capitalize()


TOP = _Const("top")
BOT = _Const("bot")
Top = TOP
Bot = BOT


@dataclass(frozen=True)
class _Unary(Formula):
    f: Formula

    def __hash__(self):
        h = self.__dict__.get("_h")
        if h is None:
            h = hash((type(self).__name__, self.f))
            object.__setattr__(self, "_h", h)
        return h


@dataclass(frozen=True)
class _Binary(Formula):
    l: Formula
    r: Formula

    def __hash__(self):
        h = self.__dict__.get("_h")
        if h is None:
            h = hash((type(self).__name__, self.l, self.r))
            object.__setattr__(self, "_h", h)
        return h


class Not(_Unary):
    pass


class DiaF(_Unary):
    pass


class BoxG(_Unary):
    pass


class DiaP(_Unary):
    pass


class BoxH(_Unary):
    pass


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Imp(_Binary):
    pass


UNARY = (Not, DiaF, BoxG, DiaP, BoxH)
BINARY = (And, Or, Imp)
MODAL = {"F": DiaF, "G": BoxG, "P": DiaP, "H": BoxH}
_PREFIX = {Not: "~", DiaF: "F", BoxG: "G", DiaP: "P", BoxH: "H"}
_INFIX = {And: "&", Or: "|", Imp: "->"}


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


# -- parsing ---------------------------------------------------------------

class FormulaSyntaxError(ValueError):
    """Raised by :func:`parse`; carries the byte offset and expected tokens."""

    def __init__(self, text: str, offset: int, expected: Iterable[str]):
        self.text = text
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        found = text[offset:offset + 8] or "end of input"
        super().__init__(
            f"syntax error at offset {offset} (near {found!r}); "
            f"expected one of: {', '.join(self.expected)}")


_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|[~&|()])|(?P<var>[a-z][a-zA-Z0-9_]*)"
    r"|(?P<modal>[FGPH])|(?P<meta>[A-Z][0-9]*))")


def _tokenize(text: str, allow_meta: bool):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or (m.lastgroup == "meta" and not allow_meta):
            raise FormulaSyntaxError(
                text, pos, ["VAR", "top", "bot", "(", "~", "F", "G", "P", "H"])
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "op":
            kind = value
        out.append((kind, value, start))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, allow_meta: bool):
        self.text = text
        self.toks = _tokenize(text, allow_meta)
        self.i = 0
        self.allow_meta = allow_meta

    def peek(self):
        return self.toks[self.i]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            raise FormulaSyntaxError(self.text, tok[2], [kind])
        self.i += 1
        return tok

    def formula(self):
        f = self.imp()
        while self.peek()[0] == "<->":
            self.i += 1
            f = iff(f, self.imp())
        return f

    def imp(self):
        f = self.disj()
        if self.peek()[0] == "->":
            self.i += 1
            return Imp(f, self.imp())
        return f

    def disj(self):
        f = self.conj()
        while self.peek()[0] == "|":
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek()[0] == "&":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self):
        kind, value, _ = self.peek()
        if kind == "~":
            self.i += 1
            return Not(self.unary())
        if kind == "modal":
            self.i += 1
            return MODAL[value](self.unary())
        return self.atom()

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "var":
            self.i += 1
            if value == "top":
                return TOP
            if value == "bot":
                return BOT
            return Var(value)
        if kind == "meta":
            self.i += 1
            return Meta(value)
        if kind == "(":
            self.i += 1
            f = self.formula()
            self.take(")")
            return f
        expected = ["VAR", "top", "bot", "(", "~", "F", "G", "P", "H"]
        if self.allow_meta:
            expected.append("METAVAR")
        raise FormulaSyntaxError(self.text, pos, expected)

    def parse(self):
        f = self.formula()
        kind, _, pos = self.peek()
        if kind != "eof":
            raise FormulaSyntaxError(
                self.text, pos, ["<->", "->", "|", "&", "end of input"])
        return f


def parse(text: str) -> Formula:
    """Parse an object-language formula.

    >>> to_str(parse("p -> q -> r"))
    'p -> q -> r'
    """
    return _Parser(text, allow_meta=False).parse()


def parse_schema(text: str) -> Formula:
    """Parse a schema: like :func:`parse` but uppercase letters other than
    ``F``, ``G``, ``P``, ``H`` (optionally followed by digits) are metavariables."""
    return _Parser(text, allow_meta=True).parse()


def as_formula(f: Union[Formula, str]) -> Formula:
    return parse(f) if isinstance(f, str) else f


# -- printing --------------------------------------------------------------

def _prec(f: Formula) -> int:
    if isinstance(f, Imp):
        return 1
    if isinstance(f, Or):
        return 2
    if isinstance(f, And):
        return 3
    if isinstance(f, _Unary):
        return 4
    return 5


def to_str(f: Formula) -> str:
    """Render with the minimum number of parentheses."""

    def wrap(g, min_prec):
        s = to_str(g)
        return f"({s})" if _prec(g) < min_prec else s

    if isinstance(f, (Var, Meta)):
        return f.name
    if isinstance(f, _Const):
        return f.name
    if isinstance(f, Not):
        return "~" + wrap(f.f, 4)
    if isinstance(f, _Unary):
        return _PREFIX[type(f)] + " " + wrap(f.f, 4)
    if isinstance(f, Imp):
        return f"{wrap(f.l, 2)} -> {wrap(f.r, 1)}"
    if isinstance(f, _Binary):
        p = _prec(f)
        return f"{wrap(f.l, p)} {_INFIX[type(f)]} {wrap(f.r, p + 1)}"
    raise TypeError(f"not a formula: {f!r}")


# -- structural operations -------------------------------------------------

def _map(f: Formula, leaf) -> Formula:
    if isinstance(f, (Var, Meta)):
        return leaf(f)
    if isinstance(f, _Unary):
        g = _map(f.f, leaf)
        return f if g is f.f else type(f)(g)
    if isinstance(f, _Binary):
        l, r = _map(f.l, leaf), _map(f.r, leaf)
        return f if (l is f.l and r is f.r) else type(f)(l, r)
    return f


def substitute(f: Formula, s: Mapping[str, Formula]) -> Formula:
    """Simultaneously replace variables named in ``s``; others are unchanged."""
    return _map(f, lambda v: s.get(v.name, v) if isinstance(v, Var) else v)


def instantiate(schema: Formula, binding: Mapping[str, Formula]) -> Formula:
    return _map(schema, lambda v: binding[v.name] if isinstance(v, Meta) else v)


def compose(s1: Mapping[str, Formula], s2: Mapping[str, Formula]) -> dict:
    """Substitution equal to applying ``s1`` then ``s2``."""
    out = {x: substitute(g, s2) for x, g in s1.items()}
    for x, g in s2.items():
        out.setdefault(x, g)
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order traversal (children before parents)."""
    if isinstance(f, _Unary):
        yield from subformulas(f.f)
    elif isinstance(f, _Binary):
        yield from subformulas(f.l)
        yield from subformulas(f.r)
    yield f


def variables(f: Formula) -> list[str]:
    """Object variables of ``f``, sorted."""
    return sorted({g.name for g in subformulas(f) if isinstance(g, Var)})


def metavariables(f: Formula) -> list[str]:
    return sorted({g.name for g in subformulas(f) if isinstance(g, Meta)})


def depth(f: Formula) -> int:
    if isinstance(f, _Unary):
        return 1 + depth(f.f)
    if isinstance(f, _Binary):
        return 1 + max(depth(f.l), depth(f.r))
    return 0


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


# -- generation ------------------------------------------------------------

def count_formulas(n_vars: int, max_depth: int) -> int:
    """Number of formulas of depth <= max_depth over ``n_vars`` variables.

    N(0) = n + 2 and N(d) = n + 2 + 5 N(d-1) + 3 N(d-1)^2.
    """
    total = n_vars + 2
    for _ in range(max_depth):
        total = n_vars + 2 + len(UNARY) * total + len(BINARY) * total * total
    return total


def enumerate_formulas(names: Iterable[str], max_depth: int) -> Iterator[Formula]:
    """Yield every formula over ``names`` of depth at most ``max_depth`` once.

    Formulas come out by increasing depth; within a depth the order is fixed
    by constructor order and the order of earlier layers.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    layers = [[Var(n) for n in names] + [TOP, BOT]]
    yield from layers[0]
    upto = list(layers[0])
    for _ in range(max_depth):
        prev = layers[-1]
        prev_set = set(prev)
        new = [c(g) for c in UNARY for g in prev]
        for c in BINARY:
            for a, b in product(upto, repeat=2):
                if a in prev_set or b in prev_set:
                    new.append(c(a, b))
        yield from new
        layers.append(new)
        upto.extend(new)
