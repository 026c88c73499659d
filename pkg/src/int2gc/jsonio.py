"""JSON encodings of algebras, frames, models, rough contexts and proofs.

``dumps`` produces the canonical text (two-space indent, keys in a fixed
order, trailing newline); loading and saving a canonical file reproduces it
byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

import numpy as np

from .algebra import (H2GCAlgebra, HeytingAlgebra, build_lattice,
                      heyting_from_lattice)
from .formula import as_formula, to_str
from .kripke import KripkeModel, make_frame
from .proof.checker import Justification, ProofLine, ProofScript
from .rough import RoughContext

__all__ = [
    "dumps", "read_json", "InputError",
    "algebra_to_json", "algebra_from_json", "heyting_to_json",
    "frame_to_json", "frame_from_json", "model_to_json", "model_from_json",
    "rough_to_json", "rough_from_json", "proof_to_json", "proof_from_json",
    "load_algebra", "load_frame", "load_model", "load_rough", "load_proof",
]

OPS = ("fdia", "gbox", "pdia", "hbox")


class InputError(ValueError):
    """Malformed JSON input; the message names the file when known."""


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def read_json(path) -> dict:
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: {exc.msg}") from None


# -- algebras --------------------------------------------------------------

def heyting_to_json(h: HeytingAlgebra) -> dict:
    nm = h.names
    return {"elements": list(nm),
            "order": [[nm[a], nm[b]] for a, b in h.lattice.covers()]}


def algebra_to_json(alg: H2GCAlgebra | HeytingAlgebra) -> dict:
    """Unary tables are omitted when all four are the identity."""
    if isinstance(alg, HeytingAlgebra):
        return heyting_to_json(alg)
    d = heyting_to_json(alg.heyting)
    ident = np.arange(alg.n)
    if any(not np.array_equal(alg.op(o), ident) for o in OPS):
        nm = alg.names
        for o in OPS:
            d[o] = {nm[a]: nm[int(b)] for a, b in enumerate(alg.op(o))}
    return d


def algebra_from_json(d: Mapping, label: str = "") -> H2GCAlgebra:
    try:
        h = heyting_from_lattice(build_lattice(d["elements"], d.get("order", [])))
    except KeyError as exc:
        raise InputError(f"algebra JSON lacks {exc}") from None
    tables = {o: d.get(o) for o in OPS}
    return H2GCAlgebra.make(h, label=label, **tables)


# -- frames and models -----------------------------------------------------

def _pairs(worlds, m, skip_diag=False):
    return [[worlds[i], worlds[j]] for i, j in zip(*np.nonzero(m))
            if not (skip_diag and i == j)]


def frame_to_json(frame) -> dict:
    w = list(frame.worlds)
    d = {"kind": frame.kind, "worlds": w, "leq": _pairs(w, frame.leq, True)}
    if frame.kind == "int2gc":
        d["r1"] = _pairs(w, frame.r1)
        d["r2"] = _pairs(w, frame.r2)
    else:
        d["r"] = _pairs(w, frame.r)
    return d


def frame_from_json(d: Mapping):
    kind = d.get("kind")
    if kind not in ("intgc", "int2gc", "fs"):
        raise InputError(f"unknown frame kind {kind!r}")
    names = ("r1", "r2") if kind == "int2gc" else ("r",)
    worlds = [str(w) for w in d["worlds"]]
    known = set(worlds)
    for key in ("leq",) + names:
        for pair in d.get(key, []):
            if len(pair) != 2 or not set(pair) <= known:
                raise InputError(f"{key} pair {pair} mentions unknown worlds")
    return make_frame(kind, worlds, d.get("leq", []),
                      **{k: d.get(k, []) for k in names})


def model_to_json(m: KripkeModel) -> dict:
    d = frame_to_json(m.frame)
    d["valuation"] = {k: m.worlds_of(k) for k in sorted(m.valuation)}
    return d


def model_from_json(d: Mapping) -> KripkeModel:
    return KripkeModel.make(frame_from_json(d), d.get("valuation", {}))


# -- rough contexts --------------------------------------------------------

def rough_to_json(ctx: RoughContext) -> dict:
    h, u = ctx.algebra, ctx.universe
    return {
        "algebra": heyting_to_json(h),
        "universe": list(u),
        "relation": {x: {y: h.names[ctx.relation[i, j]] for j, y in enumerate(u)}
                     for i, x in enumerate(u)},
        "sets": {k: ctx.named(s) for k, s in ctx.sets.items()},
    }


def rough_from_json(d: Mapping) -> RoughContext:
    h = algebra_from_json(d["algebra"]).heyting
    return RoughContext.make(h, d["universe"], d.get("relation", {}), d.get("sets", {}))


# -- proofs ----------------------------------------------------------------

def proof_to_json(s: ProofScript) -> dict:
    d = {"system": s.system}
    if s.name:
        d["name"] = s.name
    if s.description:
        d["description"] = s.description
    if s.premises:
        d["premises"] = [to_str(as_formula(p)) for p in s.premises]
    d["lines"] = [{"f": to_str(ln.f), "just": ln.just.to_json()} for ln in s.lines]
    return d


def proof_from_json(d: Mapping) -> ProofScript:
    lines = []
    for k, ln in enumerate(d.get("lines", []), start=1):
        try:
            lines.append(ProofLine(as_formula(ln["f"]), Justification.from_json(ln["just"])))
        except (KeyError, TypeError) as exc:
            raise InputError(f"line {k}: malformed entry ({exc})") from None
    return ProofScript(d["system"], lines, d.get("name", ""),
                       [as_formula(p) for p in d.get("premises", [])],
                       d.get("description", ""))


# -- files -----------------------------------------------------------------

def _loader(conv):
    def load(path):
        return conv(read_json(path))
    load.__doc__ = f"Read a file and decode it with :func:`{conv.__name__}`."
    return load


load_algebra = _loader(algebra_from_json)
load_frame = _loader(frame_from_json)
load_model = _loader(model_from_json)
load_rough = _loader(rough_from_json)
load_proof = _loader(proof_from_json)
