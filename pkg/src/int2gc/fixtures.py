"""Builders for the shipped fixture files."""

from __future__ import annotations

from pathlib import Path

from .algebra import H2GCAlgebra, build_lattice, chain, heyting_from_lattice
from .jsonio import algebra_to_json, dumps, frame_to_json, model_to_json, rough_to_json
from .kripke import KripkeModel, build_preference_frame, make_frame
from .rough import RoughContext

__all__ = ["example_lattice", "example_context", "three_chain_algebra",
           "two_world_frame", "write_fixtures"]


def example_lattice():
    """``0 < a, b < c < 1`` with ``a``, ``b`` incomparable."""
    return heyting_from_lattice(build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")]))


def example_context() -> RoughContext:
    """Two points, ``R(x,x) = R(y,y) = a``, ``R(x,y) = R(y,x) = b``,
    ``phi`` constantly 0 and ``psi`` constantly 1."""
    return RoughContext.make(
        example_lattice(), ["x", "y"],
        {"x": {"x": "a", "y": "b"}, "y": {"x": "b", "y": "a"}},
        {"phi": {"x": "0", "y": "0"}, "psi": {"x": "1", "y": "1"}})


def three_chain_algebra() -> H2GCAlgebra:
    """Chain ``0 < u < 1``; F and H are the identity, P is constantly 0 and G
    constantly 1.  The pairs are independent, so ``G(p->q) -> (F p -> F q)``
    fails."""
    h = heyting_from_lattice(chain(3))
    return H2GCAlgebra.make(h, fdia=[0, 1, 2], hbox=[0, 1, 2],
                            pdia=[0, 0, 0], gbox=[2, 2, 2], label="three-chain")


def two_world_frame(r=None):
    """``w0 <= w1``; ``R`` defaults to ``<=``."""
    le = [("w0", "w1")]
    return make_frame("fs", ["w0", "w1"], le, r=le + [("w0", "w0"), ("w1", "w1")]
                      if r is None else r)


def write_fixtures(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    docs = {
        "example3_4.json": rough_to_json(example_context()),
        "example3_4_lattice.json": algebra_to_json(example_lattice()),
        "three_chain.json": algebra_to_json(three_chain_algebra()),
        "two_world_fs.json": frame_to_json(two_world_frame()),
        "two_world_r5_violation.json": frame_to_json(two_world_frame([("w0", "w1")])),
        "two_world_model.json": model_to_json(
            KripkeModel.make(two_world_frame(), {"p": ["w1"], "q": []})),
        "preference_frame.json": frame_to_json(
            build_preference_frame([["x1"], ["x2", "x3"]])),
    }
    written = []
    for name, d in docs.items():
        p = out / name
        p.write_text(dumps(d), encoding="utf-8")
        written.append(p)
    return written
