"""Intuitionistic logic with two Galois connections.

Formulas, finite H2GC algebras, Kripke frames, canonical frames, rough
H-sets and a Hilbert-style proof checker for Int2GC, Int2GC+FS and IK_t.
"""

from importlib.resources import files

from .algebra import (FiniteLattice, H2GCAlgebra, HeytingAlgebra, build_lattice,
                      chain, check_h2gc, check_identity, enumerate_h2gc,
                      enumerate_heyting, fs_flags, heyting_from_lattice,
                      prime_filters)
from .canonical import canonical_frame, canonical_valuation, key_lemma_check
from .formula import Formula, parse, parse_schema, to_str
from .kripke import (FSFrame, Int2GCFrame, IntGCFrame, KripkeModel, check_frame,
                     enumerate_frames, find_kripke_countermodel, make_frame,
                     satisfies, valid_in_frame)
from .rough import RoughContext, box_g, box_h, dia_f, dia_p, power_algebra, verify_rough_laws
from .semantics import (eval_formula, find_algebraic_countermodel,
                        valid_in_algebra)

__version__ = "0.1.0"

__all__ = [
    "FiniteLattice", "H2GCAlgebra", "HeytingAlgebra", "build_lattice", "chain",
    "check_h2gc", "check_identity", "enumerate_h2gc", "enumerate_heyting",
    "fs_flags", "heyting_from_lattice", "prime_filters",
    "canonical_frame", "canonical_valuation", "key_lemma_check",
    "Formula", "parse", "parse_schema", "to_str",
    "FSFrame", "Int2GCFrame", "IntGCFrame", "KripkeModel", "check_frame",
    "enumerate_frames", "find_kripke_countermodel", "make_frame", "satisfies",
    "valid_in_frame",
    "RoughContext", "box_g", "box_h", "dia_f", "dia_p", "power_algebra",
    "verify_rough_laws",
    "eval_formula", "find_algebraic_countermodel", "valid_in_algebra",
    "data_path",
]


def data_path(*parts: str):
    """Path of a file shipped under ``int2gc/data``."""
    return files(__name__).joinpath("data", *parts)
