"""Hilbert-style proof systems, checker, builder and the shipped corpus."""

from .checker import (BadAxiomInstance, BadPremise, BadRuleApplication,
                      ForwardReference, Justification, ProofError, ProofLine,
                      ProofScript, ProofVerdict, check_line, check_proof,
                      depends_on_premise)
from .systems import (ProofSystem, UnknownSystem, builtin_systems, get_system,
                      match_schema)

__all__ = [
    "BadAxiomInstance", "BadPremise", "BadRuleApplication", "ForwardReference",
    "Justification", "ProofError", "ProofLine", "ProofScript", "ProofVerdict",
    "check_line", "check_proof", "depends_on_premise", "ProofSystem", "UnknownSystem",
    "builtin_systems", "get_system", "match_schema",
]
