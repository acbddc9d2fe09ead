"""Verification and enumeration engine for the combinatorial restrictions
on degree-9 M-curves with three nests."""

__version__ = "0.1.0"

from .engine import (
    CandidateSpace,
    ExclusionReport,
    ProofTrace,
    candidate_complex_types,
    eliminate,
    jump_candidates,
    ledger_satisfiable,
    no_jump_candidates,
    prove_proposition2,
    prove_theorem1,
)
from .ledger import (
    OrientationLedger,
    lambda_deficit,
    lemma10_residuals,
    rm_residual,
    rokhlin_mishachev_rhs,
)
from .orevkov import (
    OrevkovTerms,
    allowed_zones,
    e_values,
    f_value,
    first_formula_residual,
    g_value,
    nest_terms,
    second_formula_residual,
)
from .rules import RULES, Candidate, RuleVerdict, evaluate_all, replay_violation
from .schemes import (
    ComplexType,
    CurveType,
    Jump,
    NestScheme,
    RealScheme,
    SchemeArityError,
    SchemeError,
    SchemeInvariantError,
    SchemeSyntaxError,
    enumerate_nest_schemes,
    enumerate_three_nest_schemes,
    format_real_scheme,
    nest_complex_types,
    parse_real_scheme,
    pi_delta,
)

__all__ = [
    "CandidateSpace",
    "Candidate",
    "ComplexType",
    "CurveType",
    "ExclusionReport",
    "Jump",
    "NestScheme",
    "OrevkovTerms",
    "OrientationLedger",
    "ProofTrace",
    "RULES",
    "RealScheme",
    "RuleVerdict",
    "SchemeArityError",
    "SchemeError",
    "SchemeInvariantError",
    "SchemeSyntaxError",
    "allowed_zones",
    "candidate_complex_types",
    "e_values",
    "eliminate",
    "enumerate_nest_schemes",
    "enumerate_three_nest_schemes",
    "evaluate_all",
    "f_value",
    "first_formula_residual",
    "format_real_scheme",
    "g_value",
    "jump_candidates",
    "lambda_deficit",
    "ledger_satisfiable",
    "lemma10_residuals",
    "nest_complex_types",
    "nest_terms",
    "no_jump_candidates",
    "parse_real_scheme",
    "pi_delta",
    "prove_proposition2",
    "prove_theorem1",
    "replay_violation",
    "rm_residual",
    "rokhlin_mishachev_rhs",
    "second_formula_residual",
]
