"""Concurrence analysis for naive claim semantics on claim-augmented
argumentation frameworks: two decision engines (enumeration and SAT witness
search), a CNF-to-framework generator with a machine-checked contract, and
text formats for both frameworks and formulas."""

from .caf_io import emit_caf, parse_caf
from .cnf import (
    CnfFormula,
    emit_dimacs,
    find_tautological_clause,
    has_tautological_clause,
    make_cnf,
    parse_dimacs,
    sat_oracle,
    satisfies,
)
from .errors import (
    CapacityError,
    ConcafError,
    ParseError,
    StructuralError,
    TautologyError,
    WitnessVerificationError,
)
from .model import (
    Af,
    Caf,
    ClaimSet,
    Extension,
    attacked_by,
    attackers_of,
    is_well_formed,
    make_af,
    make_caf,
    well_formedness_violation,
)
from .reduction import (
    ReductionArtifact,
    ReductionCheck,
    ReductionReport,
    reduce_unsat,
    verify_reduction,
)
from .satcheck import (
    WitnessEncoding,
    dpll_solve,
    encode_nonconcurrence,
    export_encoding_dimacs,
    is_concurrent_sat,
    solve_encoding,
    verify_witness,
)
from .semantics import (
    ConcurrenceVerdict,
    claim_level_naive,
    claim_level_naive_exhaustive,
    incomparability_violation,
    inherited_naive,
    is_concurrent_brute,
    is_conflict_free,
    is_incomparable,
    is_naive,
    naive_extensions,
)

__version__ = "0.1.0"

__all__ = [
    "Af",
    "Caf",
    "CapacityError",
    "ClaimSet",
    "CnfFormula",
    "ConcafError",
    "ConcurrenceVerdict",
    "Extension",
    "ParseError",
    "ReductionArtifact",
    "ReductionCheck",
    "ReductionReport",
    "StructuralError",
    "TautologyError",
    "WitnessEncoding",
    "WitnessVerificationError",
    "attacked_by",
    "attackers_of",
    "claim_level_naive",
    "claim_level_naive_exhaustive",
    "dpll_solve",
    "emit_caf",
    "emit_dimacs",
    "encode_nonconcurrence",
    "export_encoding_dimacs",
    "find_tautological_clause",
    "has_tautological_clause",
    "incomparability_violation",
    "inherited_naive",
    "is_concurrent_brute",
    "is_concurrent_sat",
    "is_conflict_free",
    "is_incomparable",
    "is_naive",
    "is_well_formed",
    "make_af",
    "make_caf",
    "make_cnf",
    "naive_extensions",
    "parse_caf",
    "parse_dimacs",
    "reduce_unsat",
    "sat_oracle",
    "satisfies",
    "solve_encoding",
    "verify_reduction",
    "verify_witness",
    "well_formedness_violation",
]
