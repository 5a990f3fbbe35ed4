"""Exact local algebra for singularity germs.

Sparse power series arithmetic over the rationals or a prime field,
standard bases in the local ordering, and the classical invariants of
isolated complete intersection singularities: Tjurina and Milnor
numbers, Samuel functions with their lower bounds, critical-ring
multiplicities, and finite-jet membership tests.
"""

from .errors import (
    ContextMismatchError,
    DegenerateDrawsError,
    GenericityFailureError,
    InfiniteLengthError,
    NoStabilizationError,
    NotICISError,
    ParseError,
    StepBudgetExceededError,
)
from .fields import PrimeField, QQ, Rationals
from .ring import LocalPolynomial, RingContext, format_polynomial
from .standard_basis import (
    INFINITE,
    FreeModuleElement,
    IdealBasis,
    SubmoduleBasis,
    colength,
    ideal_power,
    ideal_product,
    ideal_sum,
    krull_dimension,
    leading_structure,
    maximal_ideal,
    mora_normal_form,
    reduces_to_zero,
    standard_basis,
)
from .invariants import (
    CheckOutcome,
    CriticalMultiplicityResult,
    MultiplicityResult,
    SamuelBoundsCheck,
    SamuelTable,
    SingularityInput,
    check_inequalities,
    check_samuel_bounds,
    critical_locus,
    critical_multiplicity,
    generic_combination_colengths,
    is_icis,
    is_regular_sequence,
    jacobian_matrix,
    jacobian_minors,
    milnor_bound,
    milnor_exact,
    multiplicity,
    samuel_function,
    sigma_scheme,
    tjurina,
    tjurina_module,
)
from .jets import (
    ClassVerdict,
    JetVector,
    ScanResult,
    critical_jet_test,
    dimension_jet_test,
    stabilization_scan,
    tjurina_jet_test,
)
from .parsing import CorpusEntry, parse_corpus, parse_entry, parse_expression, poly
from .corpus import bundled_corpus, entry_input, load_corpus
from .report import (
    InvariantReport,
    RunConfig,
    analyze_entry,
    emit_csv,
    emit_json,
    emit_report,
    reports_from_json,
    run_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "CheckOutcome",
    "ClassVerdict",
    "ContextMismatchError",
    "CorpusEntry",
    "CriticalMultiplicityResult",
    "DegenerateDrawsError",
    "FreeModuleElement",
    "GenericityFailureError",
    "IdealBasis",
    "INFINITE",
    "InfiniteLengthError",
    "InvariantReport",
    "JetVector",
    "LocalPolynomial",
    "MultiplicityResult",
    "NoStabilizationError",
    "NotICISError",
    "ParseError",
    "PrimeField",
    "QQ",
    "Rationals",
    "RingContext",
    "RunConfig",
    "SamuelBoundsCheck",
    "SamuelTable",
    "ScanResult",
    "SingularityInput",
    "StepBudgetExceededError",
    "SubmoduleBasis",
    "analyze_entry",
    "bundled_corpus",
    "check_inequalities",
    "check_samuel_bounds",
    "colength",
    "critical_jet_test",
    "critical_locus",
    "critical_multiplicity",
    "dimension_jet_test",
    "emit_csv",
    "emit_json",
    "emit_report",
    "entry_input",
    "format_polynomial",
    "generic_combination_colengths",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "is_icis",
    "is_regular_sequence",
    "jacobian_matrix",
    "jacobian_minors",
    "krull_dimension",
    "leading_structure",
    "load_corpus",
    "maximal_ideal",
    "milnor_bound",
    "milnor_exact",
    "mora_normal_form",
    "multiplicity",
    "parse_corpus",
    "parse_entry",
    "parse_expression",
    "poly",
    "reduces_to_zero",
    "reports_from_json",
    "run_corpus",
    "samuel_function",
    "sigma_scheme",
    "stabilization_scan",
    "standard_basis",
    "tjurina",
    "tjurina_jet_test",
    "tjurina_module",
]
