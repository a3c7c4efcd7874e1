"""Exact invariants, blowup resolutions, and comparison certificates for
plane curve germs {f(x, y) = 0} at the origin, over the rationals.

Everything is computed with exact arithmetic; nothing here is numerical.
"""

from .compare import BRANCH_CAVEAT, INCONCLUSIVE, NOT_SMOOTHER, ComparisonVerdict, not_smoother
from .errors import (
    CorpusFormatError,
    DegreeCapError,
    GermError,
    InconsistentSequenceError,
    InvalidCharacteristicError,
    MultiplicityTooSmallError,
    NonIsolatedSingularityError,
    NotABranchError,
    NotAGermError,
    NotSingularError,
    ParseError,
    ReducibleTangentConeError,
    SingularMatrixError,
    SmoothGermError,
    UnknownVariableError,
    ZeroIdealError,
    ZeroPolynomialError,
)
from .invariants import (
    InvariantReport,
    LawCheck,
    blowup_law_check,
    claim_check,
    claim_check_range,
    dmin_lower,
    germ_report,
    ratio_check,
    resolution_law_checks,
    theorem_verify,
)
from .localalg import (
    INFINITE,
    LOCAL_ORDER,
    UNSTABLE,
    LocalOrder,
    StandardBasis,
    colength,
    colength_oracle,
    milnor_number,
    standard_basis,
    tjurina_number,
)
from .polynomials import (
    DEFAULT_DEGREE_CAP,
    ONE,
    VERTICAL,
    X,
    Y,
    ZERO,
    Direction,
    Polynomial,
    Slope,
    Vertical,
    parse_polynomial,
)
from .resolution import (
    MULTIPLE_DIRECTIONS,
    BlowupStep,
    MultipleDirections,
    PuiseuxCharacteristic,
    PurePower,
    ResolutionSequence,
    characteristic_from_sequence,
    delta_from_sequence,
    expected_sequence_from_characteristic,
    mu_topological,
    resolve_branch,
    strict_transform_once,
    tangent_data,
)

__version__ = "0.1.0"

__all__ = [
    "BRANCH_CAVEAT",
    "BlowupStep",
    "ComparisonVerdict",
    "CorpusFormatError",
    "DEFAULT_DEGREE_CAP",
    "DegreeCapError",
    "Direction",
    "GermError",
    "INCONCLUSIVE",
    "INFINITE",
    "InconsistentSequenceError",
    "InvalidCharacteristicError",
    "InvariantReport",
    "LOCAL_ORDER",
    "LawCheck",
    "LocalOrder",
    "MULTIPLE_DIRECTIONS",
    "MultipleDirections",
    "MultiplicityTooSmallError",
    "NOT_SMOOTHER",
    "NonIsolatedSingularityError",
    "NotABranchError",
    "NotAGermError",
    "NotSingularError",
    "ONE",
    "ParseError",
    "Polynomial",
    "PuiseuxCharacteristic",
    "PurePower",
    "ReducibleTangentConeError",
    "ResolutionSequence",
    "SingularMatrixError",
    "SmoothGermError",
    "Slope",
    "StandardBasis",
    "UNSTABLE",
    "UnknownVariableError",
    "VERTICAL",
    "Vertical",
    "X",
    "Y",
    "ZERO",
    "ZeroIdealError",
    "ZeroPolynomialError",
    "blowup_law_check",
    "characteristic_from_sequence",
    "claim_check",
    "claim_check_range",
    "colength",
    "colength_oracle",
    "delta_from_sequence",
    "dmin_lower",
    "expected_sequence_from_characteristic",
    "germ_report",
    "milnor_number",
    "mu_topological",
    "not_smoother",
    "parse_polynomial",
    "ratio_check",
    "resolution_law_checks",
    "resolve_branch",
    "standard_basis",
    "strict_transform_once",
    "tangent_data",
    "theorem_verify",
    "tjurina_number",
]
