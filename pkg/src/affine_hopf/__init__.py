"""Exact construction and verification of affine Hopf fibrations.

An affine Hopf fibration fills R^n with pairwise skew affine p-planes.
The package computes the Hurwitz-Radon function, builds the matrix
families behind the existence criterion, certifies skewness with exact
rank computations, projects classical Hopf fibrations to affine charts,
and runs the power-series test for the complex case.
"""

__version__ = "0.1.0"

from .errors import (
    ConsistencyError,
    DomainError,
    EquatorialFiberError,
    ExistenceError,
    NormalizationError,
    StructuralError,
)
from .report import VerificationReport
from .hrcore import (
    DimensionPair,
    DyadicDecomposition,
    TableRow,
    admissible_set,
    admissibility_table,
    dyadic_decompose,
    exists_fibration,
    is_dominant,
    render_table,
    rho,
)
from .hrmat import (
    DualFamily,
    HRFamily,
    build_hr_family,
    dualize,
    normalize,
    truncate_family,
    verify_hr_family,
    verify_square_identity,
)
from .fibration import (
    AffineSubspace,
    SkewFibration,
    base_point,
    build_fibration,
    fiber_at,
    pairwise_skew,
    verify_fibration,
)
from .hopf import (
    GreatSubspacePlan,
    HopfPoint,
    central_project,
    hopf_span,
    sample_hopf_fibration,
)
from .series import (
    TruncatedRationalSeries,
    base_series,
    complex_condition_holds,
    min_complex_ambient,
    series_pow,
)
