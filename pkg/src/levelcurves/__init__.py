"""Exact and certified analysis of unimodular level sets of rational maps.

The package decides whether |P1(z)| = |P2(z)| = 1 has finitely many
solutions, enumerates and certifies them when it does, recognizes quotients
of finite Blaschke products, analyzes unimodular points of plane curves,
and tabulates the stabilized common divisors of P1^k - 1 and P2^k - 1.
"""

from .arith import ComplexBall, GaussianRational, Interval, RectComplex, to_ball
from .arlab import (
    ARReport,
    DependenceCertificate,
    ar_accumulate,
    gcd_power_shift,
    mult_independence,
    multiplicity_profile,
)
from .circlemaps import (
    BlaschkeForm,
    blaschke_quotient_split,
    is_circle_preserving,
    is_finite_blaschke,
    schur_cohn_all_inside,
)
from .config import RunConfig
from .curvelab import (
    CurvePoint,
    CurveReport,
    PlaneCurve,
    RealityResult,
    analyze_unimodular,
    cayley_substitute,
    conj_reality_test,
    implicitize,
    left_compose_factor,
    luroth_generator,
    max_singular_points,
)
from .errors import LevelCurveError
from .levelsolver import (
    CertifiedPoint,
    DegeneracyWitness,
    LevelPoly,
    SolutionReport,
    count_bound,
    explain_degenerate,
    level_poly,
    solve_unimodular_pair,
)
from .parsing import parse_bipoly, parse_expression
from .polynomials import (
    BiPoly,
    RootBall,
    UniPoly,
    bi_gcd,
    bi_resultant,
    certified_roots,
    format_bipoly,
    format_unipoly,
    squarefree_decomposition,
    uni_gcd,
)
from .ratfun import RatFun, format_ratfun, rf_compose, rf_degree, rf_make

__version__ = "0.1.0"

__all__ = [
    "ARReport",
    "BiPoly",
    "BlaschkeForm",
    "CertifiedPoint",
    "ComplexBall",
    "CurvePoint",
    "CurveReport",
    "DegeneracyWitness",
    "DependenceCertificate",
    "GaussianRational",
    "Interval",
    "LevelCurveError",
    "LevelPoly",
    "PlaneCurve",
    "RatFun",
    "RealityResult",
    "RectComplex",
    "RootBall",
    "RunConfig",
    "SolutionReport",
    "UniPoly",
    "analyze_unimodular",
    "ar_accumulate",
    "bi_gcd",
    "bi_resultant",
    "blaschke_quotient_split",
    "cayley_substitute",
    "certified_roots",
    "conj_reality_test",
    "count_bound",
    "explain_degenerate",
    "format_bipoly",
    "format_ratfun",
    "format_unipoly",
    "gcd_power_shift",
    "implicitize",
    "is_circle_preserving",
    "is_finite_blaschke",
    "left_compose_factor",
    "level_poly",
    "luroth_generator",
    "max_singular_points",
    "mult_independence",
    "multiplicity_profile",
    "parse_bipoly",
    "parse_expression",
    "rf_compose",
    "rf_degree",
    "rf_make",
    "schur_cohn_all_inside",
    "solve_unimodular_pair",
    "squarefree_decomposition",
    "to_ball",
    "uni_gcd",
]
