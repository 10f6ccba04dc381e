"""Origami fold-construction engine.

Exact/float plane geometry, certified real-root isolation over the
rationals, cosine polynomials of regular polygons with a single-fold
constructibility classifier, the seven single-fold alignment solvers plus
the quintic-solving two-simultaneous-fold operation, and a verified fold
script that constructs the regular hendecagon with SVG diagrams.
"""

from .geometry import (
    Line,
    Point,
    distance,
    incident,
    intersect,
    line_through,
    midpoint,
    perpendicular_bisector,
    reflect_line,
    reflect_point,
)
from .polynomials import (
    RatFunc,
    RatPoly,
    RootInterval,
    count_real_roots,
    isolate_real_roots,
    ratfunc_substitute,
    refine_root,
)
from .cyclotomic import (
    ConstructibilityReport,
    NgonPolynomial,
    chebyshev_term,
    classify_constructible,
    halved_cyclotomic,
    vertex_cosines,
)
from .folds import (
    SingleFoldProblem,
    TwoFoldConfig,
    TwoFoldSolution,
    delta_line,
    eliminate_to_quintic,
    gamma_line_from_s,
    gamma_line_from_t,
    s_from_t,
    solve_single_fold,
    solve_two_fold,
)
from .construction import (
    ConstructionState,
    FoldScript,
    FoldStep,
    expected_vertices,
    hendecagon_script,
    rotate_length,
    run_script,
    verify_hendecagon,
)
from .render import DiagramSpec, emit_svg, write_svgs
from .scriptio import decode_script, decode_two_fold_config, encode_script

__version__ = "0.1.0"

__all__ = [
    "Line", "Point", "distance", "incident", "intersect", "line_through",
    "midpoint", "perpendicular_bisector", "reflect_line", "reflect_point",
    "RatFunc", "RatPoly", "RootInterval", "count_real_roots",
    "isolate_real_roots", "ratfunc_substitute", "refine_root",
    "ConstructibilityReport", "NgonPolynomial", "chebyshev_term",
    "classify_constructible", "halved_cyclotomic", "vertex_cosines",
    "SingleFoldProblem", "TwoFoldConfig", "TwoFoldSolution", "delta_line",
    "eliminate_to_quintic", "gamma_line_from_s", "gamma_line_from_t",
    "s_from_t", "solve_single_fold", "solve_two_fold",
    "ConstructionState", "FoldScript", "FoldStep", "expected_vertices",
    "hendecagon_script", "rotate_length", "run_script", "verify_hendecagon",
    "DiagramSpec", "emit_svg", "write_svgs",
    "decode_script", "decode_two_fold_config", "encode_script",
    "__version__",
]
