"""Exact analysis of Volterra quadratic stochastic operators on the simplex."""
from .core import (
    Face,
    SimplexPoint,
    SkewMatrix,
    VolterraOperator,
    all_faces,
    apply,
    classify_point,
    odd_faces,
    restrict,
    validate,
)
from .fixedpoints import (
    FixedPoint,
    enumerate_fixed_points,
    interior_fixed_point,
    kernel_vector,
    oracle_fixed_points,
)
from .homotopy import (
    HomotopyPath,
    are_homotopic,
    count_classes,
    extensions,
    forced_pattern_count,
    homotopy_path,
    linear_path,
    validate_path,
)
from .pfaffian import Signature, is_transversal, pfaffian, signature, subpfaffian
from .tournament import Tournament, build_tournament, is_transitive, predict_limit, strong_components

__version__ = "0.1.0"
