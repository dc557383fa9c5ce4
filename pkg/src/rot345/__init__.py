"""Closed-form exponential and logarithm maps for rotations in dimensions 3, 4 and 5."""

__version__ = "0.1.0"

from .decomp import Invariants45, SpectralSplit, classify, invariants_of, orthogonal_decompose
from .errors import (
    BranchError,
    ClassError,
    DegeneratePlaneError,
    DimensionError,
    NotAntisymmetricError,
    NotRotationError,
    NotSimpleError,
    Rot345Error,
)
from .expmap import exp45_generic, exp45_isoclinic, exp_simple, exp_son, exp_with_info
from .kernels import BACKEND
from .logmap import log45, log_simple, log_son, materialize, spectral_angles
from .oracle import random_antisym, random_orthogonal_wedge_pair, random_rotation, series_exp
from .so3 import angle_of, axis_of, exp_so3, log_so3, rodrigues_apply, rotation3
from .wedge import lambda_inverse, lambda_map, outer, plane_projection, wedge, wedge_norm

__all__ = [
    "BACKEND",
    "BranchError",
    "ClassError",
    "DegeneratePlaneError",
    "DimensionError",
    "Invariants45",
    "NotAntisymmetricError",
    "NotRotationError",
    "NotSimpleError",
    "Rot345Error",
    "SpectralSplit",
    "angle_of",
    "axis_of",
    "classify",
    "exp45_generic",
    "exp45_isoclinic",
    "exp_simple",
    "exp_so3",
    "exp_son",
    "exp_with_info",
    "invariants_of",
    "lambda_inverse",
    "lambda_map",
    "log45",
    "log_simple",
    "log_so3",
    "log_son",
    "materialize",
    "orthogonal_decompose",
    "outer",
    "plane_projection",
    "random_antisym",
    "random_orthogonal_wedge_pair",
    "random_rotation",
    "rodrigues_apply",
    "rotation3",
    "series_exp",
    "spectral_angles",
    "wedge",
    "wedge_norm",
]
