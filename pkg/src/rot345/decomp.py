"""Split a 4x4 or 5x5 antisymmetric matrix into two commuting wedge parts.

For f = f_plus + f_minus with orthogonal two-planes and angles
theta_plus >= theta_minus,

    Delta      = tr(f^4) - tr(f^2)^2 / 4          = (theta_+^2 - theta_-^2)^2
    theta_+-^2 = -tr(f^2) / 4 +- sqrt(Delta) / 2
    f_+-       = -+(theta_-+^2 f + f^3) / sqrt(Delta)

The split is unique unless Delta = 0 (isoclinic), where no parts are
produced.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _scalars
from .errors import DimensionError
from .kernels import K
from .smallmat import ANTISYMMETRY_TOL, as_mat, skew_checked

TAU_ZERO = 1e-10
TAU_ISO = 1e-8

CLASS_NAMES = {
    _scalars.ZERO: "Zero",
    _scalars.SIMPLE: "Simple",
    _scalars.ISOCLINIC: "Isoclinic",
    _scalars.GENERIC: "Generic",
}


@dataclass(frozen=True)
class Invariants45:
    delta: float
    theta_plus_sq: float
    theta_minus_sq: float

    @property
    def theta_plus(self):
        return math.sqrt(self.theta_plus_sq)

    @property
    def theta_minus(self):
        return math.sqrt(self.theta_minus_sq)


@dataclass(frozen=True, eq=False)
class SpectralSplit:
    delta: float
    theta_plus: float
    theta_minus: float
    f_plus: np.ndarray | None
    f_minus: np.ndarray | None
    klass: str


def antisym45(f, tol=ANTISYMMETRY_TOL):
    f = as_mat(f)
    if f.shape[0] not in (4, 5):
        raise DimensionError("decompose requires n in {4,5}")
    return skew_checked(f, tol=tol)


def invariants_of(f, tol=ANTISYMMETRY_TOL):
    """Delta and the squared two-plane angles of f; negatives from rounding clamp to 0.

    The smaller squared angle is taken as (theta_+ theta_-)^2 / theta_+^2 with
    the product read off the principal 4x4 Pfaffians, and near Delta = 0 the
    discriminant is re-evaluated from the traceless part of f^2; both agree
    with the trace formulas in exact arithmetic.
    """
    f = antisym45(f, tol)
    return Invariants45(*K.invariants45(f))


def classify(inv, f_norm):
    code = _scalars.classify_code(
        inv.theta_minus, math.sqrt(inv.delta), f_norm, TAU_ZERO, TAU_ISO
    )
    return CLASS_NAMES[code]


def orthogonal_decompose(f, tol=ANTISYMMETRY_TOL):
    f = antisym45(f, tol)
    inv = Invariants45(*K.invariants45(f))
    f_norm = K.half_trace_norm(f)
    klass = classify(inv, f_norm)
    n = f.shape[0]
    if klass == "Zero":
        zero = np.zeros((n, n))
        return SpectralSplit(inv.delta, 0.0, 0.0, zero, zero.copy(), klass)
    if klass == "Simple":
        return SpectralSplit(inv.delta, f_norm, 0.0, f.copy(), np.zeros((n, n)), klass)
    if klass == "Isoclinic":
        return SpectralSplit(inv.delta, inv.theta_plus, inv.theta_minus, None, None, klass)
    sd = math.sqrt(inv.delta)
    f3 = K.matmul(K.matmul(f, f), f)
    f_plus = -(inv.theta_minus_sq * f + f3) / sd
    f_minus = (inv.theta_plus_sq * f + f3) / sd
    return SpectralSplit(inv.delta, inv.theta_plus, inv.theta_minus, f_plus, f_minus, klass)
