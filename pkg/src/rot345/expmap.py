"""Closed-form exponentials of antisymmetric matrices in dimensions 3, 4, 5."""

import math
from dataclasses import dataclass

import numpy as np

from ._scalars import exp45_coefficients, sinc, versinc
from .decomp import CLASS_NAMES, TAU_ISO, TAU_ZERO, Invariants45, antisym45, classify
from .errors import ClassError, DimensionError, NotSimpleError
from .kernels import K
from .smallmat import ANTISYMMETRY_TOL, _square, as_mat, skew_checked
from . import so3
from .so3 import exp_so3

RANK2_TOL = 1e-8


def exp_simple(f, tol=ANTISYMMETRY_TOL):
    """exp of a rank <= 2 generator: I + sinc(t) f + ((1 - cos t)/t^2) f^2, t = |f|.

    Raises NotSimpleError unless f^3 = -t^2 f (to 1e-8, relative).
    """
    f = skew_checked(f, tol=tol)
    theta = K.half_trace_norm(f)
    f2 = K.matmul(f, f)
    resid = float(np.max(np.abs(K.matmul(f2, f) + theta * theta * f)))
    if resid > RANK2_TOL * max(1.0, theta**3):
        raise NotSimpleError(f"generator is not a single wedge (|f^3 + t^2 f| = {resid:.3g})")
    if theta <= TAU_ZERO:
        return np.eye(f.shape[0]) + f + 0.5 * f2
    return np.eye(f.shape[0]) + sinc(theta) * f + versinc(theta) * f2


def exp45_generic(f, inv=None):
    """I + (A f + B f^2 + C f^3 + D f^4) / sqrt(Delta) for two distinct nonzero angles."""
    f = antisym45(f)
    if inv is None:
        inv = Invariants45(*K.invariants45(f))
    klass = classify(inv, K.half_trace_norm(f))
    if klass != "Generic":
        raise ClassError(f"exp45_generic needs a Generic generator, got {klass}")
    a, b, c, d = exp45_coefficients(inv.theta_plus, inv.theta_minus)
    f2 = K.matmul(f, f)
    f3 = K.matmul(f2, f)
    f4 = K.matmul(f2, f2)
    return np.eye(f.shape[0]) + (a * f + b * f2 + c * f3 + d * f4) / math.sqrt(inv.delta)


def exp45_isoclinic(f, theta, check=True):
    """I + sinc(theta) f + ((1 - cos theta)/theta^2) f^2 for equal angles theta.

    ``check=False`` skips the class test, e.g. to probe generators just off
    the isoclinic set.
    """
    f = antisym45(f)
    if check:
        inv = Invariants45(*K.invariants45(f))
        klass = classify(inv, K.half_trace_norm(f))
        if klass not in ("Isoclinic", "Zero"):
            raise ClassError(f"exp45_isoclinic needs an Isoclinic generator, got {klass}")
    return K.exp_rank2(f, float(theta))


@dataclass(frozen=True, eq=False)
class ExpResult:
    rotation: np.ndarray
    klass: str
    invariants: Invariants45


def exp_with_info(f, tol=ANTISYMMETRY_TOL):
    """Like exp_son, also reporting the class and invariants.

    A 3x3 generator is always a single wedge: Delta = theta^4, theta_- = 0.
    """
    f = as_mat(f)
    if f.shape[0] == 3:
        theta = K.half_trace_norm(skew_checked(f, 3, tol))
        klass = "Simple" if theta > so3.TAU_ZERO else "Zero"
        return ExpResult(exp_so3(f, tol), klass, Invariants45(theta**4, theta**2, 0.0))
    f = skew_checked(f, tol=tol)
    r, code, delta, tp2, tm2 = K.exp45(f, TAU_ZERO, TAU_ISO)
    return ExpResult(r, CLASS_NAMES[code], Invariants45(delta, tp2, tm2))


def exp_son(f, tol=ANTISYMMETRY_TOL):
    """Rotation exp(f) for antisymmetric f of size 3, 4 or 5."""
    f = _square(f, None)
    n = f.shape[0]
    if n == 3:
        return exp_so3(f, tol)
    if n not in (4, 5):
        raise DimensionError(f"unsupported dimension {n}")
    f = skew_checked(f, tol=tol)
    return K.exp45(f, TAU_ZERO, TAU_ISO)[0]
