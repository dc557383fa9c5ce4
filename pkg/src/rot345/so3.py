"""Rotations of three-space: Rodrigues' formula, exp and log.

Angles returned by the extraction routines lie in [0, pi]. A rotation by
theta in (pi, 2 pi) about u therefore comes back as 2 pi - theta about -u.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BranchError
from .kernels import K
from .smallmat import ANTISYMMETRY_TOL, ROTATION_TOL, as_vec, check_rotation, skew_checked
from .wedge import lambda_inverse, lambda_map

TAU_ZERO = 1e-8
TAU_PI = 1e-7
TAU_SIN = 1e-8
UNIT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class AxisAngle:
    theta: float
    axis: np.ndarray


@dataclass(frozen=True, eq=False)
class Log3Identity:
    branch: str = field(default="Identity", init=False)


@dataclass(frozen=True, eq=False)
class Log3Generic:
    axis_angle: AxisAngle
    f: np.ndarray
    branch: str = field(default="Generic", init=False)


@dataclass(frozen=True, eq=False)
class Log3Pi:
    """Half-turn: only the axis line is determined, via proj = (I + R)/2."""

    proj: np.ndarray
    axis: np.ndarray
    branch: str = field(default="Pi", init=False)


def _unit_axis(u):
    u = as_vec(u, 3)
    if abs(math.sqrt(float(u @ u)) - 1.0) > UNIT_TOL:
        raise ValueError("rotation axis must be a unit vector")
    return u


def rodrigues_apply(theta, u, v):
    """Rotate v by theta about the unit axis u."""
    u = _unit_axis(u)
    v = as_vec(v, 3)
    c, s = math.cos(theta), math.sin(theta)
    return c * v + (1.0 - c) * float(u @ v) * u + s * np.cross(u, v)


def rotation3(theta, u):
    """cos(theta) I + (1 - cos(theta)) u u^t + sin(theta) Lambda_u."""
    u = _unit_axis(u)
    c, s = math.cos(theta), math.sin(theta)
    return c * np.eye(3) + (1.0 - c) * np.outer(u, u) + s * lambda_map(u)


def exp_so3(a, tol=ANTISYMMETRY_TOL):
    """Closed-form exponential of a 3x3 antisymmetric matrix."""
    a = skew_checked(a, 3, tol)
    return K.exp3(a, TAU_ZERO)


def angle_of(r, tol=ROTATION_TOL):
    r = check_rotation(r, 3, tol)
    c = 0.5 * (K.trace(r) - 1.0)
    return math.acos(min(1.0, max(-1.0, c)))


def axis_of(r, theta):
    """Unit axis read off R - R^t; theta must be away from 0 and pi."""
    s = math.sin(theta)
    if s <= TAU_SIN:
        branch = "Identity" if math.cos(theta) > 0 else "Pi"
        raise BranchError(f"axis undetermined by R - R^t at theta={theta!r}; use the {branch} branch", branch)
    r = np.asarray(r, dtype=np.float64)
    w = lambda_inverse(r - r.T)
    return w / math.sqrt(float(w @ w))


def _dominant_axis(proj):
    j = int(np.argmax(np.einsum("ij,ij->j", proj, proj)))
    u = proj[:, j] / math.sqrt(float(proj[:, j] @ proj[:, j]))
    if u[np.argmax(np.abs(u))] < 0:
        u = -u
    return u


def log_so3(r, tol=ROTATION_TOL):
    """Principal logarithm of a 3x3 rotation, as a Log3Identity/Log3Generic/Log3Pi."""
    r = check_rotation(r, 3, tol)
    k = r - r.T
    c = min(1.0, max(-1.0, 0.5 * (K.trace(r) - 1.0)))
    s = 0.5 * math.sqrt(float(np.sum(lambda_inverse(k) ** 2)))
    theta = math.atan2(s, c)
    if theta <= TAU_ZERO:
        return Log3Identity()
    if theta >= math.pi - TAU_PI:
        proj = 0.25 * (2.0 * np.eye(3) + r + r.T)
        return Log3Pi(proj=proj, axis=_dominant_axis(proj))
    f = (theta / (2.0 * s)) * k
    axis = lambda_inverse(f) / theta
    return Log3Generic(axis_angle=AxisAngle(theta, axis), f=f)
