"""Outer and wedge products, the cross-product matrix, and plane projections.

Conventions: ``outer(u, v)`` maps w to (v.w) u, so its (i, j) entry is
u_i v_j, and ``wedge(u, v) = outer(u, v) - outer(v, u)``.
"""

import math

import numpy as np

from .errors import DegeneratePlaneError, DimensionError
from .smallmat import as_vec, dot

PLANE_TOL = 1e-10


def _pair(u, v):
    u, v = as_vec(u), as_vec(v)
    if u.shape != v.shape:
        raise DimensionError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")
    return u, v


def outer(u, v):
    u, v = _pair(u, v)
    return np.outer(u, v)


def wedge(u, v):
    u, v = _pair(u, v)
    uv = np.outer(u, v)
    return uv - uv.T


def wedge_norm(u, v):
    """sqrt(|u|^2 |v|^2 - (u.v)^2), clamped at zero."""
    u, v = _pair(u, v)
    uv = dot(u, v)
    return math.sqrt(max(dot(u, u) * dot(v, v) - uv * uv, 0.0))


def lambda_map(u):
    """Matrix of v -> u x v for a 3-vector u."""
    u = as_vec(u)
    if u.shape[0] != 3:
        raise DimensionError("lambda_map needs a 3-vector")
    return np.array(
        [
            [0.0, -u[2], u[1]],
            [u[2], 0.0, -u[0]],
            [-u[1], u[0], 0.0],
        ]
    )


def lambda_inverse(a):
    """Read u back from the entries of a 3x3 antisymmetric ``lambda_map(u)``."""
    return np.array([a[2, 1], a[0, 2], a[1, 0]])


def plane_projection(u, v):
    """Orthogonal projection onto span(u, v), as -(u^v)^2 / |u^v|^2.

    Raises DegeneratePlaneError when |u^v| <= 1e-10 max(1, |u||v|).
    """
    u, v = _pair(u, v)
    wn = wedge_norm(u, v)
    if wn <= PLANE_TOL * max(1.0, math.sqrt(dot(u, u) * dot(v, v))):
        raise DegeneratePlaneError("vectors do not span a two-plane")
    w = wedge(u, v)
    return -(w @ w) / (wn * wn)
