"""Dense vectors and matrices of dimension 3, 4 or 5.

Vectors and matrices are plain float64 numpy arrays; the helpers here
validate shape and finiteness and provide the few products the rest of the
package needs.
"""

import math

import numpy as np

from .errors import DimensionError, NotAntisymmetricError, NotRotationError
from .kernels import K

DIMENSIONS = (3, 4, 5)


def as_vec(x, n=None):
    """Validate and convert ``x`` to a float64 vector of length 3, 4 or 5."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] not in DIMENSIONS:
        raise DimensionError(f"expected a vector of length 3, 4 or 5, got shape {v.shape}")
    if n is not None and v.shape[0] != n:
        raise DimensionError(f"expected length {n}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite components")
    return v


def _square(a, n):
    if type(a) is np.ndarray and a.dtype == np.float64 and a.flags.c_contiguous:
        m = a
    else:
        m = np.ascontiguousarray(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in DIMENSIONS:
        raise DimensionError(f"expected a square 3x3, 4x4 or 5x5 matrix, got shape {m.shape}")
    if n is not None and m.shape[0] != n:
        raise DimensionError(f"expected a {n}x{n} matrix, got {m.shape[0]}x{m.shape[0]}")
    return m


def as_mat(a, n=None):
    """Validate and convert ``a`` to a contiguous float64 n x n matrix, n in {3, 4, 5}."""
    m = _square(a, n)
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def _same_dim(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")


def identity(n):
    if n not in DIMENSIONS:
        raise DimensionError(f"unsupported dimension {n}")
    return np.eye(n)


def multiply(a, b):
    a, b = as_mat(a), as_mat(b)
    _same_dim(a, b)
    return K.matmul(a, b)


def transpose(a):
    return as_mat(a).T.copy()


def trace(a):
    return K.trace(as_mat(a))


def half_trace_norm(a):
    """sqrt(tr(A A^t)/2); for u^v this is |u||v| sin(angle)."""
    return K.half_trace_norm(as_mat(a))


def basis_vector(n, j):
    """The n-vector with a one in (1-based) position ``j``."""
    if n not in DIMENSIONS:
        raise DimensionError(f"unsupported dimension {n}")
    if not 1 <= j <= n:
        raise IndexError(f"basis index {j} out of range 1..{n}")
    e = np.zeros(n)
    e[j - 1] = 1.0
    return e


def approx_eq(a, b, tol):
    """True iff the largest entrywise difference is at most ``tol``."""
    a, b = as_mat(a), as_mat(b)
    _same_dim(a, b)
    if not tol > 0:
        raise ValueError("tol must be positive")
    return K.max_abs_diff(a, b) <= tol


def max_abs_diff(a, b):
    a, b = as_mat(a), as_mat(b)
    _same_dim(a, b)
    return K.max_abs_diff(a, b)


def antisymmetry_residual(a):
    a = as_mat(a)
    return float(np.max(np.abs(a + a.T)))


def orthogonality_residual(r):
    return K.orthogonality_residual(as_mat(r))


def det(a):
    return float(np.linalg.det(as_mat(a)))


def dot(u, v):
    return float(np.dot(u, v))


def norm(u):
    return math.sqrt(dot(u, u))


# input validation tolerances (overridable per call)
ANTISYMMETRY_TOL = 1e-9
ROTATION_TOL = 1e-9


def skew_checked(a, n=None, tol=ANTISYMMETRY_TOL):
    """Validate that ``a`` is antisymmetric up to ``tol`` and return (a - a^t)/2.

    ``tol`` is relative to max(1, max|a_ij|).
    """
    out, resid, amax = K.skew_split(_square(a, n))
    if not math.isfinite(amax):
        raise ValueError("matrix has non-finite entries")
    if resid > tol * max(1.0, amax):
        raise NotAntisymmetricError(f"matrix is not antisymmetric (max |A + A^t| = {resid:.3g})")
    return out


def check_rotation(r, n=None, tol=ROTATION_TOL):
    """Validate orthogonality and unit determinant; returns the float64 matrix unchanged."""
    r = as_mat(r, n)
    ortho = K.orthogonality_residual(r)
    if ortho > tol:
        raise NotRotationError(f"matrix is not orthogonal (max |R^t R - I| = {ortho:.3g})")
    d = np.linalg.det(r)
    if abs(d - 1.0) > tol:
        raise NotRotationError(f"determinant is {d:.17g}, not +1")
    return r
