"""Pure-numpy kernel backend.

Same function set as :mod:`rot345.kernels._numba`; used when numba is
missing or ``ROT345_BACKEND=numpy``.
"""

import math

import numpy as np

from .._scalars import (
    GENERIC,
    ISOCLINIC,
    SIMPLE,
    ZERO,
    classify_code,
    exp45_coefficients,
    sinc,
    squared_angles,
    versinc,
)

SERIES_TERMS = 20

# principal 4x4 minors of a 5x5 matrix, one per dropped index
_DROP5 = [tuple(j for j in range(5) if j != i) for i in range(5)]


def matmul(a, b):
    return a @ b


def trace(a):
    return float(np.trace(a))


def trace_of_product(a, b):
    """tr(ab) without forming the product."""
    return float(np.sum(a * b.T))


def skew(a):
    return 0.5 * (a - a.T)


def skew_split(a):
    return 0.5 * (a - a.T), float(np.max(np.abs(a + a.T))), float(np.max(np.abs(a)))


def half_trace_norm(a):
    with np.errstate(over="ignore", under="ignore"):
        s = float(np.sum(a * a))
    if 1e-280 < s < 1e280:
        return math.sqrt(0.5 * s)
    # squares under- or overflowed: rescale by the largest entry
    m = float(np.max(np.abs(a)))
    if m == 0.0 or not math.isfinite(m):
        return m
    return m * math.sqrt(0.5 * float(np.sum((a / m) ** 2)))


def max_abs_diff(a, b):
    return float(np.max(np.abs(a - b)))


def orthogonality_residual(r):
    return float(np.max(np.abs(r.T @ r - np.eye(r.shape[0]))))


def _pf4(f, i, j, k, l):
    return f[i, j] * f[k, l] - f[i, k] * f[j, l] + f[i, l] * f[j, k]


def pfaffian_sq_sum(f):
    """Sum of squared Pfaffians of the principal 4x4 blocks.

    For an antisymmetric f with two-plane angles a, b this is a**2 * b**2.
    """
    n = f.shape[0]
    if n == 4:
        p = _pf4(f, 0, 1, 2, 3)
        return float(p * p)
    total = 0.0
    for idx in _DROP5:
        p = _pf4(f, *idx)
        total += p * p
    return float(total)


def adjugate(g):
    n = g.shape[0]
    adj = np.empty_like(g)
    # exactly singular minors make LU divide by zero; their determinant is still 0
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(n):
            for j in range(n):
                minor = np.delete(np.delete(g, j, axis=0), i, axis=1)
                adj[i, j] = (-1.0) ** (i + j) * np.linalg.det(minor)
    return adj


def split_discriminant(g):
    """(alpha - beta)**2 for symmetric g = -alpha P1 - beta P2 with rank-2 projectors.

    Evaluated as the squared Frobenius norm of the traceless part of g on the
    image of P1 + P2, which avoids the cancellation in tr(g^2) - tr(g)^2/4.
    """
    n = g.shape[0]
    t = np.trace(g)
    c = 0.25 * t
    if n == 4:
        h = g - c * np.eye(4)
        return float(np.sum(h * h))
    adj = adjugate(g)
    ta = np.trace(adj)
    if not ta > 1e-8 * c ** 4:
        return float(np.sum(g * g.T) - 0.25 * t * t)
    p0 = adj / ta
    h = g - c * (np.eye(5) - p0)
    return float(np.sum(h * h))


def _refine(delta, g, mean_root):
    """Replace a literal discriminant by split_discriminant(g) near equal roots.

    ``mean_root`` is (alpha + beta)/2; below it the literal difference of
    squares has lost about half its digits.
    """
    if delta <= mean_root * mean_root:
        delta = split_discriminant(g)
    return max(delta, 0.0)


def invariants45(f):
    """(Delta, theta_+^2, theta_-^2) of an antisymmetric 4x4 or 5x5 f."""
    f2 = f @ f
    tr2 = trace(f2)
    tr4 = trace_of_product(f2, f2)
    delta = _refine(tr4 - 0.25 * tr2 * tr2, f2, -0.25 * tr2)
    tp2, tm2 = squared_angles(tr2, delta, pfaffian_sq_sum(f))
    return delta, tp2, tm2


def rotation_delta(r):
    """delta of a 4x4 or 5x5 rotation from tr(R) and tr(R^2)."""
    n = r.shape[0]
    t1 = trace(r)
    t2 = trace_of_product(r, r)
    delta = 0.5 * t2 - 0.25 * t1 * t1 + 0.5 * (n - 4) * t1 - 0.25 * n * (n - 6)
    g = 0.5 * (r + r.T) - np.eye(n)
    # the literal value carries ~1e-15 absolute rounding; refine below 1e-8 too
    return _refine(delta, g, max(0.25 * (n - t1), 1e-4))


def exp_rank2(f, theta):
    """I + sinc(theta) f + versinc(theta) f^2, exact whenever f^3 = -theta^2 f."""
    n = f.shape[0]
    return np.eye(n) + sinc(theta) * f + versinc(theta) * (f @ f)


def exp45(f, tau_zero, tau_iso):
    """Closed-form exp of an antisymmetric 4x4/5x5 f.

    Returns (R, class code, Delta, theta_+^2, theta_-^2).
    """
    n = f.shape[0]
    f2 = f @ f
    tr2 = trace(f2)
    tr4 = trace_of_product(f2, f2)
    delta = _refine(tr4 - 0.25 * tr2 * tr2, f2, -0.25 * tr2)
    tp2, tm2 = squared_angles(tr2, delta, pfaffian_sq_sum(f))
    f_norm = math.sqrt(max(-0.5 * tr2, 0.0))
    sd = math.sqrt(delta)
    code = classify_code(math.sqrt(tm2), sd, f_norm, tau_zero, tau_iso)
    eye = np.eye(n)
    if code == ZERO:
        r = eye + f + 0.5 * f2
    elif code == SIMPLE:
        r = eye + sinc(f_norm) * f + versinc(f_norm) * f2
    elif code == ISOCLINIC:
        tp = math.sqrt(tp2)
        r = eye + sinc(tp) * f + versinc(tp) * f2
    else:
        a, b, c, d = exp45_coefficients(math.sqrt(tp2), math.sqrt(tm2))
        f3 = f2 @ f
        f4 = f2 @ f2
        r = eye + (a * f + b * f2 + c * f3 + d * f4) / sd
    return r, code, delta, tp2, tm2


def exp3(a, tau_zero):
    """Closed-form exp of an antisymmetric 3x3 matrix."""
    theta = half_trace_norm(a)
    a2 = a @ a
    if theta <= tau_zero:
        return np.eye(3) + a + 0.5 * a2
    return np.eye(3) + sinc(theta) * a + versinc(theta) * a2


def series_exp(a, terms=SERIES_TERMS):
    """Truncated Taylor series with scaling and squaring."""
    n = a.shape[0]
    norm = float(np.max(np.sum(np.abs(a), axis=1)))
    s = 0
    while norm > 0.5:
        norm *= 0.5
        s += 1
    b = a * 2.0 ** (-s)
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, terms):
        term = term @ b / k
        result = result + term
    for _ in range(s):
        result = result @ result
    return result


__all__ = [
    "GENERIC",
    "ISOCLINIC",
    "SIMPLE",
    "ZERO",
    "adjugate",
    "exp3",
    "exp45",
    "exp_rank2",
    "half_trace_norm",
    "invariants45",
    "matmul",
    "max_abs_diff",
    "orthogonality_residual",
    "pfaffian_sq_sum",
    "rotation_delta",
    "series_exp",
    "skew",
    "skew_split",
    "split_discriminant",
    "trace",
    "trace_of_product",
]
