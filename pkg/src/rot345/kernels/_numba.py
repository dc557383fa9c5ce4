"""numba backend: explicit loops over the tiny fixed-size operands.

Mirrors :mod:`rot345.kernels._numpy` function for function; the test suite
checks the two agree.
"""

import math

import numba
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

_opts = dict(nogil=True, cache=True, fastmath=False, error_model="python")

SERIES_TERMS = 20

_DROP5 = np.array([[j for j in range(5) if j != i] for i in range(5)], dtype=np.int64)


@numba.njit(**_opts)
def matmul(a, b):
    n = a.shape[0]
    c = np.zeros((n, n))
    for i in range(n):
        for k in range(n):
            aik = a[i, k]
            for j in range(n):
                c[i, j] += aik * b[k, j]
    return c


@numba.njit(**_opts)
def trace(a):
    s = 0.0
    for i in range(a.shape[0]):
        s += a[i, i]
    return s


@numba.njit(**_opts)
def trace_of_product(a, b):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            s += a[i, j] * b[j, i]
    return s


@numba.njit(**_opts)
def skew(a):
    n = a.shape[0]
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = 0.5 * (a[i, j] - a[j, i])
    return out


@numba.njit(**_opts)
def skew_split(a):
    """(a - a^t)/2, max |a + a^t| and max |a_ij| in one pass; NaN propagates to the max."""
    n = a.shape[0]
    out = np.empty((n, n))
    resid = 0.0
    amax = 0.0
    for i in range(n):
        for j in range(n):
            x = a[i, j]
            y = a[j, i]
            out[i, j] = 0.5 * (x - y)
            d = abs(x + y)
            if not d <= resid:
                resid = d
            d = abs(x)
            if not d <= amax:
                amax = d
    return out, resid, amax


@numba.njit(**_opts)
def _sumsq(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            s += a[i, j] * a[i, j]
    return s


@numba.njit(**_opts)
def half_trace_norm(a):
    s = _sumsq(a)
    if 1e-280 < s < 1e280:
        return math.sqrt(0.5 * s)
    # squares under- or overflowed: rescale by the largest entry
    m = np.max(np.abs(a))
    if m == 0.0 or not math.isfinite(m):
        return m
    return m * math.sqrt(0.5 * _sumsq(a / m))


@numba.njit(**_opts)
def max_abs_diff(a, b):
    n = a.shape[0]
    m = 0.0
    for i in range(n):
        for j in range(n):
            d = abs(a[i, j] - b[i, j])
            if d > m:
                m = d
    return m


@numba.njit(**_opts)
def orthogonality_residual(r):
    n = r.shape[0]
    m = 0.0
    for i in range(n):
        for j in range(n):
            s = 0.0
            for k in range(n):
                s += r[k, i] * r[k, j]
            if i == j:
                s -= 1.0
            if abs(s) > m:
                m = abs(s)
    return m


@numba.njit(**_opts)
def _pf4(f, i, j, k, l):
    return f[i, j] * f[k, l] - f[i, k] * f[j, l] + f[i, l] * f[j, k]


@numba.njit(**_opts)
def pfaffian_sq_sum(f):
    if f.shape[0] == 4:
        p = _pf4(f, 0, 1, 2, 3)
        return p * p
    total = 0.0
    for r in range(5):
        p = _pf4(f, _DROP5[r, 0], _DROP5[r, 1], _DROP5[r, 2], _DROP5[r, 3])
        total += p * p
    return total


@numba.njit(**_opts)
def _det4(m):
    # Laplace expansion along the first two rows
    s0 = m[0, 0] * m[1, 1] - m[1, 0] * m[0, 1]
    s1 = m[0, 0] * m[1, 2] - m[1, 0] * m[0, 2]
    s2 = m[0, 0] * m[1, 3] - m[1, 0] * m[0, 3]
    s3 = m[0, 1] * m[1, 2] - m[1, 1] * m[0, 2]
    s4 = m[0, 1] * m[1, 3] - m[1, 1] * m[0, 3]
    s5 = m[0, 2] * m[1, 3] - m[1, 2] * m[0, 3]
    c5 = m[2, 2] * m[3, 3] - m[3, 2] * m[2, 3]
    c4 = m[2, 1] * m[3, 3] - m[3, 1] * m[2, 3]
    c3 = m[2, 1] * m[3, 2] - m[3, 1] * m[2, 2]
    c2 = m[2, 0] * m[3, 3] - m[3, 0] * m[2, 3]
    c1 = m[2, 0] * m[3, 2] - m[3, 0] * m[2, 2]
    c0 = m[2, 0] * m[3, 1] - m[3, 0] * m[2, 1]
    return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0


@numba.njit(**_opts)
def _det3(m):
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


@numba.njit(**_opts)
def adjugate(g):
    n = g.shape[0]
    adj = np.empty((n, n))
    minor = np.empty((n - 1, n - 1))
    for i in range(n):
        for j in range(n):
            # minor with row j and column i removed
            r = 0
            for p in range(n):
                if p == j:
                    continue
                c = 0
                for q in range(n):
                    if q == i:
                        continue
                    minor[r, c] = g[p, q]
                    c += 1
                r += 1
            if n == 5:
                d = _det4(minor)
            elif n == 4:
                d = _det3(minor)
            else:
                d = minor[0, 0] * minor[1, 1] - minor[0, 1] * minor[1, 0]
            adj[i, j] = d if (i + j) % 2 == 0 else -d
    return adj


@numba.njit(**_opts)
def split_discriminant(g):
    n = g.shape[0]
    t = trace(g)
    c = 0.25 * t
    h = np.empty((n, n))
    if n == 4:
        for i in range(n):
            for j in range(n):
                h[i, j] = g[i, j] - c if i == j else g[i, j]
        return _sumsq(h)
    adj = adjugate(g)
    ta = trace(adj)
    if not ta > 1e-8 * c**4:
        return trace_of_product(g, g) - 0.25 * t * t
    for i in range(n):
        for j in range(n):
            h[i, j] = g[i, j] + c * adj[i, j] / ta
            if i == j:
                h[i, j] -= c
    return _sumsq(h)


@numba.njit(**_opts)
def _refine(delta, g, mean_root):
    if delta <= mean_root * mean_root:
        delta = split_discriminant(g)
    return max(delta, 0.0)


@numba.njit(**_opts)
def invariants45(f):
    f2 = matmul(f, f)
    tr2 = trace(f2)
    tr4 = trace_of_product(f2, f2)
    delta = _refine(tr4 - 0.25 * tr2 * tr2, f2, -0.25 * tr2)
    tp2, tm2 = squared_angles(tr2, delta, pfaffian_sq_sum(f))
    return delta, tp2, tm2


@numba.njit(**_opts)
def rotation_delta(r):
    n = r.shape[0]
    t1 = trace(r)
    t2 = trace_of_product(r, r)
    delta = 0.5 * t2 - 0.25 * t1 * t1 + 0.5 * (n - 4) * t1 - 0.25 * n * (n - 6)
    g = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            g[i, j] = 0.5 * (r[i, j] + r[j, i])
        g[i, i] -= 1.0
    # the literal value carries ~1e-15 absolute rounding; refine below 1e-8 too
    return _refine(delta, g, max(0.25 * (n - t1), 1e-4))


@numba.njit(**_opts)
def _poly(f, c1, f2, c2):
    n = f.shape[0]
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = c1 * f[i, j] + c2 * f2[i, j]
        out[i, i] += 1.0
    return out


@numba.njit(**_opts)
def exp_rank2(f, theta):
    return _poly(f, sinc(theta), matmul(f, f), versinc(theta))


@numba.njit(**_opts)
def exp45(f, tau_zero, tau_iso):
    n = f.shape[0]
    f2 = matmul(f, f)
    tr2 = trace(f2)
    tr4 = trace_of_product(f2, f2)
    delta = _refine(tr4 - 0.25 * tr2 * tr2, f2, -0.25 * tr2)
    tp2, tm2 = squared_angles(tr2, delta, pfaffian_sq_sum(f))
    f_norm = math.sqrt(max(-0.5 * tr2, 0.0))
    sd = math.sqrt(delta)
    code = classify_code(math.sqrt(tm2), sd, f_norm, tau_zero, tau_iso)
    if code == ZERO:
        r = _poly(f, 1.0, f2, 0.5)
    elif code == SIMPLE:
        r = _poly(f, sinc(f_norm), f2, versinc(f_norm))
    elif code == ISOCLINIC:
        tp = math.sqrt(tp2)
        r = _poly(f, sinc(tp), f2, versinc(tp))
    else:
        a, b, c, d = exp45_coefficients(math.sqrt(tp2), math.sqrt(tm2))
        f3 = matmul(f2, f)
        f4 = matmul(f2, f2)
        r = np.empty((n, n))
        inv = 1.0 / sd
        for i in range(n):
            for j in range(n):
                r[i, j] = inv * (a * f[i, j] + b * f2[i, j] + c * f3[i, j] + d * f4[i, j])
            r[i, i] += 1.0
    return r, code, delta, tp2, tm2


@numba.njit(**_opts)
def exp3(a, tau_zero):
    theta = half_trace_norm(a)
    a2 = matmul(a, a)
    if theta <= tau_zero:
        return _poly(a, 1.0, a2, 0.5)
    return _poly(a, sinc(theta), a2, versinc(theta))


@numba.njit(**_opts)
def series_exp(a, terms=SERIES_TERMS):
    n = a.shape[0]
    norm = 0.0
    for i in range(n):
        row = 0.0
        for j in range(n):
            row += abs(a[i, j])
        if row > norm:
            norm = row
    s = 0
    while norm > 0.5:
        norm *= 0.5
        s += 1
    scale = 2.0 ** (-s)
    b = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            b[i, j] = a[i, j] * scale
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, terms):
        term = matmul(term, b)
        inv_k = 1.0 / k
        for i in range(n):
            for j in range(n):
                term[i, j] *= inv_k
                result[i, j] += term[i, j]
    for _ in range(s):
        result = matmul(result, result)
    return result
