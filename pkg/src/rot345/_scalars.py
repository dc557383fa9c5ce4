"""Scalar helpers shared by both kernel backends.

Plain ``math`` code. ``register_jitable`` leaves them ordinary Python
functions while letting compiled kernels call them.
"""

import math

try:
    from numba.extending import register_jitable as _jitable
except ImportError:  # pragma: no cover - numba is optional

    def _jitable(fn):
        return fn


@_jitable
def sinc(x):
    """sin(x)/x, equal to 1 at x = 0."""
    if x == 0.0:
        return 1.0
    return math.sin(x) / x


@_jitable
def versinc(x):
    """(1 - cos x)/x**2 via the half-angle form, equal to 1/2 at x = 0."""
    h = 0.5 * x
    s = sinc(h)
    return 0.5 * s * s


@_jitable
def exp45_coefficients(theta_plus, theta_minus):
    """Coefficients A, B, C, D of the two-plane exponential polynomial.

    Undivided by sqrt(Delta); the caller scales by 1/sqrt(Delta).
    """
    tp2 = theta_plus * theta_plus
    tm2 = theta_minus * theta_minus
    sp = sinc(theta_plus)
    sm = sinc(theta_minus)
    vp = versinc(theta_plus)
    vm = versinc(theta_minus)
    a = tp2 * sm - tm2 * sp
    b = tp2 * vm - tm2 * vp
    c = sm - sp
    d = vm - vp
    return a, b, c, d


@_jitable
def squared_angles(tr2, delta, sigma2):
    """(theta_plus**2, theta_minus**2) from tr(f^2), Delta and theta_+^2 theta_-^2.

    The smaller root comes from the product of roots so it keeps full
    relative accuracy when theta_minus << theta_plus.
    """
    tp2 = -0.25 * tr2 + 0.5 * math.sqrt(delta)
    if tp2 <= 0.0:
        return 0.0, 0.0
    tm2 = sigma2 / tp2
    if tm2 < 0.0:
        tm2 = 0.0
    elif tm2 > tp2:
        tm2 = tp2
    return tp2, tm2


# class codes shared by the kernels and decomp
ZERO = 0
SIMPLE = 1
ISOCLINIC = 2
GENERIC = 3


@_jitable
def classify_code(theta_minus, sqrt_delta, f_norm, tau_zero, tau_iso):
    if f_norm <= tau_zero:
        return ZERO
    if theta_minus <= tau_zero * max(1.0, f_norm):
        return SIMPLE
    if sqrt_delta <= tau_iso * max(1.0, f_norm * f_norm):
        return ISOCLINIC
    return GENERIC
