"""Logarithms of rotations in dimensions 3, 4 and 5.

A 4x4 or 5x5 rotation R acts by angles theta_+ <= theta_- in two orthogonal
planes. With

    delta = tr(R^2)/2 - tr(R)^2/4 + (n - 4) tr(R)/2 - n (n - 6)/4
    y_+-  = (tr(R) - n + 4)/4 +- sqrt(delta)/2     (= cos theta_+-)

the generic logarithm is f = f_+ + f_- with

    f_+- = -+ theta_+- / (2 sin(theta_+-) sqrt(delta))
              * (y_-+ (R - R^t) - (R^2 - R^2t)/2).

Each bracketed combination is a multiple of a single wedge, so here it is
normalised and scaled by its angle, with sin(theta) taken from the
combination's own norm. That keeps the formula accurate when one angle is
near 0 or pi. The special cases (equal angles, an angle of 0 or pi) each get
their own outcome type; :func:`materialize` turns any outcome into one
antisymmetric logarithm.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BranchError, DimensionError, NotSimpleError, Rot345Error
from .expmap import exp_son
from .kernels import K
from .smallmat import ROTATION_TOL, as_mat, check_rotation
from .so3 import Log3Generic, Log3Identity, Log3Pi, log_so3
from .wedge import lambda_map

TAU_ANGLE = 1e-8
TAU_DELTA = 1e-8
SIMPLE_TOL = 1e-8
AXIS_MIN_ADJ = 1e-4


@dataclass(frozen=True)
class Angles45:
    """Trace-derived spectral data of a 4x4/5x5 rotation.

    Ordered so that y_plus >= y_minus, hence theta_plus <= theta_minus
    (the reverse of the ordering used by :mod:`rot345.decomp`).
    """

    delta: float
    y_plus: float
    y_minus: float
    theta_plus: float
    theta_minus: float


@dataclass(frozen=True, eq=False)
class Identity:
    n: int
    branch: str = field(default="Identity", init=False)


@dataclass(frozen=True, eq=False)
class Generic:
    """Two distinct angles in (0, pi); ``parts`` and ``thetas`` sorted by descending angle."""

    f: np.ndarray
    parts: tuple
    thetas: tuple
    branch: str = field(default="Generic", init=False)


@dataclass(frozen=True, eq=False)
class Isoclinic:
    f: np.ndarray
    theta: float
    branch: str = field(default="Isoclinic", init=False)


@dataclass(frozen=True, eq=False)
class Simple:
    f: np.ndarray
    theta: float
    branch: str = field(default="Simple", init=False)


@dataclass(frozen=True, eq=False)
class SimplePi:
    """Half-turn in one plane; ``proj2`` projects onto that plane."""

    proj2: np.ndarray
    branch: str = field(default="SimplePi", init=False)


@dataclass(frozen=True, eq=False)
class FourPlanePi:
    """R is -1 on a four-dimensional subspace with projector ``proj4``."""

    proj4: np.ndarray
    branch: str = field(default="FourPlanePi", init=False)


@dataclass(frozen=True, eq=False)
class MixedPi:
    """R = exp(f_plus) - 2 proj_minus: one angle in (0, pi), the other exactly pi."""

    f_plus: np.ndarray
    proj_minus: np.ndarray
    branch: str = field(default="MixedPi", init=False)


def _sym(a):
    return 0.5 * (a + a.T)


def log_simple(r, n=None, tol=ROTATION_TOL):
    """(theta, f) for a rotation acting in a single plane, 0 < theta < pi.

    theta = arccos((tr R - n + 2)/2), evaluated as atan2 with the sine read
    off |R - R^t|; f = theta/(2 sin theta) (R - R^t).
    """
    r = check_rotation(r, n, tol)
    n = r.shape[0]
    k = r - r.T
    c = 0.5 * (K.trace(r) - n + 2.0)
    s = 0.5 * K.half_trace_norm(k)
    if abs(s * s + c * c - 1.0) > SIMPLE_TOL:
        raise NotSimpleError("rotation does not act in a single two-plane")
    theta = math.atan2(s, c)
    if theta <= TAU_ANGLE:
        raise BranchError("rotation angle is 0; the logarithm is the zero matrix", "Identity")
    if theta >= math.pi - TAU_ANGLE:
        raise BranchError("rotation angle is pi; only the plane is determined", "SimplePi")
    return theta, (theta / (2.0 * s)) * k


def spectral_angles(r, n=None, tol=ROTATION_TOL):
    r = check_rotation(r, n, tol)
    n = r.shape[0]
    if n not in (4, 5):
        raise DimensionError("spectral_angles needs a 4x4 or 5x5 rotation")
    return _angles(r, n)


def _angles(r, n):
    delta = K.rotation_delta(r)
    sd = math.sqrt(delta)
    mid = 0.25 * (K.trace(r) - n + 4.0)
    yp = min(1.0, max(-1.0, mid + 0.5 * sd))
    ym = min(1.0, max(-1.0, mid - 0.5 * sd))
    return Angles45(delta, yp, ym, math.acos(yp), math.acos(ym))


def log45(r, n=None, tol=ROTATION_TOL):
    """Principal logarithm of a 4x4 or 5x5 rotation as a branch-tagged outcome.

    Three evaluation routes, chosen from the trace-derived cosines y_+ >= y_-:

    * y_+ + y_- >= 1 (both angles small or moderate): split the antisymmetric
      part (R - R^t)/2 into its two wedges; angles from atan2(sin, cos).
    * y_+ < 0 (both angles above pi/2): take the log of -R on the rotated
      four-space and shift it by pi.
    * otherwise: the y_+- (R - R^t) - (R^2 - R^2t)/2 combinations above.
    """
    r = check_rotation(r, n, tol)
    n = r.shape[0]
    if n == 3:
        raise DimensionError("log45 needs n in {4,5}; use log_so3 for 3x3 rotations")
    ang = _angles(r, n)
    if ang.y_plus < 0.0:
        return _log_reflected(r, n)
    if ang.y_plus + ang.y_minus >= 1.0:
        return _log_acute(r, n)
    return _log_traces(r, n, ang)


def _log_acute(r, n):
    a_mat = 0.5 * (r - r.T)  # = sin(theta_1) w_1 + sin(theta_2) w_2
    delta_a, a2, b2 = K.invariants45(a_mat)
    a, b = math.sqrt(a2), math.sqrt(b2)
    c_sum = 0.5 * (K.trace(r) - n + 4.0)  # cos(theta_1) + cos(theta_2)
    if a <= TAU_ANGLE:
        return Identity(n)
    sd_a = math.sqrt(delta_a)
    a3 = K.matmul(K.matmul(a_mat, a_mat), a_mat)
    big = -(b2 * a_mat + a3) / (sd_a * a)
    if b <= TAU_ANGLE:
        # big rather than a_mat / a: the residual second plane enters as (b/a)^3
        theta = math.atan2(a, c_sum - 1.0)
        return Simple(theta * big, theta)
    # |cos(theta_1) - cos(theta_2)| = sqrt(Delta_A) / (cos(theta_1) + cos(theta_2))
    if sd_a <= TAU_DELTA * c_sum:
        s = K.half_trace_norm(a_mat) / math.sqrt(2.0)
        theta = math.atan2(s, 0.5 * c_sum)
        return Isoclinic((theta / s) * a_mat, theta)
    small = (a2 * a_mat + a3) / (sd_a * b)
    (w_big, w_small), _ = _frame_parts([big, small], _fixed_axis(r))
    g = _sym(r) - np.eye(n)  # = -(1 - cos theta_i) on each plane
    thetas = []
    for w, s in ((w_big, a), (w_small, b)):
        c = 1.0 - 0.5 * float(np.sum(g * K.matmul(w, w)))
        thetas.append(math.atan2(s, c))
    parts = (thetas[0] * w_big, thetas[1] * w_small)
    return Generic(parts[0] + parts[1], parts, tuple(thetas))


def _obtuse_projector(r, ang, sd):
    """Projector onto the theta_- plane, for theta_- > pi/2.

    M_- fixes that plane only to eps / sin(theta_-), the symmetric part to eps:
    with C = (R + R^t)/2 - I = -alpha P_+ - beta P_-,
    P_- = (C^2 + alpha C) / (beta (beta - alpha)).
    """
    c = _sym(r) - np.eye(r.shape[0])
    alpha, beta = 1.0 - ang.y_plus, 1.0 - ang.y_minus
    return (K.matmul(c, c) + alpha * c) / (beta * sd)


def _log_traces(r, n, ang):
    sd = math.sqrt(ang.delta)
    k1 = r - r.T
    eye = np.eye(n)

    if sd <= TAU_DELTA:
        # equal angles: (R - R^t)/2 = sin(theta) (w_+ + w_-) with |w_+ + w_-| = sqrt(2)
        y = 0.5 * (ang.y_plus + ang.y_minus)
        s = K.half_trace_norm(k1) / (2.0 * math.sqrt(2.0))
        theta = math.atan2(s, y)
        return Isoclinic((theta / (2.0 * s)) * k1, theta)

    r2 = K.matmul(r, r)
    half_k2 = 0.5 * (r2 - r2.T)
    m_plus = ang.y_minus * k1 - half_k2  # = -2 sin(theta_+) sqrt(delta) w_+
    m_minus = ang.y_plus * k1 - half_k2  # = +2 sin(theta_-) sqrt(delta) w_-
    n_plus = K.half_trace_norm(m_plus)
    n_minus = K.half_trace_norm(m_minus)
    th_plus = math.atan2(n_plus / (2.0 * sd), ang.y_plus)
    th_minus = math.atan2(n_minus / (2.0 * sd), ang.y_minus)

    if th_plus >= math.pi - TAU_ANGLE:
        # would force y_- < -1
        raise Rot345Error(f"inconsistent spectral data: delta={ang.delta!r} with y_+ = -1")
    axis = _fixed_axis(r)
    if th_plus <= TAU_ANGLE:
        if th_minus <= TAU_ANGLE:
            return Identity(n)
        if th_minus >= math.pi - TAU_ANGLE:
            return SimplePi(_sym(0.5 * (eye - r)))
        if ang.y_minus < 0.0:
            u, v = plane_basis(_obtuse_projector(r, ang, sd), 2, axis)
            return Simple(th_minus * _oriented_wedge(u, v, m_minus), th_minus)
        return Simple((th_minus / n_minus) * m_minus, th_minus)
    if th_minus >= math.pi - TAU_ANGLE:
        # equals (exp(f_+) - R)/2, read off the symmetric part to full accuracy
        proj_minus = _sym(_obtuse_projector(r, ang, sd))
        u, v = plane_basis(proj_minus, 2, axis)
        (w_plus,), _ = _frame_parts([-m_plus / n_plus], axis + (u, v))
        return MixedPi(th_plus * w_plus, proj_minus)
    if ang.y_minus < 0.0:
        u, v = plane_basis(_obtuse_projector(r, ang, sd), 2, axis)
        w_minus = _oriented_wedge(u, v, m_minus)
        (w_plus,), _ = _frame_parts([-m_plus / n_plus], axis + (u, v))
    elif n_minus >= n_plus:
        # the better-determined plane (larger |M|) fixes the frame first
        (w_minus, w_plus), _ = _frame_parts([m_minus / n_minus, -m_plus / n_plus], axis)
    else:
        (w_plus, w_minus), _ = _frame_parts([-m_plus / n_plus, m_minus / n_minus], axis)
    f_plus, f_minus = th_plus * w_plus, th_minus * w_minus
    return Generic(f_plus + f_minus, (f_minus, f_plus), (th_minus, th_plus))


def _complex_structure(g):
    """J = w_a + w_b for g = a w_a + b w_b (a, b > 0), as a polynomial in g.

    J = ((a^2 + a b + b^2) g + g^3) / (a b (a + b)) commutes with g exactly.
    It depends on a, b only through a^2 + b^2 = -tr(g^2)/2 and a b (the
    Pfaffian), both well conditioned as a -> b, and needs no split of g.
    """
    g2 = K.matmul(g, g)
    s1 = -0.5 * K.trace(g2)
    p = math.sqrt(K.pfaffian_sq_sum(g))
    return ((s1 + p) * g + K.matmul(g2, g)) / (p * math.sqrt(s1 + 2.0 * p))


def _log_reflected(r, n):
    """Both angles above pi/2: log R = g - pi J with g = log S, S = -R on the four-space.

    S has angles pi - theta_+-, where the formulas are well conditioned, and J
    is the complex structure of g.
    """
    eye = np.eye(n)
    s = -r
    axis = _fixed_axis(r)
    for u0 in axis:
        s = s + 2.0 * np.outer(u0, u0)
    inner = log45(s, tol=math.inf)
    # g is small, so its rounding leaks into the axis at a relative level; the
    # pi shift would amplify that, hence frames are rebuilt orthogonal to u0
    if isinstance(inner, Identity):
        return FourPlanePi(_sym(0.5 * (eye - r)))
    if isinstance(inner, Simple):
        (w,), _ = _frame_parts([inner.f / inner.theta], axis)
        f_plus = (inner.theta - math.pi) * w
        # the pi-plane is the complement of w's plane in the rotated four-space
        proj_minus = eye + K.matmul(w, w) - sum(np.outer(u0, u0) for u0 in axis)
        return MixedPi(f_plus, _sym(proj_minus))
    if isinstance(inner, Isoclinic):
        g = inner.f
        if axis:
            proj = eye - np.outer(axis[0], axis[0])
            g = K.matmul(K.matmul(proj, g), proj)
        return Isoclinic(g - math.pi * _complex_structure(g), math.pi - inner.theta)
    if isinstance(inner, Generic):
        units, _ = _frame_parts([h / t for h, t in zip(inner.parts, inner.thetas)], axis)
        parts = [(t - math.pi) * w for w, t in zip(units, inner.thetas)]
        thetas = [math.pi - t for t in inner.thetas]
        return Generic(parts[0] + parts[1], (parts[1], parts[0]), (thetas[1], thetas[0]))
    raise Rot345Error(f"unexpected branch {inner.branch} for a rotation with angles below pi/2")


def log_son(r, tol=ROTATION_TOL):
    """Dispatch to log_so3 or log45 by dimension."""
    r = as_mat(r)
    if r.shape[0] == 3:
        return log_so3(r, tol)
    return log45(r, tol=tol)


def plane_basis(p, rank, start=()):
    """Deterministic orthonormal basis of the range of a projector ``p``.

    Column-pivoted modified Gram-Schmidt: repeatedly take the column of p with
    the largest residual norm. Each basis vector's largest-magnitude component
    is made positive. Vectors in ``start`` are projected out first and are not
    returned.
    """
    resid = np.array(p, dtype=np.float64)
    for b in start:
        resid = resid - np.outer(b, b @ resid)
    basis = []
    for _ in range(rank):
        norms = np.einsum("ij,ij->j", resid, resid)
        j = int(np.argmax(norms))
        if norms[j] <= 0.0:
            raise Rot345Error("projector has lower rank than expected")
        b = resid[:, j] / math.sqrt(norms[j])
        if b[np.argmax(np.abs(b))] < 0:
            b = -b
        basis.append(b)
        resid = resid - np.outer(b, b @ resid)
    return basis


def _oriented_wedge(u, v, w):
    """u^v or v^u, whichever has positive inner product with ``w``."""
    uv = np.outer(u, v)
    uv = uv - uv.T
    return uv if float(np.sum(uv * w)) >= 0 else -uv


def _fixed_axis(r):
    """The fixed axis of a 5x5 rotation as a 1-tuple, or () when ill-determined.

    Read off adj((R + R^t)/2 - I), which equals (1 - y_+)^2 (1 - y_-)^2 u u^t;
    skipped when that factor is below AXIS_MIN_ADJ (an angle near 0).
    """
    if r.shape[0] != 5:
        return ()
    adj = K.adjugate(_sym(r) - np.eye(5))
    if K.trace(adj) < AXIS_MIN_ADJ:
        return ()
    return tuple(plane_basis(_sym(adj), 1))


def _frame_parts(units, start=()):
    """Unit wedges on mutually orthogonal planes close to the given unit wedges.

    Each plane's basis is orthogonalised against the earlier ones, so the
    returned wedges multiply to exactly zero (to rounding). With both angles
    near pi this keeps exp(sum theta_i w_i) from amplifying small errors in
    the plane directions.
    """
    basis = list(start)
    out = []
    for w in units:
        u, v = plane_basis(-K.matmul(w, w), 2, basis)
        basis += [u, v]
        out.append(_oriented_wedge(u, v, w))
    return out, basis


def _pi_wedges(proj, rank, start=()):
    b = plane_basis(proj, rank, start)
    out = np.zeros_like(proj)
    for i in range(0, rank, 2):
        out += math.pi * (np.outer(b[i], b[i + 1]) - np.outer(b[i + 1], b[i]))
    return out


def materialize(outcome):
    """A concrete antisymmetric logarithm for any log outcome."""
    if isinstance(outcome, Identity):
        return np.zeros((outcome.n, outcome.n))
    if isinstance(outcome, Log3Identity):
        return np.zeros((3, 3))
    if isinstance(outcome, (Generic, Isoclinic, Simple, Log3Generic)):
        return outcome.f.copy()
    if isinstance(outcome, SimplePi):
        return _pi_wedges(outcome.proj2, 2)
    if isinstance(outcome, FourPlanePi):
        return _pi_wedges(outcome.proj4, 4)
    if isinstance(outcome, MixedPi):
        # the pi-plane projector is the accurately known part: it goes first
        u, v = plane_basis(outcome.proj_minus, 2)
        theta = K.half_trace_norm(outcome.f_plus)
        (unit,), _ = _frame_parts([outcome.f_plus / theta], (u, v))
        return theta * unit + math.pi * (np.outer(u, v) - np.outer(v, u))
    if isinstance(outcome, Log3Pi):
        return math.pi * lambda_map(outcome.axis)
    raise TypeError(f"not a log outcome: {outcome!r}")
