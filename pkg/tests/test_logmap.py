import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from rot345.errors import BranchError, DimensionError, NotRotationError, NotSimpleError
from rot345.expmap import exp_simple, exp_son
from rot345.logmap import (
    FourPlanePi,
    Generic,
    Identity,
    MixedPi,
    SimplePi,
    log45,
    log_simple,
    log_son,
    materialize,
    spectral_angles,
)
from rot345.oracle import random_antisym, random_orthogonal, random_orthogonal_wedge_pair, series_exp
from rot345.so3 import log_so3

from conftest import ew, maxdiff, plane_rotation

dim45 = st.sampled_from([4, 5])
seeds = st.integers(0, 2**32)
inner = st.floats(0.1, math.pi - 0.1)


def conj(q, r):
    return q @ r @ q.T


def check_payload(out, r):
    n = r.shape[0]
    if isinstance(out, (SimplePi, FourPlanePi)):
        p, rank = (out.proj2, 2) if isinstance(out, SimplePi) else (out.proj4, 4)
        assert maxdiff(p, p.T) <= 1e-9
        assert maxdiff(p @ p, p) <= 1e-9
        assert abs(np.trace(p) - rank) <= 1e-9
    if isinstance(out, MixedPi):
        assert maxdiff(exp_son(out.f_plus) - 2 * out.proj_minus, r) <= 1e-9
    g = materialize(out)
    assert maxdiff(g, -g.T) <= 1e-10
    assert maxdiff(exp_son(g), r) <= 1e-8
    assert g.shape == (n, n)


def test_log_simple_examples():
    r = exp_simple(0.7 * ew(5, 1, 2))
    theta, f = log_simple(r)
    assert theta == pytest.approx(0.7, abs=1e-10)
    assert maxdiff(f, 0.7 * ew(5, 1, 2)) <= 1e-10
    with pytest.raises(BranchError) as info:
        log_simple(np.eye(4))
    assert info.value.branch == "Identity"
    with pytest.raises(BranchError) as info:
        log_simple(plane_rotation(4, {(1, 2): math.pi}))
    assert info.value.branch == "SimplePi"
    with pytest.raises(NotSimpleError):
        log_simple(plane_rotation(4, {(1, 2): 0.5, (3, 4): 1.2}))


@given(inner, st.integers(0, 2**32))
def test_log_simple_agrees_with_log_so3(theta, seed):
    q = random_orthogonal(3, seed)
    r = conj(q, plane_rotation(3, {(1, 2): theta}))
    t, f = log_simple(r)
    out = log_so3(r)
    assert abs(t - out.axis_angle.theta) <= 1e-12
    assert maxdiff(f, out.f) <= 1e-12


def test_spectral_angles_examples():
    for n in (4, 5):
        a = spectral_angles(np.eye(n))
        assert (a.delta, a.y_plus, a.y_minus) == (0.0, 1.0, 1.0)
    a = spectral_angles(exp_son(0.5 * ew(4, 1, 2) + 1.2 * ew(4, 3, 4)))
    assert a.y_plus == pytest.approx(math.cos(0.5), abs=1e-10)
    assert a.y_minus == pytest.approx(math.cos(1.2), abs=1e-10)
    with pytest.raises(DimensionError):
        spectral_angles(np.eye(3))


@given(dim45, st.floats(0.0, math.pi), st.floats(0.0, math.pi), seeds)
def test_spectral_angles_trace_identities(n, a, b, seed):
    r = series_exp(sum(random_orthogonal_wedge_pair(n, a, b, seed)))
    ang = spectral_angles(r)
    assert ang.y_plus >= ang.y_minus
    assert abs(ang.y_plus - math.cos(min(a, b))) <= 1e-7
    assert abs(ang.delta - (ang.y_plus - ang.y_minus) ** 2) <= 1e-9
    assert abs(np.trace(r) - (2 * ang.y_plus + 2 * ang.y_minus + n - 4)) <= 1e-10
    assert abs(np.trace(r @ r) - (4 * ang.y_plus**2 + 4 * ang.y_minus**2 + n - 8)) <= 1e-9


@given(dim45, seeds, arrays(np.float64, (5, 5), elements=st.floats(-1e-10, 1e-10)))
def test_spectral_angles_clamped_under_noise(n, seed, noise):
    r = series_exp(random_antisym(n, math.pi, seed)) + noise[:n, :n]
    try:
        ang = spectral_angles(r)
    except NotRotationError:
        assume(False)
    assert ang.delta >= 0
    assert -1 <= ang.y_minus <= ang.y_plus <= 1
    assert 0 <= ang.theta_plus <= ang.theta_minus <= math.pi


def test_log45_rejects_3x3():
    with pytest.raises(DimensionError):
        log45(np.eye(3))


@pytest.mark.parametrize("n", [4, 5])
def test_log45_identity(n):
    out = log45(np.eye(n))
    assert isinstance(out, Identity)
    assert not np.any(materialize(out))


def test_log45_generic_example():
    fp, fm = 1.2 * ew(4, 3, 4), 0.5 * ew(4, 1, 2)
    out = log45(series_exp(fp + fm))
    assert isinstance(out, Generic)
    assert maxdiff(out.parts[0], fp) <= 1e-9
    assert maxdiff(out.parts[1], fm) <= 1e-9
    assert out.thetas[0] == pytest.approx(1.2, abs=1e-9)


def test_log45_mixed_example():
    r = series_exp(1.0 * ew(4, 1, 2) + math.pi * ew(4, 3, 4))
    out = log45(r)
    assert isinstance(out, MixedPi)
    assert maxdiff(out.f_plus, ew(4, 1, 2)) <= 1e-8
    assert maxdiff(out.proj_minus, np.diag([0.0, 0, 1, 1])) <= 1e-8
    check_payload(out, r)


def test_log45_four_plane_and_simple_pi():
    out = log45(-np.eye(4))
    assert out.branch == "FourPlanePi"
    assert maxdiff(out.proj4, np.eye(4)) <= 1e-12
    q = random_orthogonal(5, 3)
    r = conj(q, np.diag([-1.0, -1, -1, -1, 1]))
    out = log45(r)
    assert out.branch == "FourPlanePi"
    check_payload(out, r)
    r = conj(q, plane_rotation(5, {(2, 4): math.pi}))
    out = log45(r)
    assert out.branch == "SimplePi"
    check_payload(out, r)


def test_materialize_simple_pi_coordinate_plane():
    g = materialize(SimplePi(np.diag([1.0, 1, 0, 0])))
    assert maxdiff(abs(g), math.pi * abs(ew(4, 1, 2))) <= 1e-15


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("t", [0.3, math.pi / 2, 2.9, math.pi])
def test_log45_isoclinic_fixtures(n, t):
    r = series_exp(sum(random_orthogonal_wedge_pair(n, t, t, 11)))
    out = log45(r)
    assert out.branch == ("FourPlanePi" if t == math.pi else "Isoclinic")
    check_payload(out, r)


@given(dim45, inner, inner, seeds)
def test_log45_generic_round_trip(n, a, b, seed):
    assume(abs(a - b) >= 0.05)
    f = sum(random_orthogonal_wedge_pair(n, a, b, seed))
    r = series_exp(f)
    out = log45(r)
    assert isinstance(out, Generic)
    assert maxdiff(out.f, f) <= 1e-9
    check_payload(out, r)


@given(dim45, st.floats(0.0, math.pi), st.sampled_from([0.0, math.pi]), seeds)
def test_log45_pi_constructions(n, a, b, seed):
    r = series_exp(sum(random_orthogonal_wedge_pair(n, a, b, seed)))
    check_payload(log45(r), r)


@given(dim45, seeds)
def test_log45_random_rotations(n, seed):
    r = series_exp(random_antisym(n, math.pi, seed))
    check_payload(log45(r), r)


@given(dim45, st.floats(0.0, math.pi), seeds)
def test_log45_simple_round_trip(n, t, seed):
    r = series_exp(random_orthogonal_wedge_pair(n, t, 0.0, seed)[0])
    check_payload(log45(r), r)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_log_son_dispatch(n):
    r = series_exp(random_antisym(n, 1.0, n))
    assert maxdiff(exp_son(materialize(log_son(r))), r) <= 1e-9
