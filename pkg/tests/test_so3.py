import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from rot345.errors import BranchError, NotAntisymmetricError, NotRotationError
from rot345.logmap import materialize
from rot345.oracle import random_antisym, series_exp
from rot345.so3 import angle_of, axis_of, exp_so3, log_so3, rodrigues_apply, rotation3
from rot345.wedge import lambda_map

from conftest import e, maxdiff

vec3 = arrays(np.float64, 3, elements=st.floats(-1.0, 1.0, allow_nan=False))
angle = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False)
inner = st.floats(0.01, math.pi - 0.01)


@st.composite
def unit3(draw):
    u = draw(vec3)
    nu = np.linalg.norm(u)
    assume(nu > 0.1)
    return u / nu


def test_rodrigues_examples():
    u = np.array([0.0, 0.6, 0.8])
    assert maxdiff(rodrigues_apply(1.3, u, u), u) < 1e-15
    assert maxdiff(rodrigues_apply(math.pi / 2, e(3, 3), e(3, 1)), e(3, 2)) < 1e-15
    with pytest.raises(ValueError):
        rodrigues_apply(1.0, [1.0, 1.0, 0.0], e(3, 1))


def test_rotation3_examples():
    u = np.array([0.0, 0.6, 0.8])
    assert maxdiff(rotation3(0.0, u), np.eye(3)) == 0
    quarter = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    assert maxdiff(rotation3(math.pi / 2, e(3, 3)), quarter) < 1e-15
    assert maxdiff(rotation3(math.pi, e(3, 1)), np.diag([1.0, -1.0, -1.0])) < 1e-15


def test_exp_so3_examples():
    assert maxdiff(exp_so3(np.zeros((3, 3))), np.eye(3)) == 0
    assert maxdiff(exp_so3(math.pi / 2 * lambda_map(e(3, 3))), rotation3(math.pi / 2, e(3, 3))) < 1e-15
    with pytest.raises(NotAntisymmetricError):
        exp_so3(np.eye(3))


def test_angle_and_axis_examples():
    assert angle_of(np.eye(3)) == 0
    assert angle_of(np.diag([1.0, -1.0, -1.0])) == pytest.approx(math.pi)
    assert maxdiff(axis_of(rotation3(math.pi / 2, e(3, 3)), math.pi / 2), e(3, 3)) < 1e-15
    with pytest.raises(BranchError) as info:
        axis_of(np.eye(3), 0.0)
    assert info.value.branch == "Identity"
    with pytest.raises(NotRotationError):
        angle_of(np.diag([1.0, 1.0, -1.0]))


def test_log_so3_special_branches():
    assert log_so3(np.eye(3)).branch == "Identity"
    out = log_so3(np.diag([1.0, -1.0, -1.0]))
    assert out.branch == "Pi"
    assert maxdiff(out.proj, np.diag([1.0, 0.0, 0.0])) < 1e-15
    assert maxdiff(out.axis, e(3, 1)) < 1e-15
    assert maxdiff(exp_so3(materialize(out)), np.diag([1.0, -1.0, -1.0])) < 1e-15


@pytest.mark.parametrize("seed", range(20))
def test_exp_so3_matches_series(seed):
    a = random_antisym(3, 2.0, seed)
    assert maxdiff(exp_so3(a), series_exp(a)) <= 1e-10


@given(angle, unit3(), vec3)
def test_rodrigues_matches_matrix_form(theta, u, v):
    assert maxdiff(rotation3(theta, u) @ v, rodrigues_apply(theta, u, v)) <= 1e-12


@given(angle, unit3())
def test_exp_so3_rearranged_form(theta, u):
    expected = np.eye(3) + (math.cos(theta) - 1) * (np.eye(3) - np.outer(u, u)) + math.sin(theta) * lambda_map(u)
    r = exp_so3(theta * lambda_map(u))
    assert maxdiff(r, expected) <= 1e-12
    assert maxdiff(r.T @ r, np.eye(3)) <= 1e-12
    assert abs(np.linalg.det(r) - 1) <= 1e-12


@given(inner, unit3())
def test_extraction_round_trip(theta, u):
    r = rotation3(theta, u)
    assert abs(angle_of(r) - theta) <= 1e-9
    assert maxdiff(axis_of(r, theta), u) <= 1e-9
    out = log_so3(r)
    assert out.branch == "Generic"
    assert abs(out.axis_angle.theta - theta) <= 1e-9
    assert maxdiff(out.axis_angle.axis, u) <= 1e-9
    assert maxdiff(exp_so3(materialize(out)), r) <= 1e-9


@given(st.floats(math.pi + 0.01, 2 * math.pi - 0.01), unit3())
def test_angle_beyond_pi_flips_axis(theta, u):
    out = log_so3(rotation3(theta, u))
    assert abs(out.axis_angle.theta - (2 * math.pi - theta)) <= 1e-9
    assert maxdiff(out.axis_angle.axis, -u) <= 1e-9


@given(st.floats(0.0, math.pi), unit3(), arrays(np.float64, (3, 3), elements=st.floats(-1e-10, 1e-10)))
def test_angle_of_clamps_noise(theta, u, noise):
    a = angle_of(rotation3(theta, u) + noise)
    assert 0.0 <= a <= math.pi


@given(unit3())
def test_log_half_turn_axis_up_to_sign(u):
    out = log_so3(rotation3(math.pi, u))
    assert out.branch == "Pi"
    assert abs(abs(out.axis @ u) - 1) <= 1e-9
    assert abs(np.trace(out.proj) - 1) <= 1e-9
    assert maxdiff(out.proj @ out.proj, out.proj) <= 1e-9
