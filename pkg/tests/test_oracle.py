import math
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rot345.errors import DimensionError
from rot345.oracle import (
    random_antisym,
    random_orthogonal,
    random_orthogonal_wedge_pair,
    random_rotation,
    rng_from,
    series_exp,
)
from rot345.so3 import rotation3

from conftest import e, ew, maxdiff

dims = st.sampled_from([3, 4, 5])
seeds = st.integers(0, 2**64 - 1)


def test_series_exp_examples():
    assert maxdiff(series_exp(np.zeros((4, 4))), np.eye(4)) == 0
    # Lambda_e3 = e2^e1
    assert maxdiff(series_exp(1.1 * ew(3, 2, 1)), rotation3(1.1, e(3, 3))) <= 1e-12


@given(dims, st.floats(0.0, 4 * math.pi), seeds)
def test_series_exp_is_rotation_and_inverts(n, scale, seed):
    a = random_antisym(n, 1.0, seed)
    a *= scale / max(math.sqrt(0.5 * np.sum(a * a)), 1e-300)
    r = series_exp(a)
    assert maxdiff(r.T @ r, np.eye(n)) <= 1e-11
    assert abs(np.linalg.det(r) - 1) <= 1e-11
    assert maxdiff(r @ series_exp(-a), np.eye(n)) <= 1e-11


@given(st.sampled_from([4, 5]), st.floats(0, 4.0), st.floats(0, 4.0), seeds)
def test_series_exp_commuting_factors(n, a, b, seed):
    fp, fm = random_orthogonal_wedge_pair(n, a, b, seed)
    assert maxdiff(series_exp(fp + fm), series_exp(fp) @ series_exp(fm)) <= 1e-11


@given(dims, st.floats(0.1, 10.0), seeds)
def test_random_antisym_contract(n, scale, seed):
    a = random_antisym(n, scale, seed)
    assert not np.any(a + a.T)
    assert np.all(np.abs(a) <= scale)
    assert math.sqrt(0.5 * np.sum(a * a)) <= scale * n
    assert np.array_equal(a, random_antisym(n, scale, seed))


def test_random_antisym_rejects():
    with pytest.raises(ValueError):
        random_antisym(4, 0.0)
    with pytest.raises(DimensionError):
        random_antisym(6)
    with pytest.raises(ValueError):
        rng_from(-1)


def test_generator_accepts_rng_and_advances():
    g = rng_from(5)
    a, b = random_antisym(4, 1.0, g), random_antisym(4, 1.0, g)
    assert not np.array_equal(a, b)
    assert np.array_equal(a, random_antisym(4, 1.0, 5))


@given(dims, seeds)
def test_random_rotation_contract(n, seed):
    r = random_rotation(n, seed)
    assert maxdiff(r.T @ r, np.eye(n)) <= 1e-11
    assert abs(np.linalg.det(r) - 1) <= 1e-11


def test_random_rotation_covers_both_extremes():
    angles = []
    for seed in range(10_000):
        r = random_rotation(3, seed)
        angles.append(math.acos(max(-1.0, min(1.0, 0.5 * (np.trace(r) - 1)))))
    assert min(angles) < 0.2 and max(angles) > math.pi - 0.2


@given(dims, seeds)
def test_random_orthogonal(n, seed):
    q = random_orthogonal(n, seed)
    assert maxdiff(q.T @ q, np.eye(n)) <= 1e-12


def test_wedge_pair_examples():
    fp, fm = random_orthogonal_wedge_pair(4, 1.0, 0.0, 9)
    assert not np.any(fm)
    assert abs(math.sqrt(0.5 * np.sum(fp * fp)) - 1.0) <= 1e-12
    with pytest.raises(DimensionError):
        random_orthogonal_wedge_pair(3, 1.0, 1.0)
    with pytest.raises(ValueError):
        random_orthogonal_wedge_pair(4, -1.0, 1.0)


@given(st.sampled_from([4, 5]), st.floats(0, 4.0), st.floats(0, 4.0), seeds)
def test_wedge_pair_orthogonal(n, a, b, seed):
    fp, fm = random_orthogonal_wedge_pair(n, a, b, seed)
    assert maxdiff(fp @ fm, 0) <= 1e-12


def test_determinism_across_processes():
    code = "from rot345.oracle import random_antisym; print(random_antisym(5, 2.0, 77).tobytes().hex())"
    runs = [subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] == random_antisym(5, 2.0, 77).tobytes().hex() + "\n"
