import math

import numpy as np
import pytest
from hypothesis import settings

from rot345.oracle import random_orthogonal_wedge_pair

settings.register_profile("rot345", max_examples=200, deadline=None)
settings.load_profile("rot345")


def e(n, j):
    """1-based basis vector."""
    v = np.zeros(n)
    v[j - 1] = 1.0
    return v


def ew(n, i, j):
    """The coordinate wedge e_i ^ e_j."""
    w = np.zeros((n, n))
    w[i - 1, j - 1] = 1.0
    w[j - 1, i - 1] = -1.0
    return w


def maxdiff(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def block_generator(n, a, b, seed):
    fp, fm = random_orthogonal_wedge_pair(n, a, b, seed)
    return fp + fm


def plane_rotation(n, blocks):
    """Block-diagonal rotation; ``blocks`` maps 1-based (i, j) to an angle."""
    r = np.eye(n)
    for (i, j), t in blocks.items():
        i, j = i - 1, j - 1
        c, s = math.cos(t), math.sin(t)
        r[i, i], r[i, j], r[j, i], r[j, j] = c, s, -s, c
    return r


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[k])
