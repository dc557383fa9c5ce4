"""Reference exponential and seeded random inputs for testing.

Random draws use numpy's PCG64 bit generator (``numpy.random.Generator``),
a fixed, documented 128-bit-state generator. A ``seed`` argument may be a
non-negative integer, which starts a fresh stream, or an existing
``Generator``, which is advanced in place. Draw order within each function
is fixed, so identical seeds give identical outputs.
"""

import math

import numpy as np

from .errors import DimensionError
from .kernels import K
from .smallmat import DIMENSIONS, as_mat

SERIES_TERMS = 20
UNIFORM_SUM = 4  # uniforms summed per entry of the matrix fed to Gram-Schmidt


def rng_from(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.Generator(np.random.PCG64(seed))


def series_exp(a):
    """exp(A) from the first 20 Taylor terms of A / 2^s, squared s times.

    s is the smallest power making the max-abs row sum of A / 2^s at most 0.5.
    """
    return K.series_exp(as_mat(a), SERIES_TERMS)


def _dim(n):
    if n not in DIMENSIONS:
        raise DimensionError(f"unsupported dimension {n}")


def random_antisym(n, scale=1.0, seed=0):
    """Antisymmetric matrix with entries above the diagonal uniform in [-scale, scale]."""
    _dim(n)
    if not scale > 0:
        raise ValueError("scale must be positive")
    rng = rng_from(seed)
    iu = np.triu_indices(n, 1)
    a = np.zeros((n, n))
    a[iu] = scale * (2.0 * rng.random(len(iu[0])) - 1.0)
    return a - a.T


def random_rotation(n, seed=0):
    return series_exp(random_antisym(n, math.pi, seed))


def random_orthogonal(n, seed=0):
    """Orthogonal matrix from modified Gram-Schmidt on columns of summed uniforms.

    Columns are processed left to right; a column whose residual falls below
    1e-6 (vanishingly rare) is replaced by a fresh draw.
    """
    _dim(n)
    rng = rng_from(seed)
    q = np.zeros((n, n))
    j = 0
    while j < n:
        v = rng.random((n, UNIFORM_SUM)).sum(axis=1) - 0.5 * UNIFORM_SUM
        for i in range(j):
            v = v - (q[:, i] @ v) * q[:, i]
        nv = math.sqrt(float(v @ v))
        if nv < 1e-6:
            continue
        q[:, j] = v / nv
        j += 1
    return q


def random_orthogonal_wedge_pair(n, a, b, seed=0):
    """a (Qe1)^(Qe2) and b (Qe3)^(Qe4) for a random orthogonal Q."""
    if n not in (4, 5):
        raise DimensionError("random_orthogonal_wedge_pair needs n in {4,5}")
    if a < 0 or b < 0:
        raise ValueError("angles must be non-negative")
    q = random_orthogonal(n, seed)
    w1 = np.outer(q[:, 0], q[:, 1])
    w2 = np.outer(q[:, 2], q[:, 3])
    return a * (w1 - w1.T), b * (w2 - w2.T)
