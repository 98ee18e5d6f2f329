"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Generators for the matrix families studied here:
random balanced matrices with elements in [m, M],
random dominant matrices with small slacks,
and the worst-case family that shows the 1/(n-1)**2 rate is sharp.

Random generators take a seed that is anything
numpy.random.default_rng() accepts (an int, a SeedSequence
or a Generator), so results are deterministic per seed.
"""

import numpy as np

from .balanced_mtx import MatrixError, BalancedMatrix, DominantMatrix


def random_balanced(n, m, M, seed=None):
    """Returns a BalancedMatrix whose off-diagonal elements
    are independent and uniform on [m, M].
    """
    _check_bounds(m, M)
    rng = np.random.default_rng(seed)
    cnt = n * (n - 1) // 2
    if m == M:
        entries = np.full(cnt, float(m))
    else:
        entries = rng.uniform(m, M, size=cnt)
    return BalancedMatrix(n, entries)


def random_dominant(n, m, M, max_slack, seed=None):
    """Returns a DominantMatrix with off-diagonals uniform on [m, M]
    and slacks uniform on [0, max_slack].
    """
    _check_bounds(m, M)
    if not max_slack >= 0.0:
        raise MatrixError("max_slack must be nonnegative")
    rng = np.random.default_rng(seed)
    cnt = n * (n - 1) // 2
    entries = rng.uniform(m, M, size=cnt)
    slacks = rng.uniform(0.0, max_slack, size=n)
    return DominantMatrix(n, entries, slacks)


def worst_case_family(n, m, M):
    """Returns the worst-case matrix::

        t[i,j] = m              i != j
        t[i,i] = (n-1) * M      i < n
        t[n,n] = (n-1) * m

    Its rows 1..n-1 exceed their off-diagonal sums when M > m,
    so it is a DominantMatrix with slack (n-1)(M-m) on those rows.
    """
    if n < 4:
        raise MatrixError("worst-case family requires n >= 4, got {}"
                          .format(n))
    _check_bounds(m, M)
    entries = np.full(n * (n - 1) // 2, float(m))
    slacks = np.full(n, (n - 1) * (float(M) - float(m)))
    slacks[-1] = 0.0
    return DominantMatrix(n, entries, slacks)


def _check_bounds(m, M):
    if not (0.0 < m <= M < np.inf):
        raise MatrixError("bounds must satisfy 0 < m <= M, got m={}, M={}"
                          .format(m, M))
