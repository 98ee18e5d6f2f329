"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Explicit bounds on the entrywise error max|T^-1 - S| of the
structured approximate inverse.

Balanced matrices, with m and M the smallest and largest
off-diagonal elements::

    |T^-1 - S| <= C(m, M, n) / (n-1)**2 + 1 / (2 m (n-1)**2)
    C(m, M, n) = (M / m**2) * (n M + (n-2) m) / (2 (n-2) m)

Dominant matrices, with M also covering the largest diagonal slack::

    |T^-1 - S| <= B**-1 * (M/m**2 + 4M/(m**2 n)) / (n-1)**2 + 1/(m n (n-1))
    B = 2(n-2)m / (nM + (n-2)m) - M/(m(n-1))
        - (n-2)Mm / (((n-2)m + M)((n-2)m + 2M))

The dominant bound holds only where B > 0, that is for large n
with M/m small relative to n.
"""

import collections

import numpy as np

from ..mtx.balanced_mtx import BalancedMatrix, DominantMatrix, extremes


class BoundError(Exception):
    pass


# a is the bound M/(m**2 (n-1)**2) on the entries of W = S(I - TS)
# and on their within-row differences.
# c_limit is the limit of c_term as n grows.
BoundReport = collections.namedtuple(
    "BoundReport", ["m", "M", "n", "c_term", "bound", "a", "c_limit"])


def error_bound(m, M, n):
    """Returns the BoundReport for balanced matrices of size n
    whose off-diagonals lie in [m, M].
    """
    _check_params(m, M, n)
    m = float(m)
    M = float(M)
    c_term = (M / m ** 2) * (n * M + (n - 2) * m) / (2 * (n - 2) * m)
    sq = float(n - 1) ** 2
    bound = c_term / sq + 1.0 / (2.0 * m * sq)
    a = M / (m ** 2 * sq)
    c_limit = M * (M + m) / (2.0 * m ** 3)
    return BoundReport(m, M, n, c_term, bound, a, c_limit)


def dominant_bracket(m, M, n):
    """Returns the bracket B of the dominant bound (positive where it applies)."""
    _check_params(m, M, n)
    m = float(m)
    M = float(M)
    return (2 * (n - 2) * m / (n * M + (n - 2) * m)
            - M / (m * (n - 1))
            - (n - 2) * M * m / (((n - 2) * m + M) * ((n - 2) * m + 2 * M)))


def dominant_error_bound(m, M, n):
    """Returns the error bound for dominant matrices.

    M must already cover the largest diagonal slack.
    Raises BoundError where the bracket is not positive.
    """
    bracket = dominant_bracket(m, M, n)
    if not bracket > 0.0:
        raise BoundError("extension bound inapplicable at this n "
                         "(n={}, m={:g}, M={:g}, bracket={:g})"
                         .format(n, m, M, bracket))
    m = float(m)
    M = float(M)
    return ((M / m ** 2 + 4 * M / (m ** 2 * n)) / (bracket * float(n - 1) ** 2)
            + 1.0 / (m * n * (n - 1)))


def bound_for(T):
    """Returns the applicable error bound for the matrix T."""
    m, M = extremes(T)
    if isinstance(T, BalancedMatrix):
        return error_bound(m, M, T.n).bound
    assert isinstance(T, DominantMatrix)
    return dominant_error_bound(m, M, T.n)


def f_lambda(lam, n, m, M):
    """Returns the contraction factor f(lambda) of the error-bound argument::

        f(l) = l M / (l M + (n-1-l) m) - (l-1) m / ((l-1) m + (n-l) M)

    f is concave on [1, n-1] with its maximum at l = n/2
    and is constant 1/(n-1) when M == m.
    """
    _check_params(m, M, n)
    if not (1.0 <= lam <= n - 1):
        raise BoundError("lambda must lie in [1, {}], got {}".format(n - 1, lam))
    m = float(m)
    M = float(M)
    lam = float(lam)
    return (lam * M / (lam * M + (n - 1 - lam) * m)
            - (lam - 1) * m / ((lam - 1) * m + (n - lam) * M))


def _check_params(m, M, n):
    if n < 3:
        raise BoundError("n must be at least 3, got {}".format(n))
    if not (0.0 < m <= M < np.inf):
        raise BoundError("bounds must satisfy 0 < m <= M, got m={}, M={}"
                         .format(m, M))
