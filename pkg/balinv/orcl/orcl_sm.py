"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Closed-form inverse of the worst-case family by the Sherman-Morrison formula.

The worst-case matrix is m * ones + diag(a, ..., a, b) with
a = (n-1)M - m and b = (n-2)m, so with::

    den = 1 + (n-1)m / a + 1/(n-2)

its inverse is::

    inv[i,j] = delta[i,j] / a - m / (a**2 den)             i, j < n
    inv[n,j] = -1 / ((n-2) a den)                           j < n
    inv[n,n] = 1 / ((n-2) m) - 1 / ((n-2)**2 m den)

The closed form is a cross-check only; the dense factorization
is the ground truth and any disagreement is reported, not patched.
"""

import collections
import logging

import numpy as np

from ..mtx.mtx_gen import worst_case_family
from .orcl_dense import OracleError, exact_inverse, sup_norm


# Agreement tolerance, relative to the sup norm of the inverse
SM_REL_TOL = 1e-9

SmInverse = collections.namedtuple(
    "SmInverse", ["inverse", "agrees", "max_rel_diff"])


def sherman_morrison_inverse(n, m, M):
    """Returns the SmInverse of worst_case_family(n, m, M):
    the closed-form inverse and its agreement with the dense oracle.
    """
    if n < 4:
        raise OracleError("worst-case family requires n >= 4, got {}"
                          .format(n))
    if not (0.0 < m <= M < np.inf):
        raise OracleError("bounds must satisfy 0 < m <= M, got m={}, M={}"
                          .format(m, M))
    m = float(m)
    M = float(M)
    a = (n - 1) * M - m
    den = 1.0 + (n - 1) * m / a + 1.0 / (n - 2)

    inv = np.full((n, n), -m / (a ** 2 * den))
    inv[np.diag_indices(n - 1)] += 1.0 / a
    inv[-1, :-1] = -1.0 / ((n - 2) * a * den)
    inv[:-1, -1] = inv[-1, :-1]
    inv[-1, -1] = 1.0 / ((n - 2) * m) - 1.0 / ((n - 2) ** 2 * m * den)

    oracle = exact_inverse(worst_case_family(n, m, M))
    max_rel_diff = sup_norm(inv - oracle) / sup_norm(oracle)
    agrees = max_rel_diff <= SM_REL_TOL
    if not agrees:
        logging.warning("ORCL:sherman_morrison n={} m={:g} M={:g} "
                        "disagrees with dense oracle by {:g}"
                        .format(n, m, M, max_rel_diff))
    return SmInverse(inv, agrees, max_rel_diff)


def worst_case_limit(m, M):
    """Returns the limit of (n-1)**2 * max|T^-1 - S| on the worst-case family.

    It is reached on the light (last) diagonal element,
    tends to 1/m as M/m grows and equals 3/(2m) when M == m.
    """
    if not (0.0 < m <= M < np.inf):
        raise OracleError("bounds must satisfy 0 < m <= M, got m={}, M={}"
                          .format(m, M))
    return (M + 2.0 * m) / (m * (M + m))
