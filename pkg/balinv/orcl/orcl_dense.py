"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Dense ground truth for the approximate inverse.

The exact inverse comes from a Cholesky factorization (T is symmetric
positive definite) and is symmetrized before any differencing.
The error metric is the entrywise sup norm max|a[i,j]|.

Dense oracles are for desk-scale sizes only (n <= MAX_DIM);
larger problems use the O(n) apply paths.
"""

import collections
import logging

import numpy as np
import scipy.linalg

from ..mtx.balanced_mtx import _SymMtx, BalancedMatrix, extremes
from ..apx.approx_inv import build_approx
from ..apx.apx_bound import error_bound, bound_for
from ..apx.apx_resid import residual_V, residual_W


class OracleError(Exception):
    pass


MAX_DIM = 500

ApproxErrorReport = collections.namedtuple(
    "ApproxErrorReport", ["error", "bound", "ratio"])

# Every field is a relative deviation (0 when the identity holds exactly)
# except w_ratio, the largest entry or row spread of W over its bound (<= 1),
# and sandwich_gap, which is <= 0 when each row of F straddles 1/t..
IdentityReport = collections.namedtuple(
    "IdentityReport",
    ["closed_v", "closed_w", "recursion", "row_identity", "w_ratio",
     "sandwich_gap"])


def exact_inverse(T):
    """Returns the dense, symmetrized inverse of T."""
    assert isinstance(T, _SymMtx)
    if T.n > MAX_DIM:
        raise OracleError("dense oracle is limited to n <= {}, got {}"
                          .format(MAX_DIM, T.n))
    try:
        fac = scipy.linalg.cho_factor(T.dense, lower=True)
        inv = scipy.linalg.cho_solve(fac, np.eye(T.n))
    except (np.linalg.LinAlgError, ValueError) as e:
        raise OracleError("factorization failed, "
                          "matrix is not positive definite: {}".format(e))
    return 0.5 * (inv + inv.T)


def sup_norm(A):
    """Returns max |a[i,j]| (0 for an empty array)."""
    A = np.asarray(A, dtype=float)
    if A.size == 0:
        return 0.0
    return float(np.max(np.abs(A)))


def approx_error(T):
    """Returns the ApproxErrorReport of S for the matrix T:
    the oracle error, the applicable bound and their ratio.
    """
    err = sup_norm(exact_inverse(T) - build_approx(T).dense())
    bound = bound_for(T)
    return ApproxErrorReport(err, bound, err / bound)


def verify_identities(T):
    """Checks the identities and inequalities behind the error bound
    on a balanced matrix and returns an IdentityReport.
    """
    assert isinstance(T, BalancedMatrix)
    n = T.n
    eye = np.eye(n)
    t = T.dense
    s = build_approx(T).dense()
    f = exact_inverse(T) - s
    v = eye - t @ s
    w = s @ v

    closed_v = sup_norm(residual_V(T) - v) / sup_norm(v)
    closed_w = sup_norm(residual_W(T) - w) / sup_norm(w)
    recursion = sup_norm(f - (f @ v + w)) / sup_norm(f)

    target = 2.0 * T.diag / T.mass
    row_identity = sup_norm(np.diag(f @ t) - target) / sup_norm(target)

    m, M = extremes(T)
    a = error_bound(m, M, n).a
    row_span = np.max(w, axis=1) - np.min(w, axis=1)
    w_ratio = max(sup_norm(w), float(np.max(row_span))) / a

    inv_mass = 1.0 / T.mass
    gap = np.maximum(np.min(f, axis=1) - inv_mass,
                     inv_mass - np.max(f, axis=1))
    sandwich_gap = float(np.max(gap)) / inv_mass

    report = IdentityReport(closed_v, closed_w, recursion, row_identity,
                            w_ratio, sandwich_gap)
    logging.debug("ORCL:verify_identities n={} {}".format(n, report))
    return report
