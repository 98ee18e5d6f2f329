"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Closed forms of the residuals used by the error-bound argument.

With V = I - T S and W = S V, a balanced T gives::

    v[i,j] = (delta[i,j] - 1) t[i,j] / t[j,j] + 2 t[i,i] / t..
    w[i,j] = (delta[i,j] - 1) t[i,j] / (t[i,i] t[j,j]) + 1 / t..

Both rely on the balance condition (row sums of T are 2 t[i,i]
and the trace equals t..), so only balanced matrices are accepted.
The numeric products are the ground truth for any comparison.
"""

import collections

import numpy as np

from ..mtx.balanced_mtx import BalancedMatrix, extremes


# Observed maxima and their bounds for the entries of W,
# the within-row differences of W, and the combined display.
ResidualBounds = collections.namedtuple(
    "ResidualBounds",
    ["max_w_diag", "max_w_off", "max_w_diff", "bound_w", "bound_diff"])


def residual_V(T):
    """Returns V = I - T S from its closed form."""
    assert isinstance(T, BalancedMatrix)
    d = T.diag
    off = T.dense - np.diag(d)
    return -off / d[np.newaxis, :] + (2.0 * d / T.mass)[:, np.newaxis]


def residual_W(T):
    """Returns W = S (I - T S) from its closed form."""
    assert isinstance(T, BalancedMatrix)
    d = T.diag
    off = T.dense - np.diag(d)
    return -off / np.outer(d, d) + 1.0 / T.mass


def residual_bounds(T):
    """Returns the ResidualBounds of W for the matrix T.

    bound_w is 1/(m n (n-1)) for the entries of W
    and bound_diff is M/(m**2 (n-1)**2) for within-row differences.
    """
    n = T.n
    m, M = extremes(T)
    w = residual_W(T)
    w_diag = np.abs(np.diag(w))
    w_off = np.abs(w[~np.eye(n, dtype=bool)])
    row_span = np.max(w, axis=1) - np.min(w, axis=1)
    return ResidualBounds(
        max_w_diag=float(np.max(w_diag)),
        max_w_off=float(np.max(w_off)),
        max_w_diff=float(np.max(row_span)),
        bound_w=1.0 / (m * n * (n - 1)),
        bound_diff=M / (m ** 2 * (n - 1) ** 2))
