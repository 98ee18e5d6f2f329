"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Balanced and diagonally dominant symmetric matrices with positive
off-diagonal elements.

A balanced matrix T satisfies::

    t[i,j] == t[j,i] > 0    for i != j
    t[i,i] == sum(t[i,j] for j != i)

The off-diagonal elements are the source of truth and the diagonal is
always derived from them, so the balance condition cannot drift.
A dominant matrix adds a nonnegative slack to each diagonal element::

    t[i,i] == sum(t[i,j] for j != i) + slack[i]

Off-diagonal elements are given as a flat sequence in row-major,
upper-triangle order (the same order as the matrix text file)::

    t12, t13, ..., t1n, t23, ..., t2n, ..., t(n-1)n

Instances are immutable; every array they hand out is read-only.
"""

import collections

import numpy as np


class MatrixError(Exception):
    pass


# Smallest off-diagonal element (m) and largest (M)
Extremes = collections.namedtuple("Extremes", ["m", "M"])


class _SymMtx():
    """Symmetric matrix with positive off-diagonals and a derived diagonal."""
    MIN_DIM = 3

    def __init__(self, n, entries, slack=None):
        n = int(n)
        if n < self.MIN_DIM:
            raise MatrixError("dimension must be at least {}, got {}"
                              .format(self.MIN_DIM, n))
        upper = _upper_from_entries(n, entries)
        if not np.all(np.isfinite(upper)):
            raise MatrixError("nonfinite entry")
        if np.any(upper <= 0.0):
            raise MatrixError("nonpositive entry")

        full = np.zeros((n, n))
        full[np.triu_indices(n, k=1)] = upper
        full += full.T
        diag = full.sum(axis=1)
        if slack is not None:
            diag = diag + slack
        full[np.diag_indices(n)] = diag

        self._n = n
        self._upper = _read_only(upper)
        self._diag = _read_only(diag)
        self._full = _read_only(full)
        self._mass = 2.0 * float(np.sum(upper))

    def __repr__(self):
        return "{}(n={}, m={:g}, M={:g})".format(
            type(self).__name__, self._n, *extremes(self))

    @property
    def n(self):
        return self._n

    @property
    def off_diag(self):
        """The upper-triangle off-diagonal elements, row-major."""
        return self._upper

    @property
    def diag(self):
        return self._diag

    @property
    def dense(self):
        """The full n x n matrix."""
        return self._full

    @property
    def mass(self):
        """The total mass t.., the sum of all (ordered) off-diagonal elements."""
        return self._mass


class BalancedMatrix(_SymMtx):
    """Symmetric matrix with positive off-diagonals
    whose diagonal equals its off-diagonal row sums.
    """
    def __init__(self, n, entries):
        super().__init__(n, entries)


class DominantMatrix(_SymMtx):
    """Symmetric matrix with positive off-diagonals
    whose diagonal exceeds its off-diagonal row sums by a slack >= 0.
    """
    def __init__(self, n, entries, slack):
        slack = np.array(slack, dtype=float).reshape(-1)
        if slack.shape != (int(n),):
            raise MatrixError("expected {} slack values, got {}"
                              .format(n, slack.size))
        if not np.all(np.isfinite(slack)):
            raise MatrixError("nonfinite slack")
        if np.any(slack < 0.0):
            raise MatrixError("negative slack")
        super().__init__(n, entries, slack)
        self._slack = _read_only(slack)

    @property
    def slack(self):
        return self._slack


def from_off_diagonals(n, entries):
    """Returns a BalancedMatrix from its off-diagonal elements.

    entries is either the flat upper-triangle sequence
    or a symmetric n x n array whose diagonal is ignored.
    """
    return BalancedMatrix(n, entries)


def from_dominant(n, entries, slacks):
    """Returns a DominantMatrix from its off-diagonals and diagonal slacks."""
    return DominantMatrix(n, entries, slacks)


def extremes(T):
    """Returns the Extremes (m, M) of the matrix.

    For a dominant matrix, M also covers the largest slack.
    """
    assert isinstance(T, _SymMtx)
    m = float(np.min(T.off_diag))
    M = float(np.max(T.off_diag))
    if isinstance(T, DominantMatrix):
        M = max(M, float(np.max(T.slack)))
    return Extremes(m, M)


def total_mass(T):
    assert isinstance(T, _SymMtx)
    return T.mass


def matvec(T, x):
    """Returns the dense product T x."""
    assert isinstance(T, _SymMtx)
    x = np.asarray(x, dtype=float)
    if x.shape != (T.n,):
        raise MatrixError("dimension mismatch: expected length {}, got {}"
                          .format(T.n, x.shape))
    return T.dense @ x


def _upper_from_entries(n, entries):
    a = np.array(entries, dtype=float)
    if a.ndim == 2:
        if a.shape != (n, n):
            raise MatrixError("expected a {0}x{0} array, got {1}"
                              .format(n, a.shape))
        if not np.array_equal(a, a.T):
            raise MatrixError("array is not symmetric")
        return a[np.triu_indices(n, k=1)]
    a = a.reshape(-1)
    cnt = n * (n - 1) // 2
    if a.size != cnt:
        raise MatrixError("expected {} off-diagonal entries, got {}"
                          .format(cnt, a.size))
    return a


def _read_only(a):
    a.flags.writeable = False
    return a
