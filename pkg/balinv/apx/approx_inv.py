"""
Copyright 2024 BalInv authors.  See LICENSE for details.

The structured approximate inverse S of a balanced matrix T::

    s[i,j] = delta[i,j] / t[i,i] - 1 / t..

where t.. is the sum of all off-diagonal elements of T.
S is stored as the n diagonal reciprocals plus the scalar t..,
so it takes O(n) storage and is applied in O(n).

For a balanced T, sum(t[k,k]) == t.., hence S annihilates diag(T)
and S is positive semidefinite but singular.  A damped apply,
x -> x / diag(T) - theta * sum(x) / t.., with 0 < theta < 1
is positive definite (see balinv.slv).
"""

import numpy as np

from ..mtx.balanced_mtx import _SymMtx


class ApproxError(Exception):
    pass


class StructuredInverse():
    """The approximate inverse S, diagonal reciprocals minus a constant."""

    def __init__(self, diag_recip, mass):
        diag_recip = np.array(diag_recip, dtype=float).reshape(-1)
        if not (np.all(np.isfinite(diag_recip)) and np.all(diag_recip > 0.0)):
            raise ApproxError("diagonal reciprocals must be positive")
        if not (0.0 < mass < np.inf):
            raise ApproxError("mass must be positive")
        diag_recip.flags.writeable = False
        self._diag_recip = diag_recip
        self._mass = float(mass)

    def __repr__(self):
        return "StructuredInverse(n={}, mass={:g})".format(self.n, self._mass)

    @property
    def n(self):
        return self._diag_recip.size

    @property
    def diag_recip(self):
        return self._diag_recip

    @property
    def mass(self):
        return self._mass

    @property
    def hc_offset(self):
        """The constant c in S = diag(1/t[i,i]) + c * ones, i.e. -1/t..

        It is negative, so S lies outside the c > 0 family of
        constant-offset preconditioners for M-matrices.
        """
        return -1.0 / self._mass

    def entry(self, i, j):
        return (self._diag_recip[i] if i == j else 0.0) - 1.0 / self._mass

    def apply(self, x, theta=1.0):
        """Returns S x, or the damped product when theta < 1."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ApproxError("dimension mismatch: expected length {}, got {}"
                              .format(self.n, x.shape))
        return self._diag_recip * x - theta * np.sum(x) / self._mass

    def quad_form(self, x):
        """Returns x' S x in O(n)."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ApproxError("dimension mismatch: expected length {}, got {}"
                              .format(self.n, x.shape))
        return float(np.dot(x * x, self._diag_recip)
                     - np.sum(x) ** 2 / self._mass)

    def dense(self):
        """Returns S as a dense n x n array (oracles and tests only)."""
        return np.diag(self._diag_recip) - 1.0 / self._mass


def build_approx(T):
    """Builds S from a balanced or dominant matrix.

    The mass is the off-diagonal sum t.. in both cases,
    not the trace (they differ for a dominant matrix).
    """
    assert isinstance(T, _SymMtx)
    return StructuredInverse(1.0 / T.diag, T.mass)


def apply_approx(S, x):
    """Returns S x in O(n)."""
    assert isinstance(S, StructuredInverse)
    return S.apply(x)
