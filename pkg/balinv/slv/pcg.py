"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Preconditioned conjugate gradients (PCG) for balanced and dominant systems.

Three preconditioners are available, each applied in O(n):

==========  ==============================================
Kind        Operator
==========  ==============================================
none        x
jacobi      x / diag(T)
damped-s    x / diag(T) - theta * sum(x) / t..
==========  ==============================================

The structured approximate inverse S is singular for a balanced T
(S diag(T) == 0), so it cannot precondition CG as it is.
Damping the rank-one term by 0 < theta < 1 makes it positive definite::

    x' S_theta x >= (1 - theta) * sum(x**2 / t[i,i])

because (sum x)**2 <= sum(x**2 / t[i,i]) * trace(T) and trace(T) == t..
For a dominant T, trace(T) > t.. and theta must also satisfy
theta * trace(T) / t.. < 1.
"""

import collections
import enum
import logging

import numpy as np

from ..mtx.balanced_mtx import _SymMtx, matvec
from ..apx.approx_inv import StructuredInverse, build_approx


class PcgError(Exception):
    pass


class PrecondKind(enum.Enum):
    NONE = "none"
    JACOBI = "jacobi"
    DAMPED_S = "damped-s"


# residuals[k] is the relative residual |b - T x_k| / |b| after k iterations
SolveReport = collections.namedtuple(
    "SolveReport", ["iterations", "residuals", "converged"])


class Preconditioner():
    """A preconditioner of the given kind.

    approx is the StructuredInverse the jacobi and damped-s kinds apply;
    theta is the damping of the rank-one term (damped-s only).
    """
    def __init__(self, kind, approx=None, theta=0.0):
        kind = PrecondKind(kind)
        if kind is not PrecondKind.NONE:
            assert isinstance(approx, StructuredInverse)
        if kind is PrecondKind.DAMPED_S:
            theta = float(theta)
            if not 0.0 < theta < 1.0:
                raise PcgError("theta must lie in (0, 1), got {}".format(theta))
            excess = np.sum(1.0 / approx.diag_recip) / approx.mass
            if theta * excess >= 1.0:
                raise PcgError("theta={} is too large for a dominant matrix "
                               "(trace/mass={:g})".format(theta, excess))
        else:
            theta = 0.0
        self._kind = kind
        self._approx = approx
        self._theta = theta

    def __repr__(self):
        return "Preconditioner({}, theta={:g})".format(self._kind.value,
                                                       self._theta)

    @property
    def kind(self):
        return self._kind

    @property
    def theta(self):
        return self._theta

    def apply(self, x):
        if self._kind is PrecondKind.NONE:
            return np.array(x, dtype=float)
        return self._approx.apply(x, self._theta)


def default_theta(n):
    return 1.0 - 1.0 / n


def make_damped(S, theta=None):
    """Returns the damped-s Preconditioner built on S.

    The default theta is 1 - 1/n, scaled down by trace/t.. when S was built
    from a dominant matrix so the preconditioner stays positive definite.
    """
    assert isinstance(S, StructuredInverse)
    if theta is None:
        excess = np.sum(1.0 / S.diag_recip) / S.mass
        theta = default_theta(S.n) / max(1.0, excess)
    return Preconditioner(PrecondKind.DAMPED_S, S, theta)


def make_preconditioner(kind, T, theta=None):
    """Returns a Preconditioner of the given kind for the matrix T."""
    kind = PrecondKind(kind)
    if kind is PrecondKind.NONE:
        return Preconditioner(kind)
    S = build_approx(T)
    if kind is PrecondKind.JACOBI:
        return Preconditioner(kind, S)
    return make_damped(S, theta)


def pcg(T, b, pre=None, tol=1e-10, max_iter=None):
    """Solves T x = b by preconditioned conjugate gradients.

    Returns (x, SolveReport).  When max_iter is exceeded, x is the iterate
    with the smallest residual and the report says converged=False.
    """
    assert isinstance(T, _SymMtx)
    if pre is None:
        pre = Preconditioner(PrecondKind.NONE)
    assert isinstance(pre, Preconditioner)
    if not tol > 0.0:
        raise PcgError("tol must be positive, got {}".format(tol))
    if max_iter is None:
        max_iter = 4 * T.n

    b = np.asarray(b, dtype=float)
    if b.shape != (T.n,):
        raise PcgError("dimension mismatch: expected length {}, got {}"
                       .format(T.n, b.shape))
    x = np.zeros(T.n)
    b_norm = np.linalg.norm(b)
    r = b - matvec(T, x)
    if b_norm == 0.0:
        return x, SolveReport(0, [0.0], True)

    z = pre.apply(r)
    p = z.copy()
    rz = float(r @ z)
    residuals = [np.linalg.norm(r) / b_norm]
    best_x = x.copy()
    best_res = residuals[0]

    for k in range(1, max_iter + 1):
        q = matvec(T, p)
        pq = float(p @ q)
        if not pq > 0.0:
            raise PcgError("matrix is not positive definite (p'Tp={:g})"
                           .format(pq))
        alpha = rz / pq
        x += alpha * p
        r -= alpha * q
        res = np.linalg.norm(r) / b_norm

        # Replace the recurrence residual by the true one before stopping
        if res <= tol:
            r = b - matvec(T, x)
            res = np.linalg.norm(r) / b_norm
        residuals.append(res)
        if res < best_res:
            best_x = x.copy()
            best_res = res
        logging.debug("SLV:pcg iter={} res={:.3e}".format(k, res))
        if res <= tol:
            return x, SolveReport(k, residuals, True)

        z = pre.apply(r)
        rz_new = float(r @ z)
        if not rz_new > 0.0:
            raise PcgError("preconditioner is not positive definite")
        p = z + (rz_new / rz) * p
        rz = rz_new

    logging.warning("SLV:pcg no convergence in {} iterations, res={:.3e}"
                    .format(max_iter, best_res))
    return best_x, SolveReport(max_iter, residuals, False)
