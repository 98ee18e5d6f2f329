"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Maximum likelihood fit of the beta model by quasi-Newton iteration.

The likelihood equations are expected_degrees(b) == d and their
Jacobian is the Fisher information T(b).  Instead of solving with T,
each step applies the damped structured inverse of T in O(n)::

    b <- b - S_theta (expected_degrees(b) - d)

S_theta shrinks the all-ones direction by 2(1 - theta) only, so the
total degree converges slowly when theta is near 1.  With rebalance
on, every step is followed by a scalar Newton step along ones::

    b <- b + (sum(d) - sum(E)) / (2 t..)

which matches the total degree to second order.
"""

import logging

import numpy as np
import scipy.special

from ..apx.approx_inv import build_approx
from ..slv.pcg import SolveReport, default_theta, make_damped
from .beta_model import BetaModelError, BetaParams, DegreeSequence, \
    expected_degrees, fisher_info


DFLT_TOL = 1e-8
DFLT_MAX_ITER = 200


def start_point(d):
    """Returns the starting point b[i] = logit(d[i] / (n-1)) / 2,
    exact when all degrees are equal.
    """
    assert isinstance(d, DegreeSequence)
    return BetaParams(0.5 * scipy.special.logit(d.d / (d.n - 1)))


def fit_mle(d, tol=DFLT_TOL, max_iter=DFLT_MAX_ITER, theta=None,
            rebalance=True):
    """Fits the beta model to the degree sequence d.

    Returns (BetaParams, SolveReport) where the residuals are the sup norms
    of expected_degrees(b) - d, starting with the residual of the start point.
    """
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(d)
    if not d.is_interior():
        raise BetaModelError("MLE may not exist: "
                             "every degree must lie strictly in (0, {})"
                             .format(d.n - 1))
    if not tol > 0.0:
        raise BetaModelError("tol must be positive, got {}".format(tol))
    if theta is None:
        theta = default_theta(d.n)

    beta = start_point(d)
    residuals = []
    for k in range(max_iter + 1):
        g = expected_degrees(beta) - d.d
        res = float(np.max(np.abs(g)))
        residuals.append(res)
        logging.debug("BETA:fit_mle iter={} res={:.3e}".format(k, res))
        if res <= tol:
            return beta, SolveReport(k, residuals, True)
        if k == max_iter:
            break

        pre = make_damped(build_approx(fisher_info(beta)), theta)
        beta = BetaParams(beta.beta - pre.apply(g))
        if rebalance:
            excess = np.sum(d.d) - np.sum(expected_degrees(beta))
            shift = excess / (2.0 * fisher_info(beta).mass)
            beta = BetaParams(beta.beta + shift)

    logging.warning("BETA:fit_mle no convergence in {} iterations, "
                    "res={:.3e}".format(max_iter, residuals[-1]))
    return beta, SolveReport(max_iter, residuals, False)
