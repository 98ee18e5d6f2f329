"""
Copyright 2024 BalInv authors.  See LICENSE for details.

The beta model for undirected random graphs.

Each pair of vertices i < j is joined independently with probability::

    p[i,j] = exp(b[i] + b[j]) / (1 + exp(b[i] + b[j]))

The degrees are sufficient statistics, so the Fisher information is
the covariance of the degree vector: t[i,j] = p[i,j] (1 - p[i,j])
off the diagonal and the diagonal equals the row sums.
It is therefore exactly balanced.
"""

import numpy as np
import scipy.special

from ..mtx.balanced_mtx import BalancedMatrix


class BetaModelError(Exception):
    pass


class BetaParams():
    """Vertex parameters of the beta model, on the log-odds scale."""
    MIN_DIM = 3

    def __init__(self, beta):
        beta = np.array(beta, dtype=float).reshape(-1)
        if beta.size < self.MIN_DIM:
            raise BetaModelError("need at least {} vertices, got {}"
                                 .format(self.MIN_DIM, beta.size))
        if not np.all(np.isfinite(beta)):
            raise BetaModelError("nonfinite parameter")
        beta.flags.writeable = False
        self._beta = beta

    def __repr__(self):
        return "BetaParams(n={})".format(self.n)

    @property
    def n(self):
        return self._beta.size

    @property
    def beta(self):
        return self._beta


class DegreeSequence():
    """Observed (or expected) vertex degrees.

    Every degree lies in [0, n-1]; an integer sequence
    must have an even sum.
    """
    MIN_DIM = 3

    def __init__(self, d):
        d = np.array(d, dtype=float).reshape(-1)
        n = d.size
        if n < self.MIN_DIM:
            raise BetaModelError("need at least {} vertices, got {}"
                                 .format(self.MIN_DIM, n))
        if not np.all(np.isfinite(d)):
            raise BetaModelError("nonfinite degree")
        if np.any(d < 0.0) or np.any(d > n - 1):
            raise BetaModelError("degrees must lie in [0, {}]".format(n - 1))
        if np.all(d == np.round(d)) and int(np.sum(d)) % 2 != 0:
            raise BetaModelError("integer degree sum must be even, got {}"
                                 .format(int(np.sum(d))))
        d.flags.writeable = False
        self._d = d

    def __repr__(self):
        return "DegreeSequence(n={})".format(self.n)

    @property
    def n(self):
        return self._d.size

    @property
    def d(self):
        return self._d

    def is_interior(self):
        return bool(np.all(self._d > 0.0) and np.all(self._d < self.n - 1))


def edge_probs(beta):
    """Returns the n x n matrix of edge probabilities (zero diagonal)."""
    assert isinstance(beta, BetaParams)
    b = beta.beta
    p = scipy.special.expit(b[:, None] + b[None, :])
    p[np.diag_indices(b.size)] = 0.0
    return p


def fisher_info(beta):
    """Returns the Fisher information of the beta model at beta
    as a BalancedMatrix.
    """
    assert isinstance(beta, BetaParams)
    n = beta.n
    b = beta.beta
    iu = np.triu_indices(n, k=1)
    p = scipy.special.expit(b[iu[0]] + b[iu[1]])
    # p (1 - p) underflows for |b[i] + b[j]| beyond ~745
    t = np.maximum(p * (1.0 - p), np.finfo(float).tiny)
    return BalancedMatrix(n, t)


def expected_degrees(beta):
    return np.sum(edge_probs(beta), axis=1)


def sample_degrees(beta, seed=None):
    """Draws one graph from the model and returns its DegreeSequence."""
    assert isinstance(beta, BetaParams)
    n = beta.n
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, k=1)
    p = scipy.special.expit(beta.beta[iu[0]] + beta.beta[iu[1]])
    edges = rng.random(p.size) < p
    d = np.zeros(n, dtype=int)
    np.add.at(d, iu[0][edges], 1)
    np.add.at(d, iu[1][edges], 1)
    return DegreeSequence(d)


def log_likelihood(beta, d):
    """Returns sum(b[i] d[i]) - sum(log(1 + exp(b[i] + b[j])), i < j)."""
    assert isinstance(beta, BetaParams)
    assert isinstance(d, DegreeSequence)
    if beta.n != d.n:
        raise BetaModelError("dimension mismatch: {} parameters, {} degrees"
                             .format(beta.n, d.n))
    b = beta.beta
    iu = np.triu_indices(beta.n, k=1)
    return float(b @ d.d - np.sum(np.logaddexp(0.0, b[iu[0]] + b[iu[1]])))
