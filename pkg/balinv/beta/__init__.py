from .beta_model import BetaModelError, BetaParams, DegreeSequence, \
    edge_probs, fisher_info, expected_degrees, sample_degrees, log_likelihood
from .beta_fit import DFLT_TOL, DFLT_MAX_ITER, start_point, fit_mle
