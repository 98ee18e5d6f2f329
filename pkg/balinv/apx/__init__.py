from .approx_inv import ApproxError, StructuredInverse, build_approx, \
    apply_approx
from .apx_bound import BoundError, BoundReport, error_bound, \
    dominant_bracket, dominant_error_bound, bound_for, f_lambda
from .apx_resid import ResidualBounds, residual_V, residual_W, residual_bounds
