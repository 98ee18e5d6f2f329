from .orcl_dense import OracleError, ApproxErrorReport, IdentityReport, \
    MAX_DIM, exact_inverse, sup_norm, approx_error, verify_identities
from .orcl_sm import SM_REL_TOL, SmInverse, sherman_morrison_inverse, \
    worst_case_limit
