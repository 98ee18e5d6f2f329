from .pcg import PcgError, PrecondKind, SolveReport, Preconditioner, \
    default_theta, make_damped, make_preconditioner, pcg
