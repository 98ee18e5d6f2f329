from .bench_stngs import BenchError, BenchStngs
from .bench_cmd import ExperimentRow, WorstCaseRow, VerifyRow, RateFit, \
    trial_seed, format_csv, cmd_error_scan, cmd_rate_fit, cmd_worst_case, \
    cmd_verify, cmd_solve, cmd_beta_fit
from .bench_cli import build_parser, main
