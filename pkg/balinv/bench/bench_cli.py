"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Command-line driver for the benchmarks.

    balinv_bench.py error-scan --n 10,20,40 --m 0.5 --M 2 --trials 20
    balinv_bench.py rate-fit   --n 10,20,40,80,160 --m 1 --M 1
    balinv_bench.py worst-case --n 20,50,100,200 --m 1 --M 2
    balinv_bench.py verify     --n 3,5,10,50 --trials 50
    balinv_bench.py solve      matrix.txt rhs.txt --pre damped-s
    balinv_bench.py beta-fit   degrees.txt --tol 1e-8

Output goes to standard output, or to the --out file once the whole
command has succeeded.  Errors go to standard error with exit code 2;
a solver that does not converge exits with 1.
"""

import argparse
import logging
import sys

from ..mtx.balanced_mtx import MatrixError
from ..apx.approx_inv import ApproxError
from ..apx.apx_bound import BoundError
from ..orcl.orcl_dense import OracleError
from ..slv.pcg import PcgError, PrecondKind
from ..beta.beta_model import BetaModelError
from . import bench_cmd
from .bench_stngs import BenchError, BenchStngs


EXIT_OK = 0
EXIT_NO_CONVERGENCE = 1
EXIT_ERROR = 2

SEED_HELP = """Random instances use numpy's default generator (PCG64) seeded
with numpy.random.SeedSequence([seed, n, trial]); seeds are 64-bit unsigned
integers and output is identical for any --jobs count."""

_DOMAIN_ERRORS = (BenchError, MatrixError, ApproxError, BoundError,
                  OracleError, PcgError, BetaModelError, OSError)


def _n_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected a comma-separated list of integers, got {!r}"
            .format(text))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="balinv_bench",
        description="Benchmarks for the structured approximate inverse "
                    "of balanced matrices.",
        epilog=SEED_HELP)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log more (-v info, -vv debug)")
    sub = parser.add_subparsers(dest="cmd", metavar="command")
    sub.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None,
                        help="Write the output to this file")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--n", type=_n_list, required=True,
                        help="Comma-separated list of dimensions")
    family.add_argument("--m", type=float,
                        default=BenchStngs.get_default("m"),
                        help="Smallest off-diagonal element")
    family.add_argument("--M", type=float,
                        default=BenchStngs.get_default("M"),
                        help="Largest off-diagonal element")

    scan = argparse.ArgumentParser(add_help=False)
    scan.add_argument("--trials", type=int,
                      default=BenchStngs.get_default("trials"),
                      help="Random instances per dimension")
    scan.add_argument("--seed", type=int,
                      default=BenchStngs.get_default("seed"),
                      help="Base seed (0 .. 2**64-1)")
    scan.add_argument("--jobs", type=int,
                      default=BenchStngs.get_default("jobs"),
                      help="Worker threads for the trials")

    sub.add_parser("error-scan", parents=[common, family, scan],
                   help="Oracle error and bound per dimension (CSV)",
                   epilog=SEED_HELP)
    sub.add_parser("rate-fit", parents=[common, family, scan],
                   help="Log-log slope of the mean error against n-1",
                   epilog=SEED_HELP)
    sub.add_parser("worst-case", parents=[common, family],
                   help="Scaled error on the worst-case family (CSV)")
    sub.add_parser("verify", parents=[common, family, scan],
                   help="Deviations of the error-bound identities (CSV)",
                   epilog=SEED_HELP)

    solve = sub.add_parser("solve", parents=[common],
                           help="Solve T x = b by PCG")
    solve.add_argument("matrix_file")
    solve.add_argument("rhs_file")
    solve.add_argument("--pre", choices=[k.value for k in PrecondKind],
                       default=PrecondKind.DAMPED_S.value,
                       help="Preconditioner")
    solve.add_argument("--theta", type=float, default=None,
                       help="Damping for damped-s (default 1 - 1/n, "
                            "scaled by t../trace for a dominant matrix)")
    solve.add_argument("--tol", type=float,
                       default=BenchStngs.get_default("tol"),
                       help="Relative residual tolerance")

    beta = sub.add_parser("beta-fit", parents=[common],
                          help="Fit the beta model to a degree sequence")
    beta.add_argument("degrees_file")
    beta.add_argument("--tol", type=float, default=None,
                      help="Sup-norm tolerance on the likelihood equations "
                           "(default 1e-8)")
    return parser


def run(args):
    """Runs the parsed command.  Returns (text, exit_code)."""
    if args.cmd == "error-scan":
        rows = bench_cmd.cmd_error_scan(args.n, args.m, args.M, args.trials,
                                        args.seed, args.jobs)
        return bench_cmd.format_csv(rows), EXIT_OK

    if args.cmd == "rate-fit":
        fit = bench_cmd.cmd_rate_fit(args.n, args.m, args.M, args.trials,
                                     args.seed, args.jobs)
        text = bench_cmd.format_csv(fit.rows)
        text += "# slope={:.17g}\n".format(fit.slope)
        return text, EXIT_OK

    if args.cmd == "worst-case":
        rows = bench_cmd.cmd_worst_case(args.n, args.m, args.M)
        return bench_cmd.format_csv(rows), EXIT_OK

    if args.cmd == "verify":
        rows = bench_cmd.cmd_verify(args.n, args.m, args.M, args.trials,
                                    args.seed, args.jobs)
        return bench_cmd.format_csv(rows), EXIT_OK

    if args.cmd == "solve":
        x, report = bench_cmd.cmd_solve(args.matrix_file, args.rhs_file,
                                        args.pre, args.tol, args.theta)
        label = "x"
    else:
        x, report = bench_cmd.cmd_beta_fit(args.degrees_file, args.tol)
        x = x.beta
        label = "beta"

    lines = ["{} = {}".format(label, " ".join("{:.17g}".format(v) for v in x)),
             "iterations = {}".format(report.iterations),
             "residual = {:.3e}".format(report.residuals[-1]),
             "converged = {}".format(report.converged)]
    code = EXIT_OK if report.converged else EXIT_NO_CONVERGENCE
    return "\n".join(lines) + "\n", code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                       logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")

    try:
        text, code = run(args)
    except _DOMAIN_ERRORS as e:
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_ERROR

    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w") as f:
                f.write(text)
        except OSError as e:
            print("error: {}".format(e), file=sys.stderr)
            return EXIT_ERROR
    return code
