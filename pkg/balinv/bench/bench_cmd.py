"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Benchmark commands.

Every command validates its whole input before computing
and returns rows (namedtuples) that format_csv() serializes.
Random instances are drawn with numpy's default generator (PCG64)
seeded by SeedSequence([seed, n, trial]), so a scan gives the same
rows for any job count and any order of evaluation.
"""

import collections
import concurrent.futures
import csv
import io
import logging

import numpy as np

from ..mtx import mtx_file
from ..mtx.mtx_gen import random_balanced, worst_case_family
from ..apx.approx_inv import build_approx
from ..apx.apx_bound import error_bound
from ..orcl.orcl_dense import exact_inverse, sup_norm, approx_error, \
    verify_identities
from ..orcl.orcl_sm import worst_case_limit
from ..slv.pcg import PrecondKind, make_preconditioner, pcg
from ..beta.beta_model import DegreeSequence
from ..beta.beta_fit import DFLT_TOL, fit_mle
from .bench_stngs import BenchError, BenchStngs


ExperimentRow = collections.namedtuple(
    "ExperimentRow",
    ["n", "m", "M", "trials", "mean_error", "max_error", "bound",
     "max_ratio", "seed"])

WorstCaseRow = collections.namedtuple(
    "WorstCaseRow", ["n", "scaled_error", "target", "limit"])

VerifyRow = collections.namedtuple(
    "VerifyRow",
    ["n", "trials", "closed_v", "closed_w", "recursion", "row_identity",
     "w_ratio", "sandwich_gap", "seed"])

RateFit = collections.namedtuple("RateFit", ["slope", "rows"])

# Fewest distinct dimensions a rate fit accepts
RATE_FIT_MIN_PTS = 4


def trial_seed(seed, n, trial):
    return np.random.SeedSequence([seed, n, trial])


def format_csv(rows, fields=None):
    """Returns the CSV text of rows with a header line.
    Reals are written with 17 significant digits.
    """
    if fields is None:
        fields = rows[0]._fields
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_format_field(v) for v in row])
    return buf.getvalue()


def _format_field(v):
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return "{:.17g}".format(float(v))


def _map_trials(fn, args, jobs):
    if jobs == 1:
        return [fn(a) for a in args]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, args))


def cmd_error_scan(n_list, m, M, trials, seed, jobs=1):
    """Returns one ExperimentRow per n of the oracle error of S
    on random balanced matrices with elements uniform on [m, M].
    """
    n_list = BenchStngs.check_n_list(n_list)
    m, M = BenchStngs.check_bounds(m, M)
    trials = BenchStngs.check("trials", trials)
    seed = BenchStngs.check("seed", seed)
    jobs = BenchStngs.check("jobs", jobs)

    rows = []
    for n in n_list:
        def trial_error(trial):
            T = random_balanced(n, m, M, seed=trial_seed(seed, n, trial))
            return approx_error(T).error

        errs = np.array(_map_trials(trial_error, range(trials), jobs))
        bound = error_bound(m, M, n).bound
        max_error = float(np.max(errs))
        row = ExperimentRow(n, m, M, trials, float(np.mean(errs)), max_error,
                            bound, max_error / bound, seed)
        logging.info("BENCH:error_scan {}".format(row))
        rows.append(row)
    return rows


def cmd_rate_fit(n_list, m, M, trials, seed, jobs=1):
    """Returns a RateFit: the least-squares slope of log(mean_error)
    against log(n-1) and the scan rows behind it.
    Repeated dimensions are fitted once.
    """
    n_list = sorted(set(BenchStngs.check_n_list(n_list)))
    if len(n_list) < RATE_FIT_MIN_PTS:
        raise BenchError("rate fit needs at least {} distinct n values, got {}"
                         .format(RATE_FIT_MIN_PTS, len(n_list)))
    rows = cmd_error_scan(n_list, m, M, trials, seed, jobs)
    x = np.log([r.n - 1.0 for r in rows])
    y = np.log([r.mean_error for r in rows])
    slope = float(np.polyfit(x, y, 1)[0])
    logging.info("BENCH:rate_fit slope={:.4f}".format(slope))
    return RateFit(slope, rows)


def cmd_worst_case(n_list, m, M):
    """Returns one WorstCaseRow per n with (n-1)**2 times the oracle error
    on the worst-case family, the nominal target 1/m
    and the exact large-n limit.
    """
    n_list = BenchStngs.check_n_list(n_list, "n_worst")
    m, M = BenchStngs.check_bounds(m, M)

    limit = worst_case_limit(m, M)
    rows = []
    for n in n_list:
        T = worst_case_family(n, m, M)
        err = sup_norm(exact_inverse(T) - build_approx(T).dense())
        rows.append(WorstCaseRow(n, (n - 1) ** 2 * err, 1.0 / m, limit))
    return rows


def cmd_verify(n_list, m, M, trials, seed, jobs=1):
    """Returns one VerifyRow per n holding, for each identity,
    the worst deviation over the trials.
    """
    n_list = BenchStngs.check_n_list(n_list)
    m, M = BenchStngs.check_bounds(m, M)
    trials = BenchStngs.check("trials", trials)
    seed = BenchStngs.check("seed", seed)
    jobs = BenchStngs.check("jobs", jobs)

    rows = []
    for n in n_list:
        def trial_report(trial):
            T = random_balanced(n, m, M, seed=trial_seed(seed, n, trial))
            return verify_identities(T)

        reports = _map_trials(trial_report, range(trials), jobs)
        worst = np.max(np.array(reports), axis=0)
        rows.append(VerifyRow(n, trials, *(float(v) for v in worst), seed))
    return rows


def cmd_solve(matrix_path, rhs_path, pre=PrecondKind.DAMPED_S, tol=None,
              theta=None):
    """Solves T x = b for the matrix and right-hand side files.
    Returns (x, SolveReport).
    """
    pre = PrecondKind(pre)
    tol = BenchStngs.check(
        "tol", BenchStngs.get_default("tol") if tol is None else tol)
    if theta is not None:
        theta = BenchStngs.check("theta", theta)
    T = mtx_file.read(matrix_path)
    b = mtx_file.read_vector(rhs_path)
    if b.size != T.n:
        raise BenchError("right-hand side has {} values, matrix has n={}"
                         .format(b.size, T.n))
    return pcg(T, b, make_preconditioner(pre, T, theta), tol)


def cmd_beta_fit(degrees_path, tol=None):
    """Fits the beta model to the degree file.
    Returns (BetaParams, SolveReport).
    """
    tol = BenchStngs.check("tol", DFLT_TOL if tol is None else tol)
    d = DegreeSequence(mtx_file.read_vector(degrees_path))
    return fit_mle(d, tol)
