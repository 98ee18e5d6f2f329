"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Matrix and vector text formats.

A matrix file holds the dimension on the first line, followed by the
n(n-1)/2 off-diagonal elements in row-major upper-triangle order,
separated by any whitespace.  A dominant matrix appends a second block
of n slack values::

    3
    1 2
    3

    0.5 0 0

A vector file is whitespace-separated reals (or integers for degree
sequences).  Numbers are written with 17 significant digits
so a file round-trips exactly.
"""

import numpy as np

from .balanced_mtx import MatrixError, BalancedMatrix, DominantMatrix


class MatrixFormatError(MatrixError):
    pass


def parse(text):
    """Parses matrix text into a BalancedMatrix or DominantMatrix."""
    lines = text.strip().splitlines()
    if not lines:
        raise MatrixFormatError("empty matrix text")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise MatrixFormatError("first line must be the dimension, got {!r}"
                                .format(lines[0]))
    if n < BalancedMatrix.MIN_DIM:
        raise MatrixFormatError("dimension must be at least {}, got {}"
                                .format(BalancedMatrix.MIN_DIM, n))
    vals = _parse_reals(" ".join(lines[1:]))
    cnt = n * (n - 1) // 2
    if vals.size == cnt:
        return BalancedMatrix(n, vals)
    elif vals.size == cnt + n:
        return DominantMatrix(n, vals[:cnt], vals[cnt:])
    raise MatrixFormatError(
        "expected {} off-diagonal values (or {} with slacks), got {}"
        .format(cnt, cnt + n, vals.size))


def format_mtx(T):
    """Serializes a matrix into the text format."""
    assert isinstance(T, (BalancedMatrix, DominantMatrix))
    n = T.n
    lines = [str(n)]
    start = 0
    for i in range(n - 1):
        cnt = n - 1 - i
        lines.append(_format_reals(T.off_diag[start:start + cnt]))
        start += cnt
    if isinstance(T, DominantMatrix):
        lines.append("")
        lines.append(_format_reals(T.slack))
    return "\n".join(lines) + "\n"


def read(path):
    with open(path) as f:
        return parse(f.read())


def write(path, T):
    with open(path, "w") as f:
        f.write(format_mtx(T))


def parse_vector(text):
    vals = _parse_reals(text)
    if vals.size == 0:
        raise MatrixFormatError("empty vector")
    return vals


def format_vector(x):
    return _format_reals(x) + "\n"


def read_vector(path):
    with open(path) as f:
        return parse_vector(f.read())


def _parse_reals(text):
    try:
        return np.array([float(tok) for tok in text.split()], dtype=float)
    except ValueError as e:
        raise MatrixFormatError("malformed number: {}".format(e))


def _format_reals(vals):
    return " ".join("{:.17g}".format(float(v)) for v in vals)
