"""
Copyright 2024 BalInv authors.  See LICENSE for details.

Validation table for the benchmark settings.
"""

import collections

import numpy as np


class BenchError(Exception):
    pass


class BenchStngs():
    """Range checks and defaults for every numeric benchmark flag."""

    # Dense-oracle ceiling on the dimension
    STNG_N_MAX = 500
    STNG_SEED_MAX = 2 ** 64 - 1
    STNG_REAL_MAX = 1e6

    # Setting info named tuple.
    # A real-valued setting excludes val_min when min_open is set
    # and excludes val_max when max_open is set.
    StngInfo = collections.namedtuple(
        "StngInfo",
        "val_type val_min val_max min_open max_open val_dflt")

    # Setting info table
    _stng_info = {
        # setting       val     val     val             min     max     val
        # name          type    min     max             open    open    dflt

        "n":            StngInfo(int,   3,      STNG_N_MAX,     False,  False,  None    ),
        "n_worst":      StngInfo(int,   4,      STNG_N_MAX,     False,  False,  None    ),
        "trials":       StngInfo(int,   1,      100000,         False,  False,  10      ),
        "seed":         StngInfo(int,   0,      STNG_SEED_MAX,  False,  False,  0       ),
        "jobs":         StngInfo(int,   1,      256,            False,  False,  1       ),
        "m":            StngInfo(float, 0.0,    STNG_REAL_MAX,  True,   False,  0.5     ),
        "M":            StngInfo(float, 0.0,    STNG_REAL_MAX,  True,   False,  2.0     ),
        "tol":          StngInfo(float, 0.0,    1.0,            True,   True,   1e-10   ),
        "theta":        StngInfo(float, 0.0,    1.0,            True,   True,   None    ),
    }


    @classmethod
    def get_default(cls, stng):
        return cls._stng_info[stng].val_dflt


    @classmethod
    def check(cls, stng, val):
        """Returns val converted to the setting's type.
        Raises BenchError if it is out of range.
        """
        info = cls._stng_info[stng]
        if info.val_type is int:
            if isinstance(val, bool) or int(val) != val:
                raise BenchError("{} must be an integer, got {}"
                                 .format(stng, val))
            val = int(val)
        else:
            val = float(val)
            if not np.isfinite(val):
                raise BenchError("{} must be finite, got {}".format(stng, val))

        lo_ok = val > info.val_min if info.min_open else val >= info.val_min
        hi_ok = val < info.val_max if info.max_open else val <= info.val_max
        if not (lo_ok and hi_ok):
            raise BenchError("{} must lie in {}{}, {}{}, got {}".format(
                stng,
                "(" if info.min_open else "[", info.val_min,
                info.val_max, ")" if info.max_open else "]",
                val))
        return val


    @classmethod
    def check_bounds(cls, m, M):
        """Returns the checked pair (m, M) with m <= M."""
        m = cls.check("m", m)
        M = cls.check("M", M)
        if m > M:
            raise BenchError("m must not exceed M, got m={:g}, M={:g}"
                             .format(m, M))
        return m, M


    @classmethod
    def check_n_list(cls, n_list, stng="n"):
        n_list = [cls.check(stng, n) for n in n_list]
        if not n_list:
            raise BenchError("empty n list")
        return n_list
