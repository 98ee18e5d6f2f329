#!/usr/bin/env python3


import unittest

import numpy as np
from numpy.testing import assert_allclose

from balinv.mtx import worst_case_family
from balinv.apx import build_approx
from balinv.orcl import OracleError, SM_REL_TOL, exact_inverse, sup_norm, \
    sherman_morrison_inverse, worst_case_limit


def _scaled_error(n, m, M):
    T = worst_case_family(n, m, M)
    return (n - 1) ** 2 * sup_norm(exact_inverse(T) - build_approx(T).dense())


class TestShermanMorrison(unittest.TestCase):

    def test_agrees_with_dense(self):
        for n, m, M in ((4, 1.0, 2.0), (10, 1.0, 2.0), (50, 0.5, 3.0),
                        (10, 1.0, 1.0)):
            r = sherman_morrison_inverse(n, m, M)
            self.assertTrue(r.agrees, (n, m, M, r.max_rel_diff))
            self.assertLessEqual(r.max_rel_diff, SM_REL_TOL)

    def test_symmetric(self):
        inv = sherman_morrison_inverse(12, 1.0, 2.0).inverse
        assert_allclose(inv, inv.T, rtol=0, atol=0)

    def test_inverse_identity(self):
        n = 8
        inv = sherman_morrison_inverse(n, 1.0, 2.0).inverse
        T = worst_case_family(n, 1.0, 2.0)
        assert_allclose(T.dense @ inv, np.eye(n), atol=1e-12)

    def test_bad_params(self):
        with self.assertRaises(OracleError):
            sherman_morrison_inverse(3, 1.0, 2.0)
        with self.assertRaises(OracleError):
            sherman_morrison_inverse(10, 2.0, 1.0)


class TestWorstCase(unittest.TestCase):

    def test_limit(self):
        self.assertAlmostEqual(worst_case_limit(1.0, 2.0), 4 / 3)
        self.assertAlmostEqual(worst_case_limit(2.0, 2.0), 3 / 4)
        # tends to 1/m as M/m grows
        self.assertAlmostEqual(worst_case_limit(1.0, 1e9), 1.0, places=6)
        with self.assertRaises(OracleError):
            worst_case_limit(0.0, 1.0)

    def test_scaled_error_approaches_limit(self):
        m, M = 1.0, 2.0
        seq = [_scaled_error(n, m, M) for n in (20, 50, 100, 200)]
        self.assertTrue(np.all(np.diff(seq) > 0.0), seq)
        limit = worst_case_limit(m, M)
        self.assertLess(abs(seq[-1] - limit) / limit, 0.02)
        self.assertAlmostEqual(seq[-1], 1.329454, delta=1e-4)

    def test_equal_bounds_still_order_one(self):
        s = _scaled_error(100, 1.0, 1.0)
        self.assertGreater(s, 0.5)
        self.assertLess(s, 2.0)


if __name__ == '__main__':
    unittest.main()
