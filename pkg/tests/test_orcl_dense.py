#!/usr/bin/env python3


import unittest

import numpy as np
from numpy.testing import assert_allclose

from balinv.mtx import from_off_diagonals, from_dominant, random_balanced, \
    random_dominant, worst_case_family
from balinv.apx import build_approx
from balinv.orcl import OracleError, MAX_DIM, exact_inverse, sup_norm, \
    approx_error, verify_identities


class TestExactInverse(unittest.TestCase):

    def test_all_ones_n3(self):
        inv = exact_inverse(from_off_diagonals(3, [1, 1, 1]))
        expected = np.array([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]]) / 4
        assert_allclose(inv, expected, atol=1e-15)

    def test_residual_and_symmetry(self):
        for n in (3, 10, 100, 300):
            T = random_balanced(n, 0.5, 2.0, seed=n)
            inv = exact_inverse(T)
            self.assertLessEqual(sup_norm(T.dense @ inv - np.eye(n)), 1e-10)
            assert_allclose(inv, inv.T, rtol=0, atol=0)
            self.assertTrue(np.all(np.diag(inv) > 0.0))

    def test_worst_case_is_positive_definite(self):
        inv = exact_inverse(worst_case_family(10, 1.0, 2.0))
        self.assertTrue(np.all(np.isfinite(inv)))

    def test_dimension_ceiling(self):
        self.assertEqual(MAX_DIM, 500)
        with self.assertRaises(OracleError):
            exact_inverse(random_balanced(MAX_DIM + 1, 1.0, 1.0))

    def test_not_positive_definite(self):
        # Dominant matrices are positive definite; corrupt the dense view
        T = from_dominant(3, [1, 1, 1], [0, 0, 0])
        T._full = np.array([[1.0, 2, 2], [2, 1, 2], [2, 2, 1]])
        with self.assertRaises(OracleError):
            exact_inverse(T)


class TestSupNorm(unittest.TestCase):

    def test_basics(self):
        self.assertEqual(sup_norm(np.zeros((3, 3))), 0.0)
        self.assertEqual(sup_norm(np.zeros((0, 0))), 0.0)
        a = np.array([[1.0, -3.0], [2.0, 0.5]])
        b = np.array([[0.0, 1.0], [1.0, 0.0]])
        self.assertEqual(sup_norm(a), 3.0)
        self.assertEqual(sup_norm(a - b), sup_norm(b - a))


class TestApproxError(unittest.TestCase):

    def test_all_ones_n3(self):
        r = approx_error(from_off_diagonals(3, [1, 1, 1]))
        self.assertAlmostEqual(r.error, 5 / 12, delta=1e-12)
        self.assertAlmostEqual(r.bound, 0.625)
        self.assertAlmostEqual(r.ratio, 2 / 3, delta=1e-12)

    def test_ratio_at_most_one(self):
        for n in (3, 5, 10, 20, 50):
            for seed in range(10):
                r = approx_error(random_balanced(n, 0.5, 2.0, seed=seed))
                self.assertGreater(r.error, 0.0)
                self.assertLessEqual(r.ratio, 1.0)

    def test_dominant_small_slack(self):
        for seed in range(5):
            T = random_dominant(100, 1.0, 1.5, 1.0, seed=seed)
            r = approx_error(T)
            self.assertLessEqual(r.error, r.bound)

    def test_constant_family_closed_form(self):
        n = 20
        T = random_balanced(n, 1.0, 1.0)
        expected = 1 / (2 * (n - 1) * (n - 2)) + 1 / (n * (n - 1))
        self.assertAlmostEqual(approx_error(T).error, expected, places=12)


class TestVerifyIdentities(unittest.TestCase):

    def test_random_instances(self):
        for n in (3, 5, 10, 50):
            for seed in range(10):
                r = verify_identities(random_balanced(n, 0.5, 2.0, seed=seed))
                self.assertLessEqual(r.closed_v, 1e-12)
                self.assertLessEqual(r.closed_w, 1e-12)
                self.assertLessEqual(r.recursion, 1e-10)
                self.assertLessEqual(r.row_identity, 1e-10)
                self.assertLessEqual(r.w_ratio, 1.0 + 1e-12)
                self.assertLessEqual(r.sandwich_gap, 1e-10)

    def test_f_is_consistent_with_s(self):
        T = random_balanced(8, 0.5, 2.0, seed=3)
        f = exact_inverse(T) - build_approx(T).dense()
        assert_allclose(f, f.T, atol=1e-15)


if __name__ == '__main__':
    unittest.main()
