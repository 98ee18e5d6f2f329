#!/usr/bin/env python3

"""Sweeps of the error bounds and proof identities over random instances."""


import unittest

import numpy as np

from balinv.mtx import from_off_diagonals, random_balanced, random_dominant
from balinv.apx import build_approx, error_bound
from balinv.orcl import approx_error, verify_identities
from balinv.bench import trial_seed


class TestAcceptBounds(unittest.TestCase):

    def test_balanced_bound_never_violated(self):
        m, M = 0.5, 2.0
        dims = (3, 5, 10, 20, 50, 100)
        violations = 0
        for k in range(1000):
            n = dims[k % len(dims)]
            T = random_balanced(n, m, M, seed=trial_seed(1, n, k))
            err = approx_error(T).error
            if err > error_bound(m, M, n).bound:
                violations += 1
        self.assertEqual(violations, 0)

    def test_n3_anchor(self):
        r = approx_error(from_off_diagonals(3, [1, 1, 1]))
        self.assertLessEqual(abs(r.error - 5 / 12), 1e-12)
        self.assertEqual(r.bound, 0.625)
        self.assertLessEqual(abs(r.ratio - 2 / 3), 1e-12)

    def test_identities(self):
        dims = (3, 5, 10, 50)
        for k in range(200):
            n = dims[k % len(dims)]
            T = random_balanced(n, 0.5, 2.0, seed=trial_seed(2, n, k))
            r = verify_identities(T)
            self.assertLessEqual(r.closed_v, 1e-12)
            self.assertLessEqual(r.closed_w, 1e-12)
            self.assertLessEqual(r.recursion, 1e-10)
            self.assertLessEqual(r.row_identity, 1e-10)
            self.assertLessEqual(r.w_ratio, 1.0 + 1e-12)
            self.assertLessEqual(r.sandwich_gap, 1e-10)

    def test_kernel_and_psd(self):
        rng = np.random.default_rng(3)
        for n in (3, 5, 10, 50, 100):
            T = random_balanced(n, 0.5, 2.0, seed=n)
            S = build_approx(T)
            self.assertLessEqual(np.max(np.abs(S.apply(T.diag))),
                                 1e-13 * np.max(T.diag))
            for x in rng.standard_normal((200, n)):
                self.assertGreaterEqual(S.quad_form(x), -1e-13 * (x @ x))

    def test_dominant_bound(self):
        n, m, M = 100, 1.0, 2.0
        for k in range(100):
            T = random_dominant(n, m, M, m, seed=trial_seed(4, n, k))
            r = approx_error(T)
            self.assertLessEqual(r.error, r.bound)


if __name__ == '__main__':
    unittest.main()
