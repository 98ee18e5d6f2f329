#!/usr/bin/env python3

"""Preconditioned CG sweep at n = 200."""


import unittest

import numpy as np

from balinv.mtx import random_balanced
from balinv.orcl import exact_inverse
from balinv.slv import make_preconditioner, pcg
from balinv.bench import trial_seed


N = 200
INSTANCES = 50
TOL = 1e-10


class TestAcceptPcg(unittest.TestCase):

    def setUp(self):
        self.cases = []
        for k in range(INSTANCES):
            ss = trial_seed(5, N, k)
            T = random_balanced(N, 0.5, 2.0, seed=ss)
            b = np.random.default_rng(ss.spawn(1)[0]).standard_normal(N)
            self.cases.append((T, b))

    def _iterations(self, kind, theta=None):
        counts = []
        for T, b in self.cases:
            x, rep = pcg(T, b, make_preconditioner(kind, T, theta), TOL)
            self.assertTrue(rep.converged)
            self.assertLessEqual(rep.iterations, 4 * N)
            counts.append(rep.iterations)
        return np.array(counts)

    def test_damped_solution_matches_oracle(self):
        for T, b in self.cases[:10]:
            x, rep = pcg(T, b, make_preconditioner("damped-s", T), 1e-12)
            ref = exact_inverse(T) @ b
            self.assertLessEqual(
                np.linalg.norm(x - ref) / np.linalg.norm(ref), 1e-8)

    def test_iteration_counts(self):
        none = self._iterations("none")
        damped = self._iterations("damped-s")
        half = self._iterations("damped-s", theta=0.5)
        # theta = 1/2 puts the all-ones eigenvalue of S_theta T at 1
        self.assertGreaterEqual(np.mean(half <= none), 0.9)
        # the default theta leaves one eigenvalue at 2/n
        self.assertGreaterEqual(np.mean(damped <= none + 3), 0.9)


if __name__ == '__main__':
    unittest.main()
