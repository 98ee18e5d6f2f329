#!/usr/bin/env python3

"""Convergence rate and worst-case sharpness sweeps."""


import unittest

import numpy as np

from balinv.orcl import worst_case_limit
from balinv.bench import cmd_rate_fit, cmd_worst_case


N_LIST = [10, 20, 40, 80, 160]


class TestAcceptRate(unittest.TestCase):

    def test_constant_family_slope(self):
        fit = cmd_rate_fit(N_LIST, 1.0, 1.0, 1, 0)
        self.assertTrue(-2.3 <= fit.slope <= -1.8, fit.slope)

    def test_random_family_slope(self):
        fit = cmd_rate_fit(N_LIST, 0.5, 2.0, 5, 0)
        self.assertTrue(-2.3 <= fit.slope <= -1.8, fit.slope)

    def test_worst_case_sharpness(self):
        rows = cmd_worst_case([20, 50, 100, 200], 1.0, 2.0)
        scaled = np.array([r.scaled_error for r in rows])
        self.assertTrue(np.all(np.diff(scaled) > 0.0), scaled)
        limit = worst_case_limit(1.0, 2.0)
        self.assertLess(abs(scaled[-1] - limit) / limit, 0.02)
        # of the same order as the nominal 1/m
        self.assertLess(scaled[-1], 1.5 / 1.0)
        self.assertGreater(scaled[-1], 1.0)


if __name__ == '__main__':
    unittest.main()
