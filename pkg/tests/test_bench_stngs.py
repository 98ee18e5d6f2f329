#!/usr/bin/env python3


import unittest

from balinv.bench import BenchError, BenchStngs


class TestBenchStngs(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(BenchStngs.get_default("trials"), 10)
        self.assertEqual(BenchStngs.get_default("seed"), 0)
        self.assertEqual(BenchStngs.get_default("tol"), 1e-10)
        self.assertIsNone(BenchStngs.get_default("theta"))

    def test_int_ranges(self):
        self.assertEqual(BenchStngs.check("n", 3), 3)
        self.assertEqual(BenchStngs.check("n", 500), 500)
        for val in (2, 501, 3.5):
            with self.assertRaises(BenchError):
                BenchStngs.check("n", val)
        with self.assertRaises(BenchError):
            BenchStngs.check("n_worst", 3)
        self.assertEqual(BenchStngs.check("seed", 2 ** 64 - 1), 2 ** 64 - 1)
        with self.assertRaises(BenchError):
            BenchStngs.check("seed", 2 ** 64)
        with self.assertRaises(BenchError):
            BenchStngs.check("seed", -1)

    def test_real_ranges(self):
        with self.assertRaises(BenchError):
            BenchStngs.check("m", 0.0)
        self.assertEqual(BenchStngs.check("m", 1e6), 1e6)
        with self.assertRaises(BenchError):
            BenchStngs.check("M", float("inf"))
        for val in (0.0, 1.0):
            with self.assertRaises(BenchError):
                BenchStngs.check("tol", val)
            with self.assertRaises(BenchError):
                BenchStngs.check("theta", val)

    def test_bounds_order(self):
        self.assertEqual(BenchStngs.check_bounds(1, 2), (1.0, 2.0))
        with self.assertRaises(BenchError):
            BenchStngs.check_bounds(2, 1)

    def test_empty_n_list(self):
        with self.assertRaises(BenchError):
            BenchStngs.check_n_list([])


if __name__ == '__main__':
    unittest.main()
