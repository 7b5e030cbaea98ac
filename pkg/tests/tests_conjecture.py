#!/usr/bin/env python3

# Internal packages
import json
import sys
import unittest
from pathlib import Path

# Append the module path for sextremal
sys.path.append(str(Path(__file__).parent.parent.joinpath("src")))

# Local modules
from sextremal.conjecture import (
    MAX_RECORDED_COUNTEREXAMPLES,
    SCAN_MODE_EXHAUSTIVE,
    SCAN_MODE_RANDOM,
    ConjectureScanReport,
    conjecture_scan,
)
from sextremal.errors import GroundSetTooLargeException, ParameterOutOfRangeException


class TestExhaustiveScan(unittest.TestCase):
    def test_counts(self):
        # n, nonempty families, extremal families
        test_data = [(1, 3, 3), (2, 15, 13)]
        for n, families, extremal in test_data:
            with self.subTest(n=n):
                report = conjecture_scan(n)
                self.assertEqual(report.families_scanned, families)
                self.assertEqual(report.extremal_families, extremal)
                self.assertFalse(report.falsified)

    def test_no_counterexamples(self):
        report = conjecture_scan(3, SCAN_MODE_EXHAUSTIVE)
        self.assertEqual(report.families_scanned, 255)
        self.assertFalse(report.falsified)
        self.assertListEqual(report.removal_counterexamples, [])
        self.assertListEqual(report.addition_counterexamples, [])
        self.assertEqual(report.duality_mismatches, 0)
        self.assertGreater(report.removable_found, 0)
        self.assertGreater(report.addable_found, 0)

    def test_four_elements(self):
        report = conjecture_scan(4, SCAN_MODE_EXHAUSTIVE, jobs=2)
        self.assertEqual(report.families_scanned, 65535)
        self.assertEqual(report.extremal_families, 5529)
        self.assertFalse(report.falsified)
        self.assertEqual(report.duality_mismatches, 0)

    def test_jobs(self):
        self.assertEqual(conjecture_scan(3, jobs=2), conjecture_scan(3, jobs=1))

    def test_json(self):
        result = json.loads(conjecture_scan(2).to_json())
        self.assertEqual(result["mode"], SCAN_MODE_EXHAUSTIVE)
        self.assertEqual(result["families_scanned"], 15)
        self.assertFalse(result["falsified"])


class TestRandomScan(unittest.TestCase):
    def test_random(self):
        report = conjecture_scan(4, SCAN_MODE_RANDOM, count=300, seed=1)
        self.assertEqual(report.families_scanned, 300)
        self.assertGreater(report.extremal_families, 0)
        self.assertFalse(report.falsified)

    def test_reproducible(self):
        self.assertEqual(
            conjecture_scan(4, SCAN_MODE_RANDOM, count=300, seed=2, jobs=2),
            conjecture_scan(4, SCAN_MODE_RANDOM, count=300, seed=2, jobs=1),
        )


class TestScanParameters(unittest.TestCase):
    def test_out_of_range(self):
        with self.assertRaises(GroundSetTooLargeException):
            conjecture_scan(5, SCAN_MODE_EXHAUSTIVE)
        with self.assertRaises(GroundSetTooLargeException):
            conjecture_scan(9, SCAN_MODE_RANDOM, count=1)
        with self.assertRaises(ParameterOutOfRangeException):
            conjecture_scan(3, SCAN_MODE_RANDOM, count=0)
        with self.assertRaises(ParameterOutOfRangeException):
            conjecture_scan(0)
        with self.assertRaises(ParameterOutOfRangeException):
            conjecture_scan(3, "greedy")


class TestMerge(unittest.TestCase):
    def test_recorded_counterexamples_are_capped(self):
        report = ConjectureScanReport(2, SCAN_MODE_RANDOM, families_scanned=1)
        other = ConjectureScanReport(
            2,
            SCAN_MODE_RANDOM,
            families_scanned=20,
            removal_counterexamples=[[(1,)]] * 20,
        )
        report.merge(other)
        report.merge(other)
        self.assertEqual(report.families_scanned, 41)
        self.assertEqual(len(report.removal_counterexamples), MAX_RECORDED_COUNTEREXAMPLES)
        self.assertTrue(report.falsified)


if __name__ == "__main__":
    unittest.main()
