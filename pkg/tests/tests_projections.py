#!/usr/bin/env python3

# Internal packages
import json
import random
import sys
import unittest
from pathlib import Path
from typing import Final

# Installed packages
import networkx as nx
from hypothesis import given, settings, strategies as st

# Append the module path for sextremal
sys.path.append(str(Path(__file__).parent.parent.joinpath("src")))

# Local modules
from sextremal.errors import GroundSetTooLargeException, ParameterOutOfRangeException
from sextremal.labeled_tree import LabeledTree, decode_tree
from sextremal.projections import (
    VcMismatchException,
    all_projections_extremal,
    lift,
    verify_lift,
)
from sextremal.random_family import (
    create_rng,
    random_extremal_family,
    random_nonempty_family,
    random_subset,
)
from sextremal.set_system import SetSystem, is_extremal, vc_dimension
from sextremal.set_system_io import read_set_system

SAMPLES_DIR: Final = Path(__file__).parent.parent.joinpath("samples")


def random_tree_family(n: int, rng: random.Random) -> SetSystem:
    """A random extremal family of VC-dimension 1 decoded from a random Prüfer tree"""
    tree = nx.from_prufer_sequence([rng.randrange(n + 1) for _ in range(n - 1)])
    edges = tuple((parent, child, child) for parent, child in nx.bfs_edges(tree, 0))
    family = decode_tree(LabeledTree(n + 1, edges), n)
    flips = random_subset(n, rng)
    return SetSystem.from_masks(n, (mask ^ flips for mask in family.members))


class TestLift(unittest.TestCase):
    def setUp(self):
        self.family = read_set_system(SAMPLES_DIR.joinpath("vc1_family.ss"))

    def test_extremal_family_lifts_to_itself(self):
        self.assertTrue(all_projections_extremal(self.family, 1))
        report = verify_lift(self.family, 1)
        self.assertEqual(report.mode, "exact")
        self.assertEqual(report.window, 3)
        self.assertEqual(report.lifted, self.family)
        self.assertTrue(report.contains_input)
        self.assertTrue(report.lifted_extremal)
        self.assertEqual(report.lifted_vcdim, 1)
        self.assertTrue(report.equality_when_extremal)
        self.assertFalse(report.falsified)

    def test_jobs(self):
        self.assertEqual(lift(self.family, 1, jobs=2), lift(self.family, 1, jobs=1))
        self.assertEqual(lift(self.family, 1, window=2, jobs=3), lift(self.family, 1, window=2))

    def test_window_override(self):
        report = verify_lift(self.family, 1, window=2)
        self.assertEqual(report.mode, "window-override")
        self.assertEqual(report.window, 2)
        self.assertTrue(report.contains_input)
        self.assertFalse(report.falsified)

    def test_relaxed(self):
        test_input = read_set_system(SAMPLES_DIR.joinpath("path.json"))
        with self.assertRaises(VcMismatchException):
            verify_lift(test_input, 2, window=3)
        report = verify_lift(test_input, 2, window=3, relaxed=True)
        self.assertEqual(report.mode, "window-override")
        report = verify_lift(SetSystem.from_sets(3, [(), (1,)]), 1, relaxed=True)
        self.assertEqual(report.mode, "relaxed")

    def test_not_extremal(self):
        test_input = SetSystem.from_sets(3, [(), (1, 2)])
        report = verify_lift(test_input, 1)
        self.assertFalse(report.projections_extremal)
        self.assertEqual(report.lifted, test_input)
        self.assertIsNone(report.equality_when_extremal)
        self.assertFalse(report.falsified)

    def test_json(self):
        result = json.loads(verify_lift(self.family, 1).to_json())
        self.assertEqual(result["mode"], "exact")
        self.assertEqual(result["lifted"]["n"], 5)
        self.assertListEqual(result["violations"], [])

    def test_parameters_out_of_range(self):
        with self.assertRaises(ParameterOutOfRangeException):
            verify_lift(self.family, 0)
        with self.assertRaises(ParameterOutOfRangeException):
            verify_lift(self.family, 1, window=6)
        with self.assertRaises(VcMismatchException):
            verify_lift(self.family, 2)
        with self.assertRaises(GroundSetTooLargeException):
            lift(SetSystem(17, (0, 1)), 1)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_random_extremal_families(self, seed: int):
        test_input = random_extremal_family(6, create_rng(seed))
        t = vc_dimension(test_input)
        if t < 1 or 2 * t + 1 > test_input.n:
            return
        self.assertTrue(is_extremal(test_input))
        report = verify_lift(test_input, t)
        self.assertTrue(report.projections_extremal)
        self.assertFalse(report.falsified, f"Check lift of {test_input}: {report.violations}")
        self.assertEqual(report.lifted, test_input)

    def test_tree_families(self):
        rng = create_rng(1)
        for n in (5, 7):
            for _ in range(20):
                test_input = random_tree_family(n, rng)
                with self.subTest(family=str(test_input)):
                    self.assertTrue(is_extremal(test_input))
                    self.assertEqual(vc_dimension(test_input), 1)
                    report = verify_lift(test_input, 1)
                    self.assertTrue(report.projections_extremal)
                    self.assertFalse(report.falsified, str(report.violations))
                    self.assertEqual(report.lifted, test_input)

    def test_vc2_families_on_five_elements(self):
        checked = 0
        for seed in range(200):
            test_input = random_extremal_family(5, create_rng(seed))
            if vc_dimension(test_input) != 2:
                continue
            checked += 1
            with self.subTest(family=str(test_input)):
                report = verify_lift(test_input, 2)
                self.assertTrue(report.projections_extremal)
                self.assertFalse(report.falsified, str(report.violations))
                self.assertEqual(report.lifted, test_input)
        self.assertGreater(checked, 0)

    def test_non_extremal_family_with_extremal_projections(self):
        singletons = SetSystem.from_sets(5, [(i,) for i in range(1, 6)])
        self.assertFalse(is_extremal(singletons))
        report = verify_lift(singletons, 1)
        self.assertTrue(report.projections_extremal)
        self.assertEqual(report.lifted, singletons.with_member(0))
        self.assertTrue(report.contains_input)
        self.assertTrue(report.lifted_extremal)
        self.assertEqual(report.lifted_vcdim, 1)
        self.assertIsNone(report.equality_when_extremal)
        self.assertFalse(report.falsified)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=3, max_value=6), st.integers(min_value=0))
    def test_lift_is_idempotent(self, n: int, seed: int):
        test_input = random_nonempty_family(n, create_rng(seed))
        lifted = lift(test_input, 1)
        self.assertTrue(test_input.member_set <= lifted.member_set)
        self.assertEqual(lift(lifted, 1), lifted)


if __name__ == "__main__":
    unittest.main()
