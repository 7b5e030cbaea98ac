#!/usr/bin/env python3

# Internal packages
import sys
import unittest
from pathlib import Path
from typing import Final, List

# Append the module path for sextremal
sys.path.append(str(Path(__file__).parent.parent.joinpath("src")))

# Local modules
from sextremal.errors import GroundSetTooLargeException, ParameterOutOfRangeException
from sextremal.inclusion_graph import classify_vc1_extremal
from sextremal.info.limits import MAX_ENUMERATION_N
from sextremal.labeled_tree import (
    InvalidTreeException,
    LabeledTree,
    PreconditionViolatedException,
    canonical_tree_key,
    class_size,
    count_vc1_extremal_partition,
    decode_tree,
    decode_tree_vertices,
    encode_family,
    enumerate_vc1_extremal,
    expected_vc1_extremal_count,
    format_tree,
    parse_tree,
    tree_to_dot,
    two_layer_families,
    two_layer_from_tree,
)
from sextremal.random_family import family_from_bitmap
from sextremal.set_system import (
    SetSystem,
    common_intersection,
    dual_family,
    is_extremal,
    support,
    vc_dimension,
)
from sextremal.set_system_io import read_set_system

SAMPLES_DIR: Final = Path(__file__).parent.parent.joinpath("samples")


class TestParseTree(unittest.TestCase):
    def setUp(self):
        self.tree = parse_tree(SAMPLES_DIR.joinpath("vc1_tree.tree").read_text())

    def test_sample(self):
        self.assertEqual(self.tree.m, 6)
        self.assertTupleEqual(
            self.tree.edges, ((0, 1, 2), (2, 1, 1), (2, 3, 4), (3, 4, 3), (5, 2, 5))
        )
        self.assertListEqual(self.tree.labels, [1, 2, 3, 4, 5])

    def test_format(self):
        content: Final = "3\n0 1 1\n2 1 2\n"
        self.assertEqual(format_tree(parse_tree(content)), content)

    def test_dot(self):
        self.assertEqual(
            tree_to_dot(LabeledTree(2, ((0, 1, 1),))),
            "digraph tree {\n  0;\n  1;\n  0 -> 1 [label=1];\n}\n",
        )

    def test_invalid_content(self):
        for content in [
            "",
            "# only a comment\n",
            "x\n0 1 1\n",
            "2\n0 1\n",
            "2\n0 -1 1\n",
        ]:
            with self.subTest(content=content):
                with self.assertRaises(InvalidTreeException):
                    parse_tree(content)

    def test_invalid_trees(self):
        test_data: List[tuple] = [
            (0, ()),
            (3, ((0, 1, 1),)),
            (3, ((0, 1, 1), (1, 2, 1))),
            (3, ((0, 1, 1), (1, 0, 2))),
            (2, ((0, 2, 1),)),
            (2, ((0, 1, 0),)),
        ]
        for m, edges in test_data:
            with self.subTest(m=m, edges=edges):
                with self.assertRaises(InvalidTreeException):
                    LabeledTree(m, edges)


class TestDecodeTree(unittest.TestCase):
    def setUp(self):
        self.tree = parse_tree(SAMPLES_DIR.joinpath("vc1_tree.tree").read_text())
        self.family = read_set_system(SAMPLES_DIR.joinpath("vc1_family.ss"))

    def test_vertices(self):
        self.assertDictEqual(
            decode_tree_vertices(self.tree),
            {0: 0b10001, 1: 0b10011, 2: 0b10010, 3: 0b11010, 4: 0b11110, 5: 0b00010},
        )

    def test_decode(self):
        self.assertEqual(decode_tree(self.tree), self.family)
        self.assertEqual(decode_tree(self.tree, 6).n, 6)

    def test_labels_outside_ground_set(self):
        with self.assertRaises(InvalidTreeException):
            decode_tree(self.tree, 4)

    def test_single_vertex(self):
        self.assertEqual(decode_tree(LabeledTree(1)), SetSystem(0, (0,)))

    def test_encode(self):
        encoded = encode_family(self.family)
        self.assertEqual(encoded.m, len(self.family))
        self.assertEqual(decode_tree(encoded), self.family)
        self.assertEqual(canonical_tree_key(encoded), canonical_tree_key(self.tree))

    def test_encode_preconditions(self):
        for test_input in [
            SetSystem.empty(2),
            SetSystem.full(2),
            SetSystem.from_sets(2, [(), (1,)]),
            SetSystem.from_sets(2, [(1,), (1, 2)]),
        ]:
            with self.subTest(family=str(test_input)):
                with self.assertRaises(PreconditionViolatedException):
                    encode_family(test_input)


class TestEnumerate(unittest.TestCase):
    def test_expected_count(self):
        self.assertListEqual(
            [expected_vc1_extremal_count(n) for n in range(1, 5)], [1, 4, 32, 400]
        )

    def test_count(self):
        for n in range(1, 5):
            with self.subTest(n=n):
                families = list(enumerate_vc1_extremal(n))
                self.assertEqual(len(families), expected_vc1_extremal_count(n))
                self.assertEqual(len(set(families)), len(families))

    def test_enumerated_families(self):
        for test_input in enumerate_vc1_extremal(3):
            with self.subTest(family=str(test_input)):
                self.assertEqual(len(test_input), 4)
                self.assertTrue(classify_vc1_extremal(test_input))
                self.assertEqual(support(test_input), 0b111)
                self.assertEqual(common_intersection(test_input), 0)

    def test_small_ground_set(self):
        self.assertListEqual(list(enumerate_vc1_extremal(1)), [SetSystem(1, (0, 1))])
        self.assertSetEqual(
            set(enumerate_vc1_extremal(2)),
            {
                SetSystem(2, (0, 1, 3)),
                SetSystem(2, (0, 2, 3)),
                SetSystem(2, (0, 1, 2)),
                SetSystem(2, (1, 2, 3)),
            },
        )

    def test_matches_brute_force_filter(self):
        for n in range(1, 5):
            expected = set()
            for bitmap in range(1, 1 << (1 << n)):
                candidate = family_from_bitmap(n, bitmap)
                if (
                    support(candidate) == (1 << n) - 1
                    and common_intersection(candidate) == 0
                    and vc_dimension(candidate) <= 1
                    and is_extremal(candidate)
                ):
                    expected.add(candidate)
            with self.subTest(n=n):
                self.assertEqual(len(expected), expected_vc1_extremal_count(n))
                self.assertSetEqual(set(enumerate_vc1_extremal(n)), expected)

    def test_encode_decode(self):
        for n in range(1, 5):
            for test_input in enumerate_vc1_extremal(n):
                with self.subTest(family=str(test_input)):
                    tree = encode_family(test_input)
                    decoded = decode_tree(tree, n)
                    self.assertEqual(decoded, test_input)
                    self.assertEqual(
                        canonical_tree_key(encode_family(decoded)), canonical_tree_key(tree)
                    )

    def test_partitions(self):
        n: Final = 3
        self.assertEqual(
            sum(count_vc1_extremal_partition(n, first) for first in range(n + 1)),
            expected_vc1_extremal_count(n),
        )

    def test_out_of_range(self):
        with self.assertRaises(ParameterOutOfRangeException):
            enumerate_vc1_extremal(0)
        with self.assertRaises(GroundSetTooLargeException):
            enumerate_vc1_extremal(MAX_ENUMERATION_N + 1)


class TestTwoLayer(unittest.TestCase):
    def setUp(self):
        self.tree = LabeledTree(3, ((0, 1, 1), (1, 2, 2)))

    def test_layers(self):
        self.assertEqual(two_layer_from_tree(self.tree, 0), SetSystem(2, (1, 2, 3)))
        self.assertEqual(two_layer_from_tree(self.tree, 1), SetSystem(2, (0, 1, 2)))
        self.assertEqual(class_size(self.tree, 0), 2)
        self.assertEqual(class_size(self.tree, 1), 1)

    def test_sample_layers(self):
        tree = parse_tree(SAMPLES_DIR.joinpath("vc1_tree.tree").read_text())
        for cls in (0, 1):
            with self.subTest(cls=cls):
                k = class_size(tree, cls)
                result = two_layer_from_tree(tree, cls)
                self.assertEqual(len(result), tree.m)
                self.assertSetEqual(set(result.layer_profile()), {k - 1, k})
                self.assertTrue(classify_vc1_extremal(result))

    def test_invalid_class(self):
        with self.assertRaises(ParameterOutOfRangeException):
            two_layer_from_tree(self.tree, 2)

    def test_two_layer_families(self):
        for n in range(1, 5):
            families = two_layer_families(n)
            known = set(families)
            for family in families:
                with self.subTest(n=n, family=str(family)):
                    layers = sorted(family.layer_profile())
                    self.assertEqual(len(family), n + 1)
                    self.assertEqual(layers[-1] - layers[0], 1)
                    self.assertTrue(classify_vc1_extremal(family))
                    self.assertIn(dual_family(family), known)
        with self.assertRaises(ParameterOutOfRangeException):
            two_layer_families(0)


if __name__ == "__main__":
    unittest.main()
