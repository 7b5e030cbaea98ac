#!/usr/bin/env python3

# Internal packages
import sys
import unittest
from pathlib import Path
from typing import Final, Tuple

# Installed packages
from hypothesis import given, settings, strategies as st

# Append the module path for sextremal
sys.path.append(str(Path(__file__).parent.parent.joinpath("src")))

# Local modules
from sextremal.inclusion_graph import (
    DisconnectedException,
    build_inclusion_graph,
    classify_vc1_extremal,
    connected_components,
    flip_reverses_label_edges,
    graph_to_dot,
    is_connected,
    is_isometric_in_cube,
    isometry_witness,
    leaves,
)
from sextremal.set_system import EmptyFamilyException, SetSystem, is_extremal, vc_dimension
from sextremal.set_system_io import read_set_system

SAMPLES_DIR: Final = Path(__file__).parent.parent.joinpath("samples")

families = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.sets(st.integers(min_value=0, max_value=(1 << n) - 1), min_size=1).map(
        lambda masks: SetSystem.from_masks(n, masks)
    )
)


def family(n: int, *sets: Tuple[int, ...]) -> SetSystem:
    return SetSystem.from_sets(n, sets)


class TestBuildInclusionGraph(unittest.TestCase):
    def setUp(self):
        self.path = family(2, (), (1,), (1, 2))

    def test_edges(self):
        graph = build_inclusion_graph(self.path)
        self.assertTupleEqual(graph.edges, ((0, 1, 1), (1, 3, 2)))
        self.assertListEqual(graph.labels, [1, 2])
        self.assertEqual(graph.to_networkx().number_of_edges(), 2)
        self.assertEqual(graph.to_networkx().edges[1, 3]["label"], 2)

    def test_full_cube(self):
        graph = build_inclusion_graph(SetSystem.full(3))
        self.assertEqual(len(graph.edges), 12)
        self.assertEqual(sorted(graph.labels).count(1), 4)

    def test_empty_family(self):
        with self.assertRaises(EmptyFamilyException):
            build_inclusion_graph(SetSystem.empty(2))

    def test_leaves(self):
        self.assertListEqual(leaves(self.path), [0, 3])
        self.assertListEqual(leaves(SetSystem.full(2)), [])

    def test_dot(self):
        self.assertEqual(
            graph_to_dot(build_inclusion_graph(family(1, (), (1,)))),
            'digraph inclusion_graph {\n  0 [label="∅"];\n  1 [label="{1}"];\n'
            "  0 -> 1 [label=1];\n}\n",
        )


class TestConnectivity(unittest.TestCase):
    def test_components(self):
        self.assertListEqual(connected_components(family(2, (), (1, 2))), [(0,), (3,)])
        self.assertListEqual(
            connected_components(family(3, (), (1,), (2, 3), (1, 2, 3))), [(0, 1), (6, 7)]
        )
        self.assertListEqual(connected_components(SetSystem.full(2)), [(0, 1, 2, 3)])

    def test_is_connected(self):
        self.assertTrue(is_connected(SetSystem.empty(2)))
        self.assertTrue(is_connected(family(2, (1,))))
        self.assertFalse(is_connected(family(2, (1,), (2,))))

    @settings(max_examples=200, deadline=None)
    @given(families)
    def test_components_partition_members(self, test_input: SetSystem):
        components = connected_components(test_input)
        self.assertListEqual(sorted(m for c in components for m in c), list(test_input.members))
        self.assertEqual(is_connected(test_input), len(components) == 1)
        component_of = {m: index for index, c in enumerate(components) for m in c}
        for g, f, _ in build_inclusion_graph(test_input).edges:
            self.assertEqual(component_of[g], component_of[f])
        # members that differ in one element always share a component
        for g in test_input.members:
            for j in range(test_input.n):
                if g ^ (1 << j) in test_input.member_set:
                    self.assertEqual(component_of[g], component_of[g ^ (1 << j)])


class TestIsometry(unittest.TestCase):
    def test_witness(self):
        test_input = read_set_system(SAMPLES_DIR.joinpath("non_isometric.ss"))
        self.assertTupleEqual(isometry_witness(test_input), (0, 6))
        self.assertFalse(is_isometric_in_cube(test_input))

    def test_isometric(self):
        self.assertIsNone(isometry_witness(SetSystem.full(3)))
        self.assertTrue(
            is_isometric_in_cube(read_set_system(SAMPLES_DIR.joinpath("vc1_family.ss")))
        )

    def test_disconnected(self):
        with self.assertRaises(DisconnectedException):
            isometry_witness(family(2, (), (1, 2)))

    def test_extremal_families_are_isometric(self):
        for n in range(1, 4):
            for bitmap in range(1, 1 << (1 << n)):
                test_input = SetSystem(
                    n, tuple(mask for mask in range(1 << n) if bitmap >> mask & 1)
                )
                if is_extremal(test_input):
                    self.assertTrue(
                        is_isometric_in_cube(test_input), f"Check isometry of {test_input}"
                    )


class TestClassifyVc1Extremal(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(classify_vc1_extremal(family(2, (), (1,), (1, 2))))
        self.assertTrue(classify_vc1_extremal(family(2, ())))
        self.assertFalse(classify_vc1_extremal(SetSystem.full(2)))
        self.assertFalse(classify_vc1_extremal(family(2, (1,), (2,))))
        self.assertTrue(
            classify_vc1_extremal(read_set_system(SAMPLES_DIR.joinpath("vc1_family.ss")))
        )

    @settings(max_examples=300, deadline=None)
    @given(families)
    def test_matches_extremality(self, test_input: SetSystem):
        self.assertEqual(
            classify_vc1_extremal(test_input),
            is_extremal(test_input) and vc_dimension(test_input) <= 1,
        )

    @settings(max_examples=200, deadline=None)
    @given(families, st.data())
    def test_flip_reverses_label_edges(self, test_input: SetSystem, data):
        i = data.draw(st.integers(min_value=1, max_value=test_input.n))
        self.assertTrue(flip_reverses_label_edges(test_input, i))


if __name__ == "__main__":
    unittest.main()
