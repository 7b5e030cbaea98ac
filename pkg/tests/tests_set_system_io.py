#!/usr/bin/env python3

# Internal packages
import sys
import tempfile
import unittest
from pathlib import Path
from typing import Final, List, Tuple

# Append the module path for sextremal
sys.path.append(str(Path(__file__).parent.parent.joinpath("src")))

# Local modules
from sextremal.set_system import SetSystem
from sextremal.set_system_io import (
    SetSystemParseException,
    format_set_system,
    format_set_system_json,
    parse_set_system,
    parse_set_system_json,
    parse_set_systems,
    read_set_system,
)

SAMPLES_DIR: Final = Path(__file__).parent.parent.joinpath("samples")


class TestParseSetSystem(unittest.TestCase):
    def setUp(self):
        self.test_data: List[Tuple[str, SetSystem]] = [
            ("n=3\n-\n1\n2,3\n", SetSystem(3, (0, 1, 6))),
            ("# comment\nn= 2\n\n1,2 # full set\n", SetSystem(2, (3,))),
            ("1\n1, 3\n", SetSystem(3, (1, 5))),
            ("-\n", SetSystem(0, (0,))),
            ("n=4\n", SetSystem(4, ())),
            ("", SetSystem(0, ())),
        ]

    def test_parse(self):
        for content, expected in self.test_data:
            with self.subTest(content=content):
                result = parse_set_system(content)
                self.assertEqual(result, expected, f"Check {result}=={expected}")

    def test_invalid_content(self):
        for content in [
            "n=2\n1\n1\n",
            "n=2\n3\n",
            "n=3\n2,1\n",
            "1\nn=2\n",
            "n=2\nn=2\n",
            "n=2\n1 2\n",
            "n=2\n{1}\n",
        ]:
            with self.subTest(content=content):
                with self.assertRaises(SetSystemParseException):
                    parse_set_system(content)

    def test_format(self):
        self.assertEqual(format_set_system(SetSystem(2, (0, 3))), "n=2\n-\n1,2\n")
        self.assertEqual(format_set_system(SetSystem(1, ())), "n=1\n")

    def test_format_parses_back(self):
        for _, expected in self.test_data:
            with self.subTest(family=str(expected)):
                self.assertEqual(parse_set_system(format_set_system(expected)), expected)


class TestParseSetSystemJson(unittest.TestCase):
    def test_parse(self):
        test_data: List[Tuple[str, SetSystem]] = [
            ('{"n": 3, "sets": [[], [1], [3, 2]]}', SetSystem(3, (0, 1, 6))),
            ('{"sets": [[2]]}', SetSystem(2, (2,))),
        ]
        for content, expected in test_data:
            with self.subTest(content=content):
                self.assertEqual(parse_set_system_json(content), expected)

    def test_invalid_content(self):
        for content in [
            "[]",
            "{",
            '{"n": 2}',
            '{"n": -1, "sets": []}',
            '{"n": true, "sets": []}',
            '{"n": 2, "sets": [[1, 1]]}',
            '{"n": 2, "sets": [[1], [1]]}',
            '{"n": 2, "sets": [["1"]]}',
            '{"n": 2, "sets": [[3]]}',
        ]:
            with self.subTest(content=content):
                with self.assertRaises(SetSystemParseException):
                    parse_set_system_json(content)

    def test_format_is_stable(self):
        self.assertEqual(
            format_set_system_json(SetSystem(3, (0, 5))), '{"n": 3, "sets": [[], [1, 3]]}'
        )


class TestParseStream(unittest.TestCase):
    def test_stream(self):
        content: Final = "n=2\n-\n1\nn=2\n2\n\nn=1\n1\n"
        result = parse_set_systems(content)
        self.assertListEqual(
            result, [SetSystem(2, (0, 1)), SetSystem(2, (2,)), SetSystem(1, (1,))]
        )

    def test_stream_of_formatted_families(self):
        families = [SetSystem.full(2), SetSystem(3, (0, 7))]
        content = "".join(format_set_system(family) for family in families)
        self.assertListEqual(parse_set_systems(content), families)


class TestReadSetSystem(unittest.TestCase):
    def test_samples(self):
        self.assertEqual(
            read_set_system(SAMPLES_DIR.joinpath("vc1_family.ss")),
            SetSystem.from_sets(
                5, [(1, 5), (1, 2, 5), (2, 5), (2, 4, 5), (2, 3, 4, 5), (2,)]
            ),
        )
        self.assertEqual(
            read_set_system(SAMPLES_DIR.joinpath("path.json")),
            SetSystem(3, (0, 1, 3, 7)),
        )

    def test_json_suffix(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            file_path = Path(tmp_dir).joinpath("family.JSON")
            file_path.write_text('{"n": 2, "sets": [[1, 2]]}', encoding="utf-8")
            self.assertEqual(read_set_system(file_path), SetSystem(2, (3,)))

    def test_tree_suffix_rejected(self):
        with self.assertRaises(SetSystemParseException):
            read_set_system(SAMPLES_DIR.joinpath("vc1_tree.tree"))


if __name__ == "__main__":
    unittest.main()
