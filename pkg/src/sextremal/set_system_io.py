#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import json
import logging
import re
from pathlib import Path
from typing import Dict, Final, List, Optional, Tuple

# Local modules
from sextremal.bitset import elements_from_mask, mask_from_elements
from sextremal.errors import InputException
from sextremal.info.general import (
    SEXTREMAL_JSON_FILE_EXTENSION,
    SEXTREMAL_SS_COMMENT_PREFIX,
    SEXTREMAL_SS_EMPTY_SET,
    SEXTREMAL_SS_HEADER_PREFIX,
    SEXTREMAL_TREE_FILE_EXTENSION,
)
from sextremal.set_system import SetSystem

# Logger
log = logging.getLogger(__name__)

# Constants
REGEX_SS_HEADER: Final = re.compile(
    rf"^{re.escape(SEXTREMAL_SS_HEADER_PREFIX)}\s*(\d+)$"
)
"""
Regex expression to parse the optional set system header: 'n=<k>'
The first group is the ground set size.
"""

REGEX_SS_SET: Final = re.compile(r"^\d+(?:\s*,\s*\d+)*$")
"""
Regex expression to match a comma separated list of positive integers: '1, 2,5'
"""


class SetSystemParseException(InputException):
    """Raised when a set system text or JSON document cannot be parsed"""

    pass


def _strip_comment(line: str) -> str:
    return line.split(SEXTREMAL_SS_COMMENT_PREFIX, 1)[0].strip()


def _build_set_system(
    n: Optional[int], sets: List[Tuple[int, Tuple[int, ...]]], source: str
) -> SetSystem:
    if n is None:
        n = max((max(elements, default=0) for _, elements in sets), default=0)
        log.debug(f"No ground set size was given, use the largest element ({n=})")
    masks: List[int] = []
    seen: Dict[int, int] = dict()
    for line_number, elements in sets:
        if any(not 1 <= element <= n for element in elements):
            raise SetSystemParseException(
                f"Element out of range [1, {n}] ({source}:{line_number}, {elements=})"
            )
        mask = mask_from_elements(elements, n)
        if mask in seen:
            raise SetSystemParseException(
                f"Duplicated set ({source}:{line_number}, first seen in line {seen[mask]})"
            )
        seen[mask] = line_number
        masks.append(mask)
    return SetSystem.from_masks(n, masks)


def parse_set_system(content: str, source: str = "<string>") -> SetSystem:
    """
    Parse the set system text format: an optional header 'n=<k>', then one set per
    line as ascending comma separated elements, '-' for the empty set and '#' for
    comments.

    @param content: The text content.
    @param source: Name of the source for error messages.
    @return: The parsed set system.
    """
    n: Optional[int] = None
    sets: List[Tuple[int, Tuple[int, ...]]] = []
    for line_number, raw_line in enumerate(content.splitlines(), start=1):
        line = _strip_comment(raw_line)
        if len(line) == 0:
            continue
        header_match = REGEX_SS_HEADER.match(line)
        if header_match is not None:
            if n is not None or len(sets) > 0:
                raise SetSystemParseException(
                    f"Header must be the first entry ({source}:{line_number}, {line=})"
                )
            n = int(header_match.group(1))
            continue
        if line == SEXTREMAL_SS_EMPTY_SET:
            sets.append((line_number, ()))
            continue
        if REGEX_SS_SET.match(line) is None:
            raise SetSystemParseException(
                f"Unable to parse set ({source}:{line_number}, {line=})"
            )
        elements = tuple(int(element) for element in line.split(","))
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise SetSystemParseException(
                f"Elements are not strictly ascending ({source}:{line_number}, {line=})"
            )
        sets.append((line_number, elements))
    return _build_set_system(n, sets, source)


def parse_set_system_json(content: str, source: str = "<string>") -> SetSystem:
    """Parse the JSON alternative '{"n": k, "sets": [[...], ...]}'"""
    try:
        document = json.loads(content)
    except ValueError as err:
        raise SetSystemParseException(f"Invalid JSON ({source}, {err})")
    if not isinstance(document, dict) or not isinstance(document.get("sets"), list):
        raise SetSystemParseException(f"Expected an object with a 'sets' list ({source})")
    n = document.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 0):
        raise SetSystemParseException(f"Invalid ground set size ({source}, {n=})")
    sets: List[Tuple[int, Tuple[int, ...]]] = []
    for index, elements in enumerate(document["sets"]):
        if not isinstance(elements, list) or not all(
            isinstance(e, int) and not isinstance(e, bool) for e in elements
        ):
            raise SetSystemParseException(
                f"Set is not a list of integers ({source}, {index=}, {elements=})"
            )
        if len(set(elements)) != len(elements):
            raise SetSystemParseException(
                f"Set contains an element twice ({source}, {index=}, {elements=})"
            )
        sets.append((index, tuple(sorted(elements))))
    return _build_set_system(n, sets, source)


def parse_set_systems(content: str, source: str = "<string>") -> List[SetSystem]:
    """
    Parse a stream of set system documents that each start with a header.
    """
    blocks: List[List[str]] = []
    for line in content.splitlines():
        if REGEX_SS_HEADER.match(_strip_comment(line)) is not None or len(blocks) == 0:
            blocks.append([])
        blocks[-1].append(line)
    return [
        parse_set_system("\n".join(block), source)
        for block in blocks
        if any(len(_strip_comment(line)) > 0 for line in block)
    ]


def read_set_system(file_path: Path) -> SetSystem:
    """Read a set system file (JSON if the file name ends with '.json')"""
    log.debug(f"Read set system {file_path!r}")
    suffix = file_path.suffix.lower()
    if suffix == SEXTREMAL_TREE_FILE_EXTENSION:
        raise SetSystemParseException(
            f"Tree files are not set systems, decode them first ({file_path!r})"
        )
    with open(file_path, "r", encoding="utf-8") as file:
        content = file.read()
    if suffix == SEXTREMAL_JSON_FILE_EXTENSION:
        return parse_set_system_json(content, str(file_path))
    return parse_set_system(content, str(file_path))


def format_set_system(family: SetSystem) -> str:
    lines = [f"{SEXTREMAL_SS_HEADER_PREFIX}{family.n}"]
    for mask in family.members:
        elements = elements_from_mask(mask)
        lines.append(
            ",".join(str(e) for e in elements)
            if len(elements) > 0
            else SEXTREMAL_SS_EMPTY_SET
        )
    return "\n".join(lines) + "\n"


def set_system_to_json_object(family: SetSystem) -> dict:
    return {"n": family.n, "sets": [list(elements) for elements in family.as_sets()]}


def format_set_system_json(family: SetSystem) -> str:
    return json.dumps(set_system_to_json_object(family), sort_keys=True)
