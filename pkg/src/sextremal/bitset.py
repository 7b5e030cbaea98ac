#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
from itertools import combinations
from typing import Iterable, Iterator, List, Tuple

# Local modules
from sextremal.errors import InputException


class ElementOutOfRangeException(InputException):
    """Raised when an element is not part of the ground set [n]"""

    pass


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bit(element: int) -> int:
    """Mask of the single element set {element} (elements start at 1)"""
    return 1 << (element - 1)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def check_element(element: int, n: int):
    if not 1 <= element <= n:
        raise ElementOutOfRangeException(f"Element is not in [n] ({element=}, {n=})")


def mask_from_elements(elements: Iterable[int], n: int) -> int:
    mask = 0
    for element in elements:
        check_element(element, n)
        mask |= bit(element)
    return mask


def elements_from_mask(mask: int) -> Tuple[int, ...]:
    elements: List[int] = []
    element = 1
    while mask:
        if mask & 1:
            elements.append(element)
        mask >>= 1
        element += 1
    return tuple(elements)


def iter_submasks(mask: int) -> Iterator[int]:
    """
    Iterate all submasks of a mask in decreasing order (mask itself first, 0 last).
    """
    submask = mask
    while True:
        yield submask
        if submask == 0:
            return
        submask = (submask - 1) & mask


def iter_masks_of_size(n: int, k: int) -> Iterator[int]:
    """
    Iterate all k element subsets of [n] in increasing mask order (Gosper's hack).
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = full_mask(k)
    limit = 1 << n
    while mask < limit:
        yield mask
        lowest = mask & -mask
        ripple = mask + lowest
        mask = (((ripple ^ mask) >> 2) // lowest) | ripple


def iter_subsets_of(elements: Tuple[int, ...], k: int) -> Iterator[int]:
    """Iterate the masks of all k element subsets of the given elements"""
    for chosen in combinations(elements, k):
        yield sum(bit(element) for element in chosen)


def compress_mask(mask: int, window: Tuple[int, ...]) -> int:
    """
    Re-index the part of a mask inside a window: the j-th smallest window element
    becomes element j.
    """
    compressed = 0
    for index, element in enumerate(window):
        if mask & bit(element):
            compressed |= 1 << index
    return compressed


def format_mask(mask: int) -> str:
    """Human readable set notation, i.e. '{1,2,5}' or '∅'"""
    if mask == 0:
        return "∅"
    return "{" + ",".join(str(element) for element in elements_from_mask(mask)) + "}"
