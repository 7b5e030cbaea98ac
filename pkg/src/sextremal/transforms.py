#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import logging
from typing import Tuple

# Local modules
from sextremal.bitset import bit, check_element, elements_from_mask, iter_submasks
from sextremal.inclusion_graph import is_connected
from sextremal.set_system import (
    SetSystem,
    check_ground_subset,
    check_nonempty,
    strongly_shattered,
)

log = logging.getLogger(__name__)


def bit_flip(family: SetSystem, i: int) -> SetSystem:
    """Toggle the element i in every member"""
    check_element(i, family.n)
    return SetSystem.from_masks(family.n, (mask ^ bit(i) for mask in family.members))


def halves(family: SetSystem, i: int) -> Tuple[SetSystem, SetSystem]:
    """
    Split a family on the element i.

    @return: The members avoiding i and the members containing i (with i removed), both
             on the ground set [n].
    """
    check_element(i, family.n)
    b = bit(i)
    lower = SetSystem(family.n, tuple(m for m in family.members if not m & b))
    upper = SetSystem.from_masks(family.n, (m ^ b for m in family.members if m & b))
    return lower, upper


def downshift(family: SetSystem, i: int) -> SetSystem:
    """
    Push i out of every member F unless F \\ {i} is already a member.
    """
    check_element(i, family.n)
    b = bit(i)
    return SetSystem.from_masks(
        family.n,
        (
            mask ^ b if mask & b and mask ^ b not in family.member_set else mask
            for mask in family.members
        ),
    )


def meet_family(family: SetSystem, i: int) -> SetSystem:
    """M_i(F): the intersection of both halves of F"""
    lower, upper = halves(family, i)
    return SetSystem(
        family.n, tuple(m for m in lower.members if m in upper.member_set)
    )


def join_family(family: SetSystem, i: int) -> SetSystem:
    """U_i(F): the union of both halves of F"""
    lower, upper = halves(family, i)
    return SetSystem.from_masks(family.n, (*lower.members, *upper.members))


def cube_fiber_family(family: SetSystem, b: int) -> SetSystem:
    """
    Compute F(B) = {I ⊆ [n] \\ B : I + 2^B ⊆ F}. F(∅) = F.
    """
    check_ground_subset(b, family.n)
    return SetSystem(
        family.n,
        tuple(
            mask
            for mask in family.members
            if not mask & b
            and all(mask | h in family.member_set for h in iter_submasks(b))
        ),
    )


def iterated_meet(family: SetSystem, b: int) -> SetSystem:
    """Apply M_i for every element i of B (equals F(B))"""
    check_ground_subset(b, family.n)
    result = family
    for element in elements_from_mask(b):
        result = meet_family(result, element)
    return result


def is_extremal_br(family: SetSystem) -> bool:
    """
    Decide extremality by checking that the inclusion graph of F(B) is connected
    for every B ⊆ [n]. F(B) is nonempty exactly for the strongly shattered B, an
    empty F(B) counts as connected.
    """
    check_nonempty(family)
    for b in strongly_shattered(family):
        if not is_connected(cube_fiber_family(family, b)):
            log.debug(f"Disconnected fiber {b=} ({family})")
            return False
    return True


def shift_to_down_set(family: SetSystem) -> SetSystem:
    """
    Apply the downshifts D_1, ..., D_n until nothing changes. The result is a down-set
    with |F| members.
    """
    current = family
    while True:
        shifted = current
        for i in range(1, family.n + 1):
            shifted = downshift(shifted, i)
        if shifted == current:
            return current
        current = shifted
