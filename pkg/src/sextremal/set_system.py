#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

# Local modules
from sextremal.bitset import (
    bit,
    compress_mask,
    elements_from_mask,
    format_mask,
    full_mask,
    iter_submasks,
    mask_from_elements,
    popcount,
)
from sextremal.errors import GroundSetTooLargeException, InputException
from sextremal.info.limits import MAX_GROUND_SET_SIZE

log = logging.getLogger(__name__)


class InvalidSetSystemException(InputException):
    """Raised when the masks of a set system are not in canonical form"""

    pass


class EmptyFamilyException(InputException):
    """Raised when an operation requires a nonempty family"""

    pass


class NotExtremalException(InputException):
    """Raised when an operation requires a shattering-extremal family"""

    pass


class InvalidGroundSubsetException(InputException):
    """Raised when a subset is not contained in the ground set [n]"""

    pass


class LayerViolationException(InputException):
    """Raised when a member size is outside of the requested band of layers"""

    pass


@dataclass(frozen=True)
class SetSystem:
    """
    A family of subsets of the ground set [n] stored as strictly increasing n-bit masks
    (bit i-1 <=> element i).
    """

    n: int
    """Ground set size."""
    members: Tuple[int, ...] = ()
    """Strictly increasing member masks."""
    index_map: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    """For re-indexed projections: the original element of every new element 1..n."""

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND_SET_SIZE:
            raise GroundSetTooLargeException(
                f"Ground set size is not supported ({self.n=}, {MAX_GROUND_SET_SIZE=})"
            )
        limit = 1 << self.n
        previous = -1
        for mask in self.members:
            if mask <= previous:
                raise InvalidSetSystemException(
                    f"Members are not strictly increasing ({previous=}, {mask=})"
                )
            if mask >= limit:
                raise InvalidSetSystemException(
                    f"Member is not a subset of [n] ({format_mask(mask)}, {self.n=})"
                )
            previous = mask

    @staticmethod
    def from_masks(n: int, masks: Iterable[int]) -> SetSystem:
        """Create the canonical form (duplicates are merged)"""
        return SetSystem(n, tuple(sorted(set(masks))))

    @staticmethod
    def from_sets(n: int, sets: Iterable[Iterable[int]]) -> SetSystem:
        return SetSystem.from_masks(
            n, (mask_from_elements(elements, n) for elements in sets)
        )

    @staticmethod
    def full(n: int) -> SetSystem:
        return SetSystem(n, tuple(range(1 << n)))

    @staticmethod
    def empty(n: int) -> SetSystem:
        return SetSystem(n, ())

    @cached_property
    def member_set(self) -> FrozenSet[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.member_set

    def __str__(self) -> str:
        return "{" + ", ".join(format_mask(mask) for mask in self.members) + "}"

    def as_sets(self) -> List[Tuple[int, ...]]:
        return [elements_from_mask(mask) for mask in self.members]

    def layer_profile(self) -> Dict[int, int]:
        """Number of members per set size"""
        profile: Dict[int, int] = dict()
        for mask in self.members:
            size = popcount(mask)
            profile[size] = profile.get(size, 0) + 1
        return dict(sorted(profile.items()))

    def without(self, mask: int) -> SetSystem:
        return SetSystem(self.n, tuple(m for m in self.members if m != mask))

    def with_member(self, mask: int) -> SetSystem:
        return SetSystem.from_masks(self.n, (*self.members, mask))


SetFamily = SetSystem
"""Result families like Sh(F) and st(F) share the representation of set systems."""


def check_ground_subset(x: int, n: int):
    if x < 0 or x >> n:
        raise InvalidGroundSubsetException(
            f"Subset is not contained in [n] ({format_mask(x)}, {n=})"
        )


def check_nonempty(family: SetSystem):
    if len(family) == 0:
        raise EmptyFamilyException(f"Family must not be empty ({family.n=})")


@lru_cache(maxsize=1 << 16)
def _shattered_masks(members: Tuple[int, ...], top: int) -> FrozenSet[int]:
    # members are subsets of [top], split on the element top
    if len(members) == 0:
        return frozenset()
    if top == 0:
        return frozenset((0,))
    top_bit = bit(top)
    lower = tuple(mask for mask in members if not mask & top_bit)
    upper = tuple(mask ^ top_bit for mask in members if mask & top_bit)
    projected = tuple(sorted(set(lower) | set(upper)))
    shattered_lower = _shattered_masks(lower, top - 1)
    shattered_upper = _shattered_masks(upper, top - 1)
    return _shattered_masks(projected, top - 1) | frozenset(
        s | top_bit for s in shattered_lower & shattered_upper
    )


def shattered_family(family: SetSystem) -> SetFamily:
    """
    Compute Sh(F), all sets S with {F ∩ S : F ∈ F} = 2^S, by splitting on the
    largest element: Sh(F) = Sh(F0 ∪ F1) ∪ {S ∪ {n} : S ∈ Sh(F0) ∩ Sh(F1)}
    where F1 holds the members containing n with n removed.

    @param family: Any family (the empty family shatters nothing).
    @return: The down-closed family of shattered sets.
    """
    return SetSystem.from_masks(family.n, _shattered_masks(family.members, family.n))


def shattered_family_naive(family: SetSystem) -> SetFamily:
    """
    Compute Sh(F) by testing every S ⊆ [n] against all traces.
    """
    shattered: List[int] = []
    for s in range(1 << family.n):
        traces = {mask & s for mask in family.members}
        if len(traces) == 1 << popcount(s):
            shattered.append(s)
    return SetSystem(family.n, tuple(shattered))


def has_translated_cube(member_set: FrozenSet[int], members: Iterable[int], i: int) -> bool:
    """Check if some B disjoint from I has B + 2^I ⊆ F"""
    for base in members:
        if base & i:
            continue
        if all(base | h in member_set for h in iter_submasks(i)):
            return True
    return False


def strongly_shattered(family: SetSystem) -> SetFamily:
    """
    Compute st(F), all sets I for which some B ⊆ [n] \\ I has B + 2^I ⊆ F.

    The family is down-closed, so the candidates of every layer are built from the
    sets of the layer below.
    """
    if len(family) == 0:
        return SetSystem.empty(family.n)
    strongly: List[int] = [0]
    layer: List[int] = [0]
    while len(layer) > 0:
        known = frozenset(layer)
        candidates = sorted(
            {
                i | bit(element)
                for i in layer
                for element in range(1, family.n + 1)
                if not i & bit(element)
            }
        )
        layer = [
            i
            for i in candidates
            if all(i ^ bit(e) in known for e in elements_from_mask(i))
            and has_translated_cube(family.member_set, family.members, i)
        ]
        strongly.extend(layer)
    return SetSystem.from_masks(family.n, strongly)


def vc_dimension(family: SetSystem) -> int:
    """
    @return: The size of the largest shattered set or -1 for the empty family.
    """
    return max((popcount(s) for s in shattered_family(family)), default=-1)


def is_extremal(family: SetSystem) -> bool:
    check_nonempty(family)
    return len(shattered_family(family)) == len(family)


def is_reverse_extremal(family: SetSystem) -> bool:
    """Check the reverse Sauer equality |st(F)| = |F|"""
    check_nonempty(family)
    return len(strongly_shattered(family)) == len(family)


def traces(family: SetSystem, x: int) -> SetSystem:
    """
    Compute F|_X without re-indexing (the traces stay subsets of [n]).
    """
    check_ground_subset(x, family.n)
    return SetSystem.from_masks(family.n, (mask & x for mask in family.members))


def projection(family: SetSystem, x: int) -> SetSystem:
    """
    Compute F|_X re-indexed to the ground set {1, ..., |X|} through the order
    preserving map from X. The map is kept in the index_map of the result.
    """
    check_ground_subset(x, family.n)
    window = elements_from_mask(x)
    projected = SetSystem.from_masks(
        len(window), (compress_mask(mask, window) for mask in family.members)
    )
    return SetSystem(projected.n, projected.members, index_map=window)


def complement_family(family: SetSystem) -> SetSystem:
    """Compute 2^[n] \\ F"""
    return SetSystem(
        family.n,
        tuple(mask for mask in range(1 << family.n) if mask not in family.member_set),
    )


def dual_family(family: SetSystem) -> SetSystem:
    """Compute {[n] \\ F : F ∈ F}"""
    full = full_mask(family.n)
    return SetSystem.from_masks(family.n, (full ^ mask for mask in family.members))


def support(family: SetSystem) -> int:
    check_nonempty(family)
    union = 0
    for mask in family.members:
        union |= mask
    return union


def common_intersection(family: SetSystem) -> int:
    check_nonempty(family)
    intersection = full_mask(family.n)
    for mask in family.members:
        intersection &= mask
    return intersection


def layer_band(family: SetSystem) -> Tuple[int, int]:
    """@return: The smallest and the largest member size."""
    check_nonempty(family)
    sizes = [popcount(mask) for mask in family.members]
    return min(sizes), max(sizes)


def consecutive_layers_vc_check(family: SetSystem, k: int, t: int) -> bool:
    """
    For an extremal family inside the layers k-t+1, ..., k check that its
    VC-dimension is at most t-1.

    @return: False would falsify the bound (it must never happen).
    """
    check_nonempty(family)
    for mask in family.members:
        if not k - t + 1 <= popcount(mask) <= k:
            raise LayerViolationException(
                f"Member size outside the layers {k - t + 1}..{k} ({format_mask(mask)})"
            )
    if not is_extremal(family):
        raise NotExtremalException(f"Family is not shattering-extremal ({family})")
    vc = vc_dimension(family)
    log.debug(f"{k=} {t=} {vc=}")
    return vc <= t - 1
