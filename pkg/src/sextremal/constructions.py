#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import json
import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

# Installed packages
import networkx as nx

# Local modules
from sextremal.bitset import (
    bit,
    elements_from_mask,
    format_mask,
    iter_masks_of_size,
    iter_submasks,
    popcount,
)
from sextremal.errors import ConsistencyException, ParameterOutOfRangeException
from sextremal.inclusion_graph import leaves
from sextremal.set_system import (
    NotExtremalException,
    SetSystem,
    check_nonempty,
    is_extremal,
    shattered_family,
    vc_dimension,
)

log = logging.getLogger(__name__)


class DisconnectedLevelGraphException(ConsistencyException):
    """Raised when a level graph of the triangle-free construction is not connected"""

    pass


class DuplicateUnionException(ConsistencyException):
    """Raised when a spanning tree edge of the triangle-free construction adds a present set"""

    pass


class DuplicateEValueException(ConsistencyException):
    """Raised when two index sets of the forbidden trace construction share their set"""

    pass


def is_down_set(family: SetSystem) -> bool:
    return all(
        mask ^ bit(e) in family.member_set
        for mask in family.members
        for e in elements_from_mask(mask)
    )


def down_closure(family: SetSystem) -> SetSystem:
    closure = set()
    for mask in family.members:
        if mask not in closure:
            closure.update(iter_submasks(mask))
    return SetSystem.from_masks(family.n, closure)


@dataclass(frozen=True)
class AnsteeStep:
    """One union added by the triangle-free construction"""

    a: int
    b: int

    @property
    def union(self) -> int:
        return self.a | self.b

    @property
    def symmetric_difference(self) -> int:
        return self.a ^ self.b


def _level_graph(level: List[int]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(level)
    for a, b in combinations(level, 2):
        if popcount(a ^ b) == 2:
            graph.add_edge(a, b)
    return graph


def _spanning_tree_edges(
    graph: nx.Graph, rng: Optional[random.Random]
) -> List[Tuple[int, int]]:
    if rng is None:
        return list(nx.bfs_edges(graph, min(graph.nodes), sort_neighbors=sorted))
    for a, b in sorted(graph.edges):
        graph.edges[a, b]["weight"] = rng.random()
    return sorted(
        tuple(sorted(edge)) for edge in nx.minimum_spanning_tree(graph).edges
    )


def anstee_steps(
    n: int, rng: Optional[random.Random] = None
) -> Tuple[SetSystem, List[AnsteeStep]]:
    """
    Build a triangle-free family of size C(n,0) + C(n,1) + C(n,2): start with all sets
    of size at most 1 and, level by level, add A ∪ B for the edges (A, B) of a spanning
    tree of the graph on the present (k-1)-sets where |A △ B| = 2.

    @param n: Ground set size (at least 2).
    @param rng: Random spanning trees if given, otherwise breadth first search trees from
                the smallest set.
    @return: The family and every added union in order.
    """
    if n < 2:
        raise ParameterOutOfRangeException(f"Construction needs n >= 2 ({n=})")
    members = {0, *(bit(e) for e in range(1, n + 1))}
    steps: List[AnsteeStep] = []
    for k in range(2, n + 1):
        level = sorted(mask for mask in members if popcount(mask) == k - 1)
        if len(level) == 0:
            break
        graph = _level_graph(level)
        if not nx.is_connected(graph):
            raise DisconnectedLevelGraphException(
                f"Level graph is not connected ({k - 1=}, {nx.number_connected_components(graph)=})"
            )
        for a, b in _spanning_tree_edges(graph, rng):
            if a | b in members:
                raise DuplicateUnionException(
                    f"Union is already present ({format_mask(a)} ∪ {format_mask(b)})"
                )
            members.add(a | b)
            steps.append(AnsteeStep(a, b))
        log.debug(f"{k=} {len(level)=} {len(members)=}")
    return SetSystem.from_masks(n, members), steps


def anstee_construct(n: int, rng: Optional[random.Random] = None) -> SetSystem:
    return anstee_steps(n, rng)[0]


def anstee_expected_size(n: int) -> int:
    return comb(n, 0) + comb(n, 1) + comb(n, 2)


def _check_tl(n: int, t: int, l: int):
    if not n >= t >= l >= 0:
        raise ParameterOutOfRangeException(f"Expected n >= t >= l >= 0 ({n=}, {t=}, {l=})")


def forbidden_trace_check(family: SetSystem, t: int, l: int) -> bool:
    """
    Check that for no t-set X the traces F|_X contain all l-subsets of X.
    """
    _check_tl(family.n, t, l)
    for x in iter_masks_of_size(family.n, t):
        present = {mask & x for mask in family.members}
        subsets = [s for s in iter_submasks(x) if popcount(s) == l]
        if all(s in present for s in subsets):
            log.debug(f"All {l}-subsets of {format_mask(x)} are traces")
            return False
    return True


def fq_set(x: Tuple[int, ...], n: int, l: int) -> int:
    """
    E(x_1, ..., x_i): the first l indices together with every element above x_l that
    is not one of the remaining indices (x_0 = 0). For i < l this is the index set
    itself.
    """
    if len(x) < l:
        return sum(bit(e) for e in x)
    threshold = x[l - 1] if l > 0 else 0
    rest = set(x[l:])
    mask = sum(bit(e) for e in x[:l])
    for element in range(threshold + 1, n + 1):
        if element not in rest:
            mask |= bit(element)
    return mask


def furedi_quinn_index(n: int, t: int, l: int) -> Dict[int, int]:
    """
    @return: Mapping of every index set X (|X| <= t-1) to E(X).
    """
    _check_tl(n, t, l)
    if t < 1:
        raise ParameterOutOfRangeException(f"Construction needs t >= 1 ({t=})")
    index: Dict[int, int] = dict()
    owners: Dict[int, int] = dict()
    for size in range(t):
        for x in combinations(range(1, n + 1), size):
            x_mask = sum(bit(e) for e in x)
            e_mask = fq_set(x, n, l)
            if e_mask in owners:
                raise DuplicateEValueException(
                    f"E({format_mask(x_mask)}) = E({format_mask(owners[e_mask])}) = {format_mask(e_mask)}"
                )
            owners[e_mask] = x_mask
            index[x_mask] = e_mask
    return index


def furedi_quinn(n: int, t: int, l: int) -> SetSystem:
    """
    Family of size sum_{i<t} C(n,i) in which no t-set sees all of its l-subsets as
    traces.
    """
    return SetSystem.from_masks(n, furedi_quinn_index(n, t, l).values())


def furedi_quinn_expected_size(n: int, t: int) -> int:
    return sum(comb(n, i) for i in range(t))


@dataclass
class PeelReport:
    """
    Contains a removal order of a family and whether extremality survived every step.
    """

    order: List[int] = field(default_factory=list)
    """Removed members in removal order."""
    extremal_after_each: List[bool] = field(default_factory=list)
    failure_index: Optional[int] = None
    """First step after which the family was not extremal."""
    eliminated_shattered: Optional[List[Tuple[int, ...]]] = None
    """Sets that left Sh at every step."""
    index_sets: Optional[List[int]] = None
    """Index set X of every removed E(X) (forbidden trace construction only)."""
    stuck: Optional[SetSystem] = None
    """Family without a removable member (greedy peeling only)."""

    @property
    def complete(self) -> bool:
        return self.failure_index is None and self.stuck is None

    def to_json_object(self) -> dict:
        return {
            "order": [list(elements_from_mask(mask)) for mask in self.order],
            "extremal_after_each": self.extremal_after_each,
            "failure_index": self.failure_index,
            "eliminated_shattered": None
            if self.eliminated_shattered is None
            else [
                [list(elements_from_mask(mask)) for mask in step]
                for step in self.eliminated_shattered
            ],
            "index_sets": None
            if self.index_sets is None
            else [list(elements_from_mask(mask)) for mask in self.index_sets],
            "stuck": None if self.stuck is None else self.stuck.as_sets(),
            "complete": self.complete,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_object(), sort_keys=True)


def _extremal_or_empty(family: SetSystem) -> bool:
    return len(family) == 0 or is_extremal(family)


def _remove(report: PeelReport, family: SetSystem, mask: int) -> SetSystem:
    before = shattered_family(family).member_set
    remaining = family.without(mask)
    after = shattered_family(remaining).member_set
    extremal = _extremal_or_empty(remaining)
    report.order.append(mask)
    report.extremal_after_each.append(extremal)
    if report.eliminated_shattered is not None:
        report.eliminated_shattered.append(tuple(sorted(before - after)))
    if not extremal and report.failure_index is None:
        report.failure_index = len(report.order) - 1
    return remaining


def fq_peel_order(n: int, t: int, l: int) -> List[Tuple[int, int]]:
    """
    Removal order (X, E(X)): larger index sets first, index sets of equal size in
    increasing lexicographic order.
    """
    index = furedi_quinn_index(n, t, l)
    return sorted(
        index.items(),
        key=lambda item: (-popcount(item[0]), elements_from_mask(item[0])),
    )


def fq_peel(n: int, t: int, l: int) -> PeelReport:
    family = furedi_quinn(n, t, l)
    report = PeelReport(eliminated_shattered=[], index_sets=[])
    for x_mask, e_mask in fq_peel_order(n, t, l):
        report.index_sets.append(x_mask)
        family = _remove(report, family, e_mask)
    return report


def _check_extremal(family: SetSystem):
    check_nonempty(family)
    if not is_extremal(family):
        raise NotExtremalException(f"Family is not shattering-extremal ({family})")


def find_removable(family: SetSystem) -> Optional[int]:
    """
    @return: The first member (in mask order) whose removal keeps the family extremal
             or None (which would contradict the removal conjecture).
    """
    _check_extremal(family)
    if len(family) < 2:
        raise ParameterOutOfRangeException(f"Family needs at least two members ({family})")
    candidates = family.members
    if vc_dimension(family) <= 1:
        # the inclusion graph is a tree, only its leaves can go
        candidates = tuple(leaves(family))
    for mask in candidates:
        if is_extremal(family.without(mask)):
            return mask
    log.warning(f"No removable member found ({family})")
    return None


def find_addable(family: SetSystem) -> Optional[int]:
    """
    @return: The first non-member (in mask order) whose addition keeps the family
             extremal or None.
    """
    _check_extremal(family)
    if len(family) == 1 << family.n:
        raise ParameterOutOfRangeException(f"Family is already 2^[n] ({family.n=})")
    for mask in range(1 << family.n):
        if mask not in family.member_set and is_extremal(family.with_member(mask)):
            return mask
    log.warning(f"No addable set found ({family})")
    return None


def peel_sequence(family: SetSystem) -> PeelReport:
    """
    Greedily remove removable members until the family is empty or stuck.
    """
    _check_extremal(family)
    report = PeelReport(eliminated_shattered=[])
    current = family
    while len(current) > 1:
        mask = find_removable(current)
        if mask is None:
            report.stuck = current
            return report
        current = _remove(report, current, mask)
    return _peel_last(report, current)


def _peel_last(report: PeelReport, family: SetSystem) -> PeelReport:
    _remove(report, family, family.members[0])
    return report
