#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import logging
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, Final, FrozenSet, Iterator, List, Optional, Tuple

# Installed packages
import networkx as nx

# Local modules
from sextremal.bitset import bit, format_mask, full_mask
from sextremal.errors import (
    GroundSetTooLargeException,
    InputException,
    ParameterOutOfRangeException,
)
from sextremal.inclusion_graph import build_inclusion_graph, classify_vc1_extremal
from sextremal.info.limits import MAX_ENUMERATION_N
from sextremal.set_system import SetSystem, common_intersection, support

log = logging.getLogger(__name__)

REGEX_TREE_EDGE: Final = re.compile(r"^(\d+)\s+(\d+)\s+(\d+)$")
"""
Regex expression to parse a tree edge line: 'u v label'
"""


class InvalidTreeException(InputException):
    """Raised when edges do not form a tree with pairwise different labels"""

    pass


class PreconditionViolatedException(InputException):
    """Raised when a family is not a VC-dimension 1 extremal family with full support and empty intersection"""

    pass


@dataclass(frozen=True)
class LabeledTree:
    """
    A directed tree on the vertices 0, ..., m-1 whose edges (u, v, label) carry
    pairwise different labels.
    """

    m: int
    """Vertex count."""
    edges: Tuple[Tuple[int, int, int], ...] = ()
    """Directed edges u -> v with their label."""

    def __post_init__(self):
        if self.m < 1:
            raise InvalidTreeException(f"A tree needs at least one vertex ({self.m=})")
        if len(self.edges) != self.m - 1:
            raise InvalidTreeException(
                f"A tree on {self.m} vertices needs {self.m - 1} edges ({len(self.edges)=})"
            )
        labels = [label for _, _, label in self.edges]
        if len(set(labels)) != len(labels):
            raise InvalidTreeException(f"Edge labels are not pairwise different ({labels=})")
        for u, v, label in self.edges:
            if not (0 <= u < self.m and 0 <= v < self.m) or label < 1:
                raise InvalidTreeException(f"Invalid edge ({u=}, {v=}, {label=}, {self.m=})")
        if not nx.is_tree(self.to_undirected()):
            raise InvalidTreeException(f"Edges contain a cycle ({self.edges=})")

    @property
    def labels(self) -> List[int]:
        return sorted(label for _, _, label in self.edges)

    def to_undirected(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.m))
        for u, v, label in self.edges:
            graph.add_edge(u, v, label=label, tail=u)
        return graph


def parse_tree(content: str, source: str = "<string>") -> LabeledTree:
    """
    Parse the tree text format: the vertex count on the first line, then one
    'u v label' edge per line (vertices start at 0, '#' starts a comment).
    """
    lines = [
        (number, line.split("#", 1)[0].strip())
        for number, line in enumerate(content.splitlines(), start=1)
    ]
    lines = [(number, line) for number, line in lines if len(line) > 0]
    if len(lines) == 0 or not lines[0][1].isdigit():
        raise InvalidTreeException(f"Missing vertex count in the first line ({source})")
    edges: List[Tuple[int, int, int]] = []
    for number, line in lines[1:]:
        match = REGEX_TREE_EDGE.match(line)
        if match is None:
            raise InvalidTreeException(f"Unable to parse edge ({source}:{number}, {line=})")
        edges.append((int(match.group(1)), int(match.group(2)), int(match.group(3))))
    return LabeledTree(int(lines[0][1]), tuple(edges))


def format_tree(tree: LabeledTree) -> str:
    return "".join([f"{tree.m}\n", *(f"{u} {v} {label}\n" for u, v, label in tree.edges)])


def tree_to_dot(tree: LabeledTree, name: str = "tree") -> str:
    lines = [f"digraph {name} {{"]
    for vertex in range(tree.m):
        lines.append(f"  {vertex};")
    for u, v, label in tree.edges:
        lines.append(f"  {u} -> {v} [label={label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decode_tree_vertices(tree: LabeledTree) -> Dict[int, int]:
    """
    Compute the set F_w of every vertex w: the label s of an edge u -> v belongs to F_w
    exactly when w lies on the v side of that edge.

    @return: Mapping of every vertex to its set (as mask).
    """
    graph = tree.to_undirected()
    depth: Dict[int, int] = nx.single_source_shortest_path_length(graph, 0)
    root_mask = 0
    for u, v, label in tree.edges:
        if depth[v] < depth[u]:
            root_mask |= bit(label)
    masks = {0: root_mask}
    for parent, child in nx.bfs_edges(graph, 0):
        masks[child] = masks[parent] ^ bit(graph.edges[parent, child]["label"])
    return masks


def decode_tree(tree: LabeledTree, n: Optional[int] = None) -> SetSystem:
    """
    Decode a labelled tree to its extremal family of VC-dimension at most 1.

    @param tree: The tree.
    @param n: The ground set size (default: largest label).
    """
    if n is None:
        n = max(tree.labels, default=0)
    if any(label > n for label in tree.labels):
        raise InvalidTreeException(f"Labels are not contained in [n] ({tree.labels=}, {n=})")
    return SetSystem.from_masks(n, decode_tree_vertices(tree).values())


def encode_family(family: SetSystem) -> LabeledTree:
    """
    Encode an extremal family of VC-dimension at most 1 with full support and empty
    common intersection as its inclusion graph (vertex i is the i-th member).
    """
    if len(family) == 0 or not classify_vc1_extremal(family):
        raise PreconditionViolatedException(
            f"Inclusion graph is not a tree with distinct labels ({family})"
        )
    if support(family) != full_mask(family.n):
        raise PreconditionViolatedException(
            f"Support is not [n] ({format_mask(support(family))}, {family.n=})"
        )
    if common_intersection(family) != 0:
        raise PreconditionViolatedException(
            f"Common intersection is not empty ({format_mask(common_intersection(family))})"
        )
    index = {mask: position for position, mask in enumerate(family.members)}
    edges = sorted(
        (index[g], index[f], label) for g, f, label in build_inclusion_graph(family).edges
    )
    return LabeledTree(len(family), tuple(edges))


def canonical_tree_key(tree: LabeledTree) -> FrozenSet[Tuple[int, int, int]]:
    """
    Vertex independent normal form: every edge as (set of tail, set of head, label).
    Labels are distinct so two trees are equal up to vertex renaming exactly when their
    keys are equal.
    """
    masks = decode_tree_vertices(tree)
    return frozenset((masks[u], masks[v], label) for u, v, label in tree.edges)


def _check_enumeration_n(n: int):
    if n < 1:
        raise ParameterOutOfRangeException(f"Ground set size must be positive ({n=})")
    if n > MAX_ENUMERATION_N:
        raise GroundSetTooLargeException(
            f"Enumeration is limited to {MAX_ENUMERATION_N=} ({n=})"
        )


def _path_label_masks(sequence: Tuple[int, ...]) -> Tuple[int, ...]:
    """
    Decode a Prüfer sequence on the vertices 0..n, root the tree at 0 and label every
    edge with its child vertex. @return: The label mask of the path from 0 to every vertex.
    """
    tree = nx.from_prufer_sequence(list(sequence))
    masks = [0] * tree.number_of_nodes()
    for parent, child in nx.bfs_edges(tree, 0):
        masks[child] = masks[parent] | bit(child)
    return tuple(masks)


def iter_prufer_sequences(n: int, first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """All Prüfer sequences of trees on the vertices 0..n (optionally with a fixed first entry)"""
    if n == 1:
        if first is None:
            yield ()
        return
    if first is None:
        yield from product(range(n + 1), repeat=n - 1)
        return
    for rest in product(range(n + 1), repeat=n - 2):
        yield (first, *rest)


def iter_vc1_extremal(n: int, first: Optional[int] = None) -> Iterator[SetSystem]:
    """
    Enumerate {o ^ P(v)} over all vertex trees on 0..n and all root sets o, where P(v) is
    the label mask of the path from 0 to v. Each family arises once for every vertex that
    could be called 0, so only the representative whose root holds the smallest member is
    kept.
    """
    for sequence in iter_prufer_sequences(n, first):
        paths = _path_label_masks(sequence)
        for root in range(1 << n):
            members = [root ^ path for path in paths]
            if root == min(members):
                yield SetSystem.from_masks(n, members)


def enumerate_vc1_extremal(n: int) -> Iterator[SetSystem]:
    """
    Enumerate all extremal families on [n] of VC-dimension at most 1 with full support
    and empty common intersection (there are 2^n (n+1)^(n-2) of them).
    """
    _check_enumeration_n(n)
    log.debug(f"Enumerate VC-dimension 1 extremal families ({n=})")
    return iter_vc1_extremal(n)


def count_vc1_extremal_partition(n: int, first: Optional[int]) -> int:
    return sum(1 for _ in iter_vc1_extremal(n, first))


def expected_vc1_extremal_count(n: int) -> int:
    """2^n (n+1)^(n-2) (for n = 1 this is 1)"""
    if n == 1:
        return 1
    return (1 << n) * (n + 1) ** (n - 2)


def two_layer_from_tree(tree: LabeledTree, cls: int = 0) -> SetSystem:
    """
    Orient every edge of an (undirected) labelled tree from one bipartition class to the
    other and decode. The result lies in the layers k and k-1 where k is the size of the
    chosen class.

    @param tree: Tree on n+1 vertices, edge directions are ignored.
    @param cls: 0 for the class that contains vertex 0, 1 for the other class.
    """
    if cls not in (0, 1):
        raise ParameterOutOfRangeException(f"Bipartition class must be 0 or 1 ({cls=})")
    graph = tree.to_undirected()
    colors: Dict[int, int] = nx.bipartite.color(graph)
    chosen = {vertex for vertex, color in colors.items() if (color == colors[0]) == (cls == 0)}
    edges = tuple(
        (u, v, label) if u in chosen else (v, u, label) for u, v, label in tree.edges
    )
    log.debug(f"{cls=} {sorted(chosen)=}")
    return decode_tree(LabeledTree(tree.m, edges))


def class_size(tree: LabeledTree, cls: int = 0) -> int:
    colors: Dict[int, int] = nx.bipartite.color(tree.to_undirected())
    return sum(1 for color in colors.values() if (color == colors[0]) == (cls == 0))


def two_layer_families(n: int) -> List[SetSystem]:
    """
    All families produced by two_layer_from_tree over every tree on the vertices 0..n
    (edges labelled by their child vertex when rooted at 0) and both bipartition classes.
    """
    _check_enumeration_n(n)
    families = set()
    for sequence in iter_prufer_sequences(n):
        graph = nx.from_prufer_sequence(list(sequence))
        edges = tuple((parent, child, child) for parent, child in nx.bfs_edges(graph, 0))
        tree = LabeledTree(n + 1, edges)
        for cls in (0, 1):
            families.add(two_layer_from_tree(tree, cls))
    log.debug(f"{n=} {len(families)=}")
    return sorted(families, key=lambda family: family.members)
