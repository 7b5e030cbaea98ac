#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

# Installed packages
import networkx as nx

# Local modules
from sextremal.bitset import bit, check_element, format_mask, popcount
from sextremal.errors import InputException
from sextremal.set_system import SetSystem, check_nonempty

log = logging.getLogger(__name__)


class DisconnectedException(InputException):
    """Raised when an operation requires a connected inclusion graph"""

    pass


@dataclass(frozen=True)
class LabeledInclusionGraph:
    """
    The labelled Hasse diagram of a family: an edge (g, f, j) exists when f = g ∪ {j}.
    """

    family: SetSystem
    edges: Tuple[Tuple[int, int, int], ...]
    """Edges (g, f, j) sorted by g, then j."""

    @property
    def labels(self) -> List[int]:
        return [label for _, _, label in self.edges]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.family.members)
        for g, f, label in self.edges:
            graph.add_edge(g, f, label=label)
        return graph

    def to_undirected(self) -> nx.Graph:
        return self.to_networkx().to_undirected()


def build_inclusion_graph(family: SetSystem) -> LabeledInclusionGraph:
    check_nonempty(family)
    edges: List[Tuple[int, int, int]] = []
    for g in family.members:
        for j in range(1, family.n + 1):
            if not g & bit(j) and g | bit(j) in family.member_set:
                edges.append((g, g | bit(j), j))
    return LabeledInclusionGraph(family, tuple(edges))


def connected_components(family: SetSystem) -> List[Tuple[int, ...]]:
    """Components of the undirected inclusion graph ordered by their smallest member"""
    if len(family) == 0:
        return []
    graph = build_inclusion_graph(family).to_undirected()
    return sorted(tuple(sorted(component)) for component in nx.connected_components(graph))


def is_connected(family: SetSystem) -> bool:
    """The empty family counts as connected"""
    if len(family) == 0:
        return True
    return nx.is_connected(build_inclusion_graph(family).to_undirected())


def classify_vc1_extremal(family: SetSystem) -> bool:
    """
    Check if the inclusion graph is a tree with pairwise different edge labels (which
    characterizes the extremal families of VC-dimension at most 1).
    """
    graph = build_inclusion_graph(family)
    labels = graph.labels
    return (
        len(graph.edges) == len(family) - 1
        and len(set(labels)) == len(labels)
        and is_connected(family)
    )


def isometry_witness(family: SetSystem) -> Optional[Tuple[int, int]]:
    """
    @return: The first pair (in member order) whose graph distance differs from their
             Hamming distance or None if the inclusion graph is isometric in the cube.
    """
    check_nonempty(family)
    if not is_connected(family):
        raise DisconnectedException(f"Inclusion graph is not connected ({family})")
    distances: Dict[int, Dict[int, int]] = dict(
        nx.all_pairs_shortest_path_length(build_inclusion_graph(family).to_undirected())
    )
    members = family.members
    for index, u in enumerate(members):
        for v in members[index + 1 :]:
            if distances[u][v] != popcount(u ^ v):
                log.debug(
                    f"Isometry violated for {format_mask(u)} and {format_mask(v)} "
                    f"({distances[u][v]=}, {popcount(u ^ v)=})"
                )
                return u, v
    return None


def is_isometric_in_cube(family: SetSystem) -> bool:
    return isometry_witness(family) is None


def leaves(family: SetSystem) -> List[int]:
    """Members of degree 1 in the undirected inclusion graph"""
    graph = build_inclusion_graph(family).to_undirected()
    return sorted(mask for mask, degree in graph.degree() if degree == 1)


def flip_reverses_label_edges(family: SetSystem, i: int) -> bool:
    """
    Check that the bit flip of i reverses exactly the edges labelled i and maps every
    other edge onto an edge with the same label.
    """
    check_element(i, family.n)
    b = bit(i)
    flipped = SetSystem.from_masks(family.n, (m ^ b for m in family.members))
    expected = sorted(
        (f ^ b, g ^ b, label) if label == i else (g ^ b, f ^ b, label)
        for g, f, label in build_inclusion_graph(family).edges
    )
    return expected == sorted(build_inclusion_graph(flipped).edges)


def graph_to_dot(graph: LabeledInclusionGraph, name: str = "inclusion_graph") -> str:
    lines = [f"digraph {name} {{"]
    for mask in graph.family.members:
        lines.append(f'  {mask} [label="{format_mask(mask)}"];')
    for g, f, label in graph.edges:
        lines.append(f"  {g} -> {f} [label={label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
