#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import json
import logging
from dataclasses import asdict, dataclass
from typing import Dict, Optional

# Local modules
from sextremal.errors import ConsistencyException
from sextremal.groebner import extremality_via_sm, random_orders
from sextremal.inclusion_graph import (
    build_inclusion_graph,
    classify_vc1_extremal,
    is_connected,
    is_isometric_in_cube,
)
from sextremal.info.limits import (
    DEFAULT_SAMPLED_ORDERS,
    DEFAULT_SEED,
    MAX_ANALYSIS_EXACT_SM_N,
)
from sextremal.labeled_tree import PreconditionViolatedException, encode_family, format_tree
from sextremal.random_family import create_rng
from sextremal.set_system import (
    SetSystem,
    check_nonempty,
    is_extremal,
    shattered_family,
    strongly_shattered,
    vc_dimension,
)
from sextremal.transforms import is_extremal_br

log = logging.getLogger(__name__)


class ExtremalityDisagreementException(ConsistencyException):
    """Raised when the extremality checks of a family disagree"""

    pass


@dataclass
class AnalysisReport:
    """
    Contains every invariant of a family that the analysis computes.
    """

    n: int
    size: int
    sh_size: int
    st_size: int
    vc_dim: int
    extremal_def: bool
    extremal_br: bool
    extremal_sm: bool
    extremal_sm_exact: bool
    """False if only sampled lex orders were compared."""
    connected: bool
    is_tree: bool
    """The undirected inclusion graph is a tree."""
    distinct_labels: bool
    """The edge labels of the inclusion graph are pairwise different."""
    label_count: int
    tree_encoding: Optional[str]
    """Tree encoding for extremal families of VC-dimension at most 1."""
    isometric: Optional[bool]
    """None for disconnected families."""
    layer_profile: Dict[int, int]

    def to_json_object(self) -> dict:
        json_object = asdict(self)
        json_object["layer_profile"] = {
            str(size): count for size, count in self.layer_profile.items()
        }
        return json_object

    def to_json(self) -> str:
        return json.dumps(self.to_json_object(), sort_keys=True)

    def to_text(self) -> str:
        return "\n".join(
            f"{key}: {value}" for key, value in sorted(self.to_json_object().items())
        )


def _tree_encoding(family: SetSystem) -> Optional[str]:
    if not classify_vc1_extremal(family):
        return None
    try:
        return format_tree(encode_family(family))
    except PreconditionViolatedException as err:
        log.debug(f"No tree encoding ({err})")
        return None


def analyze(family: SetSystem, seed: int = DEFAULT_SEED) -> AnalysisReport:
    """
    Compute the invariants of a family and cross-check the three extremality tests.

    @param family: Nonempty family.
    @param seed: Seed of the sampled lex orders (only used above the exact limit).
    @return: The report.
    """
    check_nonempty(family)
    sh = shattered_family(family)
    st = strongly_shattered(family)
    extremal_def = is_extremal(family)
    extremal_br = is_extremal_br(family)
    sm_exact = family.n <= MAX_ANALYSIS_EXACT_SM_N
    orders = (
        None
        if sm_exact
        else random_orders(family.n, DEFAULT_SAMPLED_ORDERS, create_rng(seed))
    )
    extremal_sm = extremality_via_sm(family, orders)
    if extremal_def != extremal_br or (
        extremal_def != extremal_sm and (sm_exact or not extremal_sm)
    ):
        raise ExtremalityDisagreementException(
            f"Extremality checks disagree ({extremal_def=}, {extremal_br=}, {extremal_sm=}, {family})"
        )
    connected = is_connected(family)
    labels = build_inclusion_graph(family).labels
    return AnalysisReport(
        n=family.n,
        size=len(family),
        sh_size=len(sh),
        st_size=len(st),
        vc_dim=vc_dimension(family),
        extremal_def=extremal_def,
        extremal_br=extremal_br,
        extremal_sm=extremal_sm,
        extremal_sm_exact=sm_exact,
        connected=connected,
        is_tree=connected and len(labels) == len(family) - 1,
        distinct_labels=len(set(labels)) == len(labels),
        label_count=len(set(labels)),
        tree_encoding=_tree_encoding(family),
        isometric=is_isometric_in_cube(family) if connected else None,
        layer_profile=family.layer_profile(),
    )
