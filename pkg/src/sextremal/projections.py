#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

# Local modules
from sextremal.bitset import iter_masks_of_size
from sextremal.errors import (
    GroundSetTooLargeException,
    InputException,
    ParameterOutOfRangeException,
)
from sextremal.info.limits import MAX_LIFT_N
from sextremal.set_system import (
    SetSystem,
    check_nonempty,
    is_extremal,
    traces,
    vc_dimension,
)
from sextremal.set_system_io import set_system_to_json_object
from sextremal.workers import run_partitioned

log = logging.getLogger(__name__)


class VcMismatchException(InputException):
    """Raised when the VC-dimension of a family does not match the lift parameter"""

    pass


@dataclass
class LiftReport:
    """
    Contains the outcome of lifting a family from its projections and every checked
    conclusion.
    """

    t: int
    """VC-dimension parameter."""
    window: int
    """Projection window size (2t+1 unless overridden)."""
    mode: str
    """'exact', 'relaxed' (VC-dimension at most t) or 'window-override'."""
    projections_extremal: bool
    lifted: SetSystem
    contains_input: bool
    lifted_extremal: bool
    lifted_vcdim: int
    equality_when_extremal: Optional[bool] = None
    """None when the input family is not extremal."""
    violations: List[str] = field(default_factory=list)
    """Conclusions that failed although the hypothesis holds (exact mode only)."""

    @property
    def falsified(self) -> bool:
        return len(self.violations) > 0

    def to_json_object(self) -> dict:
        return {
            "t": self.t,
            "window": self.window,
            "mode": self.mode,
            "projections_extremal": self.projections_extremal,
            "lifted": set_system_to_json_object(self.lifted),
            "contains_input": self.contains_input,
            "lifted_extremal": self.lifted_extremal,
            "lifted_vcdim": self.lifted_vcdim,
            "equality_when_extremal": self.equality_when_extremal,
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_object(), sort_keys=True)


def _window_size(family: SetSystem, t: int, window: Optional[int]) -> int:
    if t < 1:
        raise ParameterOutOfRangeException(f"VC-dimension parameter must be at least 1 ({t=})")
    size = 2 * t + 1 if window is None else window
    if not 1 <= size <= family.n:
        raise ParameterOutOfRangeException(
            f"Projection window does not fit into the ground set ({size=}, {family.n=})"
        )
    if family.n > MAX_LIFT_N:
        raise GroundSetTooLargeException(f"Lifting is limited to {MAX_LIFT_N=} ({family.n=})")
    return size


def _check_vc(family: SetSystem, t: int, relaxed: bool):
    vc = vc_dimension(family)
    if vc > t or (not relaxed and vc != t):
        raise VcMismatchException(
            f"VC-dimension does not match the parameter ({vc=}, {t=}, {relaxed=})"
        )


def all_projections_extremal(
    family: SetSystem, t: int, window: Optional[int] = None, relaxed: bool = False
) -> bool:
    """
    Check that the traces F|_X are extremal for all X of size 2t+1.
    """
    check_nonempty(family)
    size = _window_size(family, t, window)
    _check_vc(family, t, relaxed)
    for x in iter_masks_of_size(family.n, size):
        if not is_extremal(traces(family, x)):
            log.debug(f"Projection is not extremal ({x=})")
            return False
    return True


def _lift_candidates(
    windows: Tuple[Tuple[int, frozenset], ...], start: int, stop: int
) -> List[int]:
    candidates = list(range(start, stop))
    for x, allowed in windows:
        candidates = [h for h in candidates if h & x in allowed]
    return candidates


def lift(
    family: SetSystem, t: int, window: Optional[int] = None, jobs: int = 1
) -> SetSystem:
    """
    Compute G = {H ⊆ [n] : H ∩ X ∈ F|_X for all X of size 2t+1} by a full cube scan.

    @param family: The family.
    @param t: VC-dimension parameter.
    @param window: Optional window size override.
    @param jobs: Worker processes for the candidate scan.
    """
    size = _window_size(family, t, window)
    windows = tuple(
        (x, frozenset(mask & x for mask in family.members))
        for x in iter_masks_of_size(family.n, size)
    )
    limit = 1 << family.n
    chunk = max(1, limit // max(1, jobs))
    partitions = [
        (windows, start, min(limit, start + chunk))
        for start in range(0, limit, chunk)
    ]
    lifted: List[int] = []
    for part in run_partitioned(_lift_candidates, partitions, jobs):
        lifted.extend(part)
    log.debug(f"{size=} {len(family)=} {len(lifted)=}")
    return SetSystem.from_masks(family.n, lifted)


def verify_lift(
    family: SetSystem,
    t: int,
    window: Optional[int] = None,
    relaxed: bool = False,
    jobs: int = 1,
) -> LiftReport:
    """
    Lift a family from its projections and check the conclusions: G contains F, G is
    extremal of VC-dimension t and G = F when F is extremal. Conclusions are only
    asserted in exact mode and when every projection is extremal.
    """
    projections_extremal = all_projections_extremal(family, t, window, relaxed)
    size = _window_size(family, t, window)
    mode = "exact"
    if size != 2 * t + 1:
        mode = "window-override"
    elif relaxed:
        mode = "relaxed"
    lifted = lift(family, t, window, jobs)
    report = LiftReport(
        t=t,
        window=size,
        mode=mode,
        projections_extremal=projections_extremal,
        lifted=lifted,
        contains_input=family.member_set <= lifted.member_set,
        lifted_extremal=is_extremal(lifted),
        lifted_vcdim=vc_dimension(lifted),
        equality_when_extremal=lifted == family if is_extremal(family) else None,
    )
    if not report.contains_input:
        report.violations.append("contains_input")
    if mode == "exact" and projections_extremal:
        if not report.lifted_extremal:
            report.violations.append("lifted_extremal")
        if report.lifted_vcdim != t:
            report.violations.append("lifted_vcdim")
        if report.equality_when_extremal is False:
            report.violations.append("equality_when_extremal")
    if report.falsified:
        log.error(f"Lift conclusions failed {report.violations} ({family}, {t=})")
    return report
