#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import json
import logging
from dataclasses import dataclass, field, fields
from typing import Final, List, Optional, Tuple

# Local modules
from sextremal.constructions import find_addable, find_removable
from sextremal.errors import GroundSetTooLargeException, ParameterOutOfRangeException
from sextremal.info.limits import MAX_EXHAUSTIVE_SCAN_N, MAX_RANDOM_SCAN_N
from sextremal.random_family import (
    create_rng,
    family_from_bitmap,
    random_extremal_family,
    random_nonempty_family,
)
from sextremal.set_system import SetSystem, complement_family, is_extremal
from sextremal.workers import run_partitioned

log = logging.getLogger(__name__)

SCAN_MODE_EXHAUSTIVE: Final = "exhaustive"
SCAN_MODE_RANDOM: Final = "random"

EXHAUSTIVE_PARTITIONS: Final = 16
"""Fixed partition count so reports do not depend on the number of jobs."""
RANDOM_PARTITION_SIZE: Final = 256
MAX_RECORDED_COUNTEREXAMPLES: Final = 16


@dataclass
class ConjectureScanReport:
    """
    Contains the counts of a scan for extremal families without a removable member
    (or without an addable set).
    """

    n: int
    mode: str
    families_scanned: int = 0
    extremal_families: int = 0
    removable_found: int = 0
    """Extremal families with at least two members that have a removable member."""
    removal_counterexamples: List[List[Tuple[int, ...]]] = field(default_factory=list)
    addable_found: int = 0
    """Extremal families other than 2^[n] that have an addable set."""
    addition_counterexamples: List[List[Tuple[int, ...]]] = field(default_factory=list)
    duality_mismatches: int = 0
    """Families where removability and addability of the complement disagree."""

    @property
    def falsified(self) -> bool:
        return (
            len(self.removal_counterexamples) > 0
            or len(self.addition_counterexamples) > 0
            or self.duality_mismatches > 0
        )

    def merge(self, other: ConjectureScanReport):
        self.families_scanned += other.families_scanned
        self.extremal_families += other.extremal_families
        self.removable_found += other.removable_found
        self.addable_found += other.addable_found
        self.duality_mismatches += other.duality_mismatches
        for own, new in (
            (self.removal_counterexamples, other.removal_counterexamples),
            (self.addition_counterexamples, other.addition_counterexamples),
        ):
            own.extend(new[: max(0, MAX_RECORDED_COUNTEREXAMPLES - len(own))])

    def to_json_object(self) -> dict:
        json_object = {f.name: getattr(self, f.name) for f in fields(self)}
        json_object["falsified"] = self.falsified
        return json_object

    def to_json(self) -> str:
        return json.dumps(self.to_json_object(), sort_keys=True)


def _scan_family(report: ConjectureScanReport, family: SetSystem):
    report.families_scanned += 1
    if not is_extremal(family):
        return
    report.extremal_families += 1
    full = len(family) == 1 << family.n
    removable: Optional[int] = None
    if len(family) >= 2:
        removable = find_removable(family)
        if removable is None:
            report.removal_counterexamples.append(family.as_sets())
        else:
            report.removable_found += 1
    if not full:
        if find_addable(family) is None:
            report.addition_counterexamples.append(family.as_sets())
        else:
            report.addable_found += 1
    if len(family) >= 2 and not full:
        # F \ {G} is extremal iff the complement together with G is
        addable = find_addable(complement_family(family))
        if (removable is None) != (addable is None):
            log.error(f"Removal and addition disagree on the complement ({family})")
            report.duality_mismatches += 1


def _scan_bitmaps(n: int, start: int, stop: int) -> ConjectureScanReport:
    report = ConjectureScanReport(n, SCAN_MODE_EXHAUSTIVE)
    for bitmap in range(start, stop):
        _scan_family(report, family_from_bitmap(n, bitmap))
    return report


def _scan_random(n: int, seed: int, index: int, count: int) -> ConjectureScanReport:
    # uniform families, extremal families and complements of extremal families
    rng = create_rng((seed << 16) + index)
    report = ConjectureScanReport(n, SCAN_MODE_RANDOM)
    for sample in range(count):
        kind = sample % 3
        if kind == 0:
            family = random_nonempty_family(n, rng)
        else:
            family = random_extremal_family(n, rng)
            if kind == 2 and len(family) < 1 << n:
                family = complement_family(family)
        _scan_family(report, family)
    return report


def conjecture_scan(
    n: int,
    mode: str = SCAN_MODE_EXHAUSTIVE,
    count: int = 0,
    seed: int = 0,
    jobs: int = 1,
) -> ConjectureScanReport:
    """
    Scan families on [n] for extremal families without a removable member, without
    an addable set and for disagreements between both through the complement.

    @param n: Ground set size.
    @param mode: 'exhaustive' (every nonempty family, n <= 4) or 'random'.
    @param count: Number of sampled families in random mode.
    @param seed: Seed of the random mode.
    @param jobs: Worker processes.
    @return: The merged report (it does not depend on the number of jobs).
    """
    if n < 1:
        raise ParameterOutOfRangeException(f"Scan needs n >= 1 ({n=})")
    if mode == SCAN_MODE_EXHAUSTIVE:
        if n > MAX_EXHAUSTIVE_SCAN_N:
            raise GroundSetTooLargeException(
                f"Exhaustive scan is limited to {MAX_EXHAUSTIVE_SCAN_N=} ({n=})"
            )
        limit = 1 << (1 << n)
        chunk = max(1, limit // EXHAUSTIVE_PARTITIONS)
        partitions = [
            (n, max(1, start), min(limit, start + chunk))
            for start in range(0, limit, chunk)
        ]
        partial_reports = run_partitioned(_scan_bitmaps, partitions, jobs)
    elif mode == SCAN_MODE_RANDOM:
        if n > MAX_RANDOM_SCAN_N:
            raise GroundSetTooLargeException(
                f"Random scan is limited to {MAX_RANDOM_SCAN_N=} ({n=})"
            )
        if count < 1:
            raise ParameterOutOfRangeException(f"Random scan needs count >= 1 ({count=})")
        partitions = [
            (n, seed, index, min(RANDOM_PARTITION_SIZE, count - start))
            for index, start in enumerate(range(0, count, RANDOM_PARTITION_SIZE))
        ]
        partial_reports = run_partitioned(_scan_random, partitions, jobs)
    else:
        raise ParameterOutOfRangeException(f"Unknown scan mode ({mode=})")
    report = ConjectureScanReport(n, mode)
    for partial_report in partial_reports:
        report.merge(partial_report)
    log.info(
        f"Scanned {report.families_scanned} families ({report.extremal_families} extremal)"
    )
    if report.falsified:
        log.error(f"Conjecture scan found counterexamples ({n=}, {mode=})")
    return report
