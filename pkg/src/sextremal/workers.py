#!/usr/bin/env python3

# Internal packages
import logging
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from typing import Any, Callable, Final, List, Sequence, Tuple, TypeVar

log = logging.getLogger(__name__)

T = TypeVar("T")


class WorkerPoolException(Exception):
    """Raised when a worker process of a partitioned scan died"""

    pass


def run_partitioned(
    function: Callable[..., T],
    partitions: Sequence[Tuple[Any, ...]],
    jobs: int = 1,
) -> List[T]:
    """
    Run a function once per partition, in worker processes if more than one job is
    allowed.

    @param function: Module level function (it is pickled for the worker processes).
    @param partitions: Argument tuple of every call.
    @param jobs: Maximum number of worker processes (<= 1 runs everything in process).
    @return: The results in partition order.
    """
    if jobs <= 1 or len(partitions) <= 1:
        return [function(*arguments) for arguments in partitions]
    max_workers: Final = min(jobs, len(partitions))
    log.debug(f"Run {function.__name__} on {len(partitions)} partitions ({max_workers=})")
    try:
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            futures = [executor.submit(function, *arguments) for arguments in partitions]
            return [future.result() for future in futures]
    except BrokenProcessPool as err:
        raise WorkerPoolException(
            f"Worker process died ({function.__name__=}, {max_workers=}, {err})"
        )
