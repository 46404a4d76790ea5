"""
Thread-pool helper shared by the classification steps.

Work items are always mapped in the order given, so callers that sort their
inputs get identical results for any thread count.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from polartrack.utils.logger import get_logger

logger = get_logger(__name__)

THREADS_ENV_VAR = "POLARTRACK_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int] = None) -> int:
    """
    Resolve the worker count for internal parallelism.

    Args:
        threads: Explicit thread count; when None, POLARTRACK_THREADS is read
                 and 1 is used if it is unset or invalid.

    Returns:
        int: A thread count >= 1
    """
    if threads is None:
        raw = os.environ.get(THREADS_ENV_VAR, "")
        try:
            threads = int(raw) if raw else 1
        except ValueError:
            logger.warning("Ignoring invalid %s value: %r", THREADS_ENV_VAR, raw)
            threads = 1
    return max(1, threads)


def parallel_map(
    func: Callable[[T], R], items: Sequence[T], threads: Optional[int] = None
) -> List[R]:
    """
    Apply ``func`` to every item, possibly on a thread pool.

    Args:
        func: Pure function applied to each item
        items: Items in the order results must be returned
        threads: Maximum worker count (see resolve_threads)

    Returns:
        list: ``[func(item) for item in items]``
    """
    workers = min(resolve_threads(threads), len(items))
    if workers <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(
        max_workers=workers, thread_name_prefix="polartrack"
    ) as executor:
        return list(executor.map(func, items))
