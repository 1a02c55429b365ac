"""
Order-preserving parallel map for grid sweeps.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply func to every item, optionally on a thread pool.

    Results come back in input order, so the output does not depend on the worker count.

    Args:
        func: Pure function of one grid point
        items: Grid points
        workers: Number of threads (1 runs serially)

    Returns:
        List of results aligned with items
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug(f"Evaluating {len(items)} points on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
