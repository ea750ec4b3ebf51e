"""Bounded fan-out that keeps results in input order."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from attainlab.config.settings import TOOL_THREADS

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], max_workers: Optional[int] = None) -> List[R]:
    """
    Apply ``func`` to every item, possibly on worker threads.

    Args:
        func: Pure function to apply
        items: Inputs
        max_workers: Thread cap (defaults to TOOL_THREADS)

    Returns:
        Results in the order of ``items``
    """
    items = list(items)
    workers = max(1, max_workers or TOOL_THREADS)
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug(f"Fanning out {len(items)} tasks over {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
