"""
Deterministic fan-out over a thread pool.

Work is split into partitions up front; results are collected with
as_completed but stored by partition index, so the merged output does not
depend on scheduling or on the number of workers.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Sequence, TypeVar

from src.utils.errors import GoldenOrdersError
from src.utils.logger import Logger

T = TypeVar("T")
R = TypeVar("R")


def split_round_robin(items: Sequence[T], parts: int) -> List[List[T]]:
    parts = max(1, parts)
    return [list(items[k::parts]) for k in range(parts)]


def split_chunks(items: Sequence[T], size: int) -> List[Sequence[T]]:
    size = max(1, size)
    return [items[k:k + size] for k in range(0, len(items), size)]


def run_partitioned(func: Callable[[T], R], partitions: Sequence[T], workers: int = 1) -> List[R]:
    """
    func over every partition; results in partition order

    Raises:
        GoldenOrdersError: re-raised from the first failing partition
    """
    if workers <= 1 or len(partitions) <= 1:
        return [func(p) for p in partitions]
    results: List[R] = [None] * len(partitions)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(func, p): k for k, p in enumerate(partitions)}
        for future in as_completed(futures):
            k = futures[future]
            try:
                results[k] = future.result()
            except GoldenOrdersError:
                raise
            except Exception as e:
                Logger.instance().error(f"partition {k} failed: {e}")
                raise RuntimeError(f"partition {k} failed: {e}") from e
    return results
