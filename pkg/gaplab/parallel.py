"""
Order-preserving fan-out over a process pool.

Workers forward their log records to the main process through
`gaplab.logging.LOGGER_QUEUE`.
"""
import logging
import multiprocessing as mp
from typing import Callable, Iterator, List, Sequence, TypeVar

from gaplab.logging import LOGGER_QUEUE, worker_logging_configurer

logger = logging.getLogger(__name__)

Item = TypeVar("Item")
Result = TypeVar("Result")


def ordered_imap(func: Callable[[Item], Result], items: Sequence[Item],
                 workers: int = 1) -> Iterator[Result]:
    """
    Yield ``func(item)`` in input order.  ``func`` must be picklable when
    ``workers > 1``.
    """
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield func(item)
        return
    logger.debug(f"Fanning {len(items)} tasks out to {workers} workers")
    with mp.Pool(
        processes=workers,
        initializer=worker_logging_configurer,
        initargs=(LOGGER_QUEUE,),
    ) as pool:
        yield from pool.imap(func, items)


def ordered_map(func: Callable[[Item], Result], items: Sequence[Item],
                workers: int = 1) -> List[Result]:
    return list(ordered_imap(func, items, workers))
