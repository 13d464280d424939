"""
Worker pool for data-parallel chunk work.

Results always come back in submission order, so that reductions over
chunk partials are performed in the same order for any number of threads.
"""
from concurrent.futures import ThreadPoolExecutor

import inflect
from tqdm import tqdm

from ..logs import logger


def map_in_order(func, items, threads=1, progress=None):
    """
    Apply func to each item, using up to `threads` worker threads,
    and return the list of results in the order of `items`.

    progress: a description for a tqdm bar on stderr, or None.

    numpy releases the GIL inside its inner loops, so chunk kernels
    built from numpy array operations do run concurrently.
    """
    items = list(items)
    threads = max(1, int(threads or 1))
    if threads == 1 or len(items) <= 1:
        results = map(func, items)
    else:
        logger.debug(
            "Mapping %s %s over %s %s"
            % (
                len(items),
                inflect.engine().plural("chunk", len(items)),
                threads,
                inflect.engine().plural("thread", threads),
            )
        )
        executor = ThreadPoolExecutor(
            max_workers=threads, thread_name_prefix="mvlab-worker"
        )
        with executor:
            return _collect(executor.map(func, items), len(items), progress)
    return _collect(results, len(items), progress)


def _collect(results, total, progress):
    if progress:
        results = tqdm(results, total=total, desc=progress, leave=False)
    return list(results)
