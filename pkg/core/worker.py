"""
Runs a function over a list of cells, in-process or on a bounded process pool.

Results come back in cell order regardless of completion order. The
`progress_cb` / `cancel_cb` contract is the one the rest of the package
uses: progress receives the number of finished cells, cancel is polled
between cells.
"""

import logging
from multiprocessing import Pool
from typing import Any, Callable, List, Optional, Sequence

logger = logging.getLogger(__name__)


class CancelledError(Exception):
    """Raised when `cancel_cb` asks a running sweep to stop."""
    pass


def run_cells(
    func: Callable[[Any], Any],
    cells: Sequence[Any],
    workers: int = 1,
    progress_cb: Optional[Callable[[int], None]] = None,
    cancel_cb: Optional[Callable[[], bool]] = None,
) -> List[Any]:
    """
    Applies `func` to every cell.

    Args:
        func: A picklable top-level function of one argument.
        cells: The inputs, in output order.
        workers: Pool size; 1 runs in the calling process.
        progress_cb: Called with the count of finished cells.
        cancel_cb: Polled before each result is accepted.

    Returns:
        The list of results in the order of `cells`.

    Raises:
        CancelledError: If `cancel_cb` returns True.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    results: List[Any] = []
    if workers == 1 or len(cells) <= 1:
        for cell in cells:
            if cancel_cb and cancel_cb():
                raise CancelledError("sweep cancelled")
            results.append(func(cell))
            if progress_cb:
                progress_cb(len(results))
        return results

    logger.debug("running %d cells on %d workers", len(cells), workers)
    with Pool(processes=min(workers, len(cells))) as pool:
        for result in pool.imap(func, cells):
            if cancel_cb and cancel_cb():
                pool.terminate()
                raise CancelledError("sweep cancelled")
            results.append(result)
            if progress_cb:
                progress_cb(len(results))
    return results
