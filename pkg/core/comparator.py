"""
Provides the core logic for comparing computed verdicts with the golden tables.
"""

from typing import Callable, List, Optional, Sequence, Tuple

Difference = Tuple[str, int, Optional[bool], Optional[bool]]


def compare_verdicts(
    results: Sequence,
    progress_cb: Optional[Callable[[int], None]] = None,
    cancel_cb: Optional[Callable[[], bool]] = None
) -> List[Difference]:
    """
    Walks a sweep and returns every cell that disagrees with a reference.

    Args:
        results: Sweep results with `computed`, `expected` and `levi` fields.
        progress_cb: A callback to report progress (current cell index).
        cancel_cb: A callback to check if the operation should be cancelled.

    Returns:
        A list of tuples (status, index, computed, reference):
        'mismatch' when the golden table predicts the other verdict,
        'inconsistent' when the Levi route disagrees with the direct test.
        Cells the tables leave open are never reported.

    Raises:
        InterruptedError: If the operation is cancelled.
    """
    differences: List[Difference] = []
    progress_interval = max(1, len(results) // 100)

    for i, r in enumerate(results):
        if i % progress_interval == 0:
            if cancel_cb and cancel_cb():
                raise InterruptedError("Golden comparison cancelled.")
            if progress_cb:
                progress_cb(i)

        if r.expected is not None and r.computed != r.expected:
            differences.append(('mismatch', i, r.computed, r.expected))
        if r.levi is not None and r.levi != r.computed:
            differences.append(('inconsistent', i, r.computed, r.levi))

    if progress_cb:
        progress_cb(len(results))

    return differences
