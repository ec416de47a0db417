# helpers/table_sweep.py

"""
Enumerates the cells of the three classification tables, recomputes each
one with the rank tests and pairs it with the golden prediction.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from core.config import RunConfig
from core.error_handler import FlagRankError, InvalidTypeError
from core.notation import format_parabolic
from core.orbitrank import (
    check_monotonicity,
    cross_check,
    is_double_flag_spherical,
    is_generically_transitive,
)
from core.rootsystem import SimpleType
from core.worker import run_cells
from helpers.golden import TABLES, expected_spherical, expected_transitive

logger = logging.getLogger(__name__)

DEFAULT_RANKS: Dict[str, Dict[str, Sequence[int]]] = {
    "theorem1": {
        "A": range(1, 6), "B": range(2, 5), "C": range(2, 5), "D": range(4, 7),
        "E": (6, 7), "F": (4,), "G": (2,),
    },
    "theorem2": {"B": (3,), "C": (3,), "D": range(4, 7)},
    "corollary": {
        "A": range(1, 5), "B": (3,), "C": (3,), "D": range(4, 7), "E": (6, 7),
        "F": (4,), "G": (2,),
    },
}

N_CAP = 12


@dataclass(frozen=True)
class SweepCell:
    table: str
    family: str
    rank: int
    I: Tuple[int, ...]
    n: Optional[int]
    config: RunConfig
    cross_check: bool = True

    @property
    def type(self) -> SimpleType:
        return SimpleType(self.family, self.rank)


@dataclass(frozen=True)
class CellResult:
    table: str
    type_name: str
    parabolic: str
    n: Optional[int]
    computed: bool
    expected: Optional[bool]
    method: str
    achieved_rank: int
    target_rank: int
    seed: Optional[int]
    levi: Optional[bool] = None

    @property
    def matches(self) -> bool:
        return self.expected is None or self.computed == self.expected

    @property
    def consistent(self) -> bool:
        return self.levi is None or self.levi == self.computed


def _types(table: str, families: Optional[Iterable[str]],
           ranks: Optional[Iterable[int]], max_rank: int) -> List[SimpleType]:
    defaults = DEFAULT_RANKS[table]
    chosen = [f.upper() for f in families] if families else list(defaults)
    out = []
    for family in chosen:
        wanted = list(ranks) if ranks is not None else list(defaults.get(family, ()))
        for rank in wanted:
            if rank > max_rank:
                raise InvalidTypeError(f"rank {rank} exceeds max rank {max_rank}")
            try:
                out.append(SimpleType(family, rank))
            except InvalidTypeError:
                logger.debug("skipping %s%d: no such type", family, rank)
    return out


def _theorem1_cells(t: SimpleType, config: RunConfig, check: bool) -> List[SweepCell]:
    cells = []
    for i in range(t.rank):
        n = 3
        while n <= N_CAP:
            cells.append(SweepCell("theorem1", t.family, t.rank, (i,), n, config, check))
            if n >= 4 and not expected_transitive(t, (i,), n):
                break
            n += 1
    return cells


def _theorem2_parabolics(t: SimpleType) -> List[Tuple[int, ...]]:
    l = t.rank - 1
    if t.family == "D":
        return [(0, l - 1), (0, l), (l - 1, l), (0, l - 1, l)]
    return [(0, l)]


def build_cells(table: str, config: RunConfig, families: Optional[Iterable[str]] = None,
                ranks: Optional[Iterable[int]] = None, check: bool = True) -> List[SweepCell]:
    """Cells of one table in output order."""
    if table not in TABLES:
        raise FlagRankError(f"unknown table {table!r}; expected one of {TABLES}")
    cells: List[SweepCell] = []
    for t in _types(table, families, ranks, config.max_rank):
        if table == "theorem1":
            cells.extend(_theorem1_cells(t, config, check))
        elif table == "theorem2":
            for I in _theorem2_parabolics(t):
                for n in (3, 4):
                    cells.append(SweepCell(table, t.family, t.rank, I, n, config, check))
        else:
            parabolics = [(i,) for i in range(t.rank)]
            if t.family != "A" and t.rank >= 3:
                parabolics.append((0, t.rank - 1))
            cells.extend(SweepCell(table, t.family, t.rank, I, None, config) for I in parabolics)
    return cells


def evaluate_cell(cell: SweepCell) -> CellResult:
    """Top-level so that pool workers can pickle it."""
    t = cell.type
    levi = None
    if cell.table == "corollary":
        verdict = is_double_flag_spherical(t, cell.I, cell.config)
        expected = expected_spherical(t, cell.I)
    else:
        pair = cross_check(t, cell.I, cell.n, cell.config) if cell.cross_check else None
        if pair is not None:
            verdict, levi = pair[0], pair[1].transitive
        else:
            verdict = is_generically_transitive(t, cell.I, cell.n, cell.config)
        expected = expected_transitive(t, cell.I, cell.n)
    cert = verdict.certificate
    return CellResult(
        table=cell.table,
        type_name=str(t),
        parabolic=format_parabolic(cell.I),
        n=cell.n,
        computed=verdict.transitive,
        expected=expected,
        method=verdict.method,
        achieved_rank=cert.achieved_rank,
        target_rank=cert.target_rank,
        seed=cert.seeds[0] if cert.seeds else None,
        levi=levi,
    )


def monotonicity_problems(cells: Sequence[SweepCell], results: Sequence[CellResult],
                          config: RunConfig) -> List[str]:
    """
    Monotonicity violations among the computed verdicts. A transitive
    non-maximal cell also needs its maximal parabolics at the same n; those
    missing from the sweep are computed here.
    """
    verdicts = {
        (cell.type, cell.I, cell.n): r.computed
        for cell, r in zip(cells, results) if cell.n is not None
    }
    for (t, I, n), ok in list(verdicts.items()):
        if not ok or len(I) < 2:
            continue
        for i in I:
            key = (t, (i,), n)
            if key not in verdicts:
                verdicts[key] = is_generically_transitive(t, (i,), n, config).transitive
    return check_monotonicity(verdicts)


def sweep(table: str, config: RunConfig, families: Optional[Iterable[str]] = None,
          ranks: Optional[Iterable[int]] = None, check: bool = True,
          progress_cb: Optional[Callable[[int], None]] = None,
          cancel_cb: Optional[Callable[[], bool]] = None
          ) -> Tuple[List[CellResult], List[str]]:
    """Cell results in table order and the monotonicity violations among them."""
    cells = build_cells(table, config, families, ranks, check)
    logger.info("%s: %d cells on %d worker(s)", table, len(cells), config.workers)
    results = run_cells(evaluate_cell, cells, config.workers, progress_cb, cancel_cb)
    for r in results:
        logger.info("%s P{%s} n=%s: %s (%s)", r.type_name, r.parabolic, r.n,
                    "yes" if r.computed else "no", r.method)
    problems = [] if table == "corollary" else monotonicity_problems(cells, results, config)
    for problem in problems:
        logger.warning("monotonicity: %s", problem)
    return results, problems
