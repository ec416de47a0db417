# helpers/golden.py

"""
Loads the golden classification tables from data/golden/ and answers the
question "what verdict do the tables predict for this cell?".

Tables use 1-based index expressions ("1", "l-1", "l"); everything here
works on 0-based index sets like the rest of the package.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from core.error_handler import FlagRankError
from core.notation import parse_parabolic, parse_type
from core.rootsystem import SimpleType

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "data" / "golden"
TABLES = ("theorem1", "theorem2", "corollary")


@lru_cache(maxsize=None)
def load_table(name: str) -> dict:
    if name not in TABLES:
        raise FlagRankError(f"unknown golden table {name!r}; expected one of {TABLES}")
    path = GOLDEN_DIR / f"{name}.json"
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (IOError, OSError, ValueError) as e:
        raise FlagRankError(f"cannot read golden table {path}: {e}") from e
    if data.get("schema") != 1:
        raise FlagRankError(f"unsupported golden schema in {path}")
    return data


def _row_for(table: dict, t: SimpleType) -> Optional[dict]:
    for row in table["rows"]:
        if row["family"] != t.family or t.rank < row.get("min_rank", 1):
            continue
        if "max_rank" in row and t.rank > row["max_rank"]:
            continue
        parity = row.get("parity")
        if parity == "odd" and t.rank % 2 == 0:
            continue
        if parity == "even" and t.rank % 2 == 1:
            continue
        return row
    return None


def _indices(exprs: Iterable[str], rank: int) -> FrozenSet[int]:
    return parse_parabolic(",".join(exprs), rank)


def _isomorphic(t: SimpleType, I: FrozenSet[int]) -> Tuple[SimpleType, FrozenSet[int]]:
    """Low-rank coincidences B2 = C2 and D3 = A3, carried over with their node maps."""
    for entry in load_table("theorem1")["isomorphisms"]:
        if entry["family"] == t.family and entry["rank"] == t.rank:
            target = parse_type(entry["as"])
            mapping = {int(k) - 1: int(v) - 1 for k, v in entry["index_map"].items()}
            return target, frozenset(mapping[i] for i in I)
    return t, I


def expected_maximal(t: SimpleType, i: int, n: int) -> Optional[bool]:
    """Prediction for G on (G/P_i)^n, i 0-based."""
    t, (i,) = _isomorphic(t, frozenset([i]))
    if n <= 2:
        return True
    row = _row_for(load_table("theorem1"), t)
    if row is None:
        return None
    if "rule" in row:
        l, k = t.rank, i + 1
        return n * k * (l + 1 - k) < (l + 1) ** 2
    return n in row["n"] and i in _indices(row["i"], t.rank)


def expected_non_maximal(t: SimpleType, I: FrozenSet[int], n: int) -> Optional[bool]:
    t, I = _isomorphic(t, frozenset(I))
    if n <= 2:
        return True
    table = load_table("theorem2")
    if t.family in table["open"]:
        return None
    row = _row_for(table, t)
    if row is None:
        return False
    listed = {_indices(p, t.rank) for p in row["parabolics"]}
    return n in row["n"] and I in listed


def expected_transitive(t: SimpleType, I: Iterable[int], n: int) -> Optional[bool]:
    """Predicted verdict for (G/P_I)^n, or None where the tables are silent."""
    I = frozenset(I)
    if not I:
        return True
    if len(I) == 1:
        return expected_maximal(t, next(iter(I)), n)
    return expected_non_maximal(t, I, n)


def expected_spherical(t: SimpleType, I: Iterable[int]) -> Optional[bool]:
    """Predicted sphericity of G/P_I x G/P_I."""
    I = frozenset(I)
    if not I:
        return True
    table = load_table("corollary")
    for entry in table["isomorphisms"]:
        if entry["family"] == t.family and entry["rank"] == t.rank:
            target = parse_type(entry["as"])
            mapping = {int(k) - 1: int(v) - 1 for k, v in entry["index_map"].items()}
            t, I = target, frozenset(mapping[i] for i in I)
    if len(I) > 1:
        return False
    row = _row_for(table, t)
    if row is None:
        return None
    if row["parabolics"] == "any maximal":
        return True
    return I in {_indices(p, t.rank) for p in row["parabolics"]}


def transitive_cells(t: SimpleType, n_max: int = 6) -> List[Tuple[int, int]]:
    """(n, i) pairs with n >= 3 the theorem1 table marks transitive, i 0-based."""
    out = []
    for i in range(t.rank):
        for n in range(3, n_max + 1):
            if expected_maximal(t, i, n):
                out.append((n, i))
    return out


def summary(name: str) -> Dict[str, str]:
    table = load_table(name)
    return {"table": table["table"], "title": table["title"], "note": table["note"]}
