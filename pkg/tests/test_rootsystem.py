# tests/test_rootsystem.py
import pytest

from core.error_handler import InvalidTypeError, NotRootError
from core.rootsystem import (
    POSITIVE_ROOT_COUNT,
    SimpleType,
    build_root_system,
    i_degree,
    minus_w0_involution,
)

TYPES = [("A", 1), ("A", 4), ("B", 2), ("B", 4), ("C", 3), ("D", 4), ("D", 5),
         ("E", 6), ("E", 7), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("family,rank", TYPES)
def test_positive_root_counts(family, rank):
    rs = build_root_system(SimpleType(family, rank))
    assert len(rs.positive_roots) == POSITIVE_ROOT_COUNT[family](rank)


def test_e8_root_count_and_highest_root():
    rs = build_root_system(SimpleType("E", 8))
    assert len(rs.positive_roots) == 120
    assert rs.highest_root == (2, 3, 4, 6, 5, 4, 3, 2)


@pytest.mark.parametrize("family,rank,highest", [
    ("B", 3, (1, 2, 2)),
    ("C", 3, (2, 2, 1)),
    ("D", 5, (1, 2, 2, 1, 1)),
    ("F", 4, (2, 3, 4, 2)),
    ("G", 2, (3, 2)),
    ("E", 6, (1, 2, 2, 3, 2, 1)),
])
def test_highest_roots_in_bourbaki_numbering(family, rank, highest):
    assert build_root_system(SimpleType(family, rank)).highest_root == highest


def test_roots_are_ordered_by_height_then_descending():
    rs = build_root_system(SimpleType("A", 3))
    assert rs.positive_roots[:3] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    heights = [sum(r) for r in rs.positive_roots]
    assert heights == sorted(heights)


@pytest.mark.parametrize("family,rank,sigma", [
    ("A", 4, [3, 2, 1, 0]),
    ("B", 3, [0, 1, 2]),
    ("D", 4, [0, 1, 2, 3]),
    ("D", 5, [0, 1, 2, 4, 3]),
    ("E", 6, [5, 1, 4, 3, 2, 0]),
    ("E", 7, [0, 1, 2, 3, 4, 5, 6]),
])
def test_minus_w0_involution(family, rank, sigma):
    assert minus_w0_involution(build_root_system(SimpleType(family, rank))) == sigma


def test_reflection_preserves_roots():
    rs = build_root_system(SimpleType("F", 4))
    for r in rs.all_roots():
        for i in range(rs.rank):
            assert rs.is_root(rs.reflect(r, i))


def test_i_degree():
    rs = build_root_system(SimpleType("B", 4))
    assert i_degree(rs, rs.highest_root, {0, 3}) == (1, 2)
    with pytest.raises(NotRootError):
        i_degree(rs, (1, 0, 0, 1), {0})


@pytest.mark.parametrize("family,rank", [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("Q", 2),
                                         ("D", 2), ("A", 0)])
def test_invalid_types_are_rejected(family, rank):
    with pytest.raises(InvalidTypeError):
        SimpleType(family, rank)
