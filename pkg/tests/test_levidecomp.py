# tests/test_levidecomp.py
import pytest

from core.error_handler import FlagRankError
from core.levidecomp import (
    decompose_nilradical,
    grading_holds,
    has_invariant_quadratic,
    invariant_quadratic_weights,
    project_weights,
    weight_balance,
)
from core.orbitrank import algebra_for
from core.parabolic import parabolic_data
from core.rootsystem import SimpleType


def _decompose(family, rank, I):
    alg = algebra_for(SimpleType(family, rank))
    pd = parabolic_data(alg, I)
    return alg, pd, decompose_nilradical(alg, pd)


def test_b4_first_and_last_node():
    alg, pd, summands = _decompose("B", 4, {0, 3})
    assert [s.dim for s in summands] == [3, 1, 3, 3, 3]
    assert [s.degree for s in summands] == [(-1, -2), (-1, -1), (-1, 0), (0, -2), (0, -1)]
    assert sum(s.dim for s in summands) == pd.flag_dim == 13
    assert grading_holds(alg, pd, summands)


@pytest.mark.parametrize("family,rank,I,count", [
    ("B", 5, {0, 4}, 5),
    ("C", 4, {0, 3}, 4),
    ("D", 5, {3, 4}, 3),
    ("D", 4, {0, 3}, 3),
    ("D", 5, {0, 3, 4}, 7),
    ("E", 6, {0, 5}, 3),
])
def test_summand_counts(family, rank, I, count):
    alg, pd, summands = _decompose(family, rank, I)
    assert len(summands) == count
    assert sum(s.dim for s in summands) == pd.flag_dim


def test_e6_end_nodes_give_three_eight_dimensional_modules():
    alg, pd, summands = _decompose("E", 6, {0, 5})
    assert [s.dim for s in summands] == [8, 8, 8]
    weights = invariant_quadratic_weights(alg, pd, summands)
    assert [w for _, w in weights] == [(-2, -2), (-2, 0), (0, -2)]
    assert weight_balance([w for _, w in weights]) == (1, -1, -1)


def test_only_the_trivial_summand_of_b4_carries_a_quadratic():
    alg, pd, summands = _decompose("B", 4, {0, 3})
    flags = [has_invariant_quadratic(alg, pd, s) for s in summands]
    assert flags == [False, True, False, False, False]


def test_projected_weights_for_d4_spin_nodes():
    _, _, summands = _decompose("D", 4, {2, 3})
    assert project_weights(summands, (-1, 1)) == [0, 1, -1]


def test_maximal_parabolic_is_a_single_summand_when_abelian():
    _, pd, summands = _decompose("E", 7, {6})
    assert len(summands) == 1
    assert summands[0].dim == 27


def test_weight_balance_edge_cases():
    assert weight_balance([]) is None
    assert weight_balance([(1, 0), (0, 1)]) is None
    assert weight_balance([(2, 4), (-1, -2)]) == (1, 2)


def test_empty_index_set_is_rejected():
    alg = algebra_for(SimpleType("A", 2))
    with pytest.raises(FlagRankError):
        decompose_nilradical(alg, parabolic_data(alg, set()))
