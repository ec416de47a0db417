# tests/test_lemma.py
import random

import pytest

from core.classical.forms import FormSpace, anti_diagonal, columns_to_matrix, same_span
from core.classical.lemma import fixed_coordinates, lemma1_basis, random_transversal_triple
from core.error_handler import StructuralImpossibilityError, TransversalityError


@pytest.mark.parametrize("k", [2, 4])
def test_basis_has_gram_q_and_fixed_coordinates(k):
    rng = random.Random(100 + k)
    for _ in range(25):
        space, u1, u2, u3 = random_transversal_triple(k, rng)
        basis, m1, m2, m3 = lemma1_basis(space, u1, u2, u3)
        assert space.gram_of(basis) == anti_diagonal(2 * k)
        for u, m in ((u1, m1), (u2, m2), (u3, m3)):
            assert same_span(basis @ m, u)


def test_fixed_coordinates_for_k_four():
    _, _, m3 = fixed_coordinates(4)
    assert [m3[4 + j, j] for j in range(4)] == [-1, -1, 1, 1]
    assert [m3[j, j] for j in range(4)] == [1, 1, 1, 1]


def test_odd_half_dimension_is_impossible():
    space = FormSpace.orthogonal(6)
    e = lambda *idx: columns_to_matrix(
        [tuple(1 if k == i else 0 for k in range(6)) for i in idx], 6)
    with pytest.raises(StructuralImpossibilityError):
        lemma1_basis(space, e(0, 1, 2), e(3, 4, 5), e(0, 1, 2))


def test_non_transversal_subspaces_are_rejected():
    space = FormSpace.orthogonal(4)
    e = lambda *idx: columns_to_matrix(
        [tuple(1 if k == i else 0 for k in range(4)) for i in idx], 4)
    with pytest.raises(TransversalityError):
        lemma1_basis(space, e(0, 1), e(2, 3), e(0, 2))


