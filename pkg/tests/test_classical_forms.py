# tests/test_classical_forms.py
import random

import pytest

from core.classical.forms import (
    FormSpace,
    anti_diagonal,
    build_classical_model,
    columns_to_matrix,
    dim,
    intersection,
    is_isotropic,
    orthogonal_complement,
    random_model_element,
    same_span,
    span,
    subspace_sum,
    symplectic_pairs,
    bilinear,
)
from core.error_handler import DimensionMismatchError, InvalidTypeError
from core.exactlinalg import RationalMatrix, determinant


def _e(n, *idx):
    return [tuple(1 if k == i else 0 for k in range(n)) for i in idx]


@pytest.mark.parametrize("family,l,dimension,algebra_dim", [
    ("B", 3, 7, 21),
    ("C", 3, 6, 21),
    ("D", 4, 8, 28),
    ("D", 5, 10, 45),
])
def test_model_dimensions(family, l, dimension, algebra_dim):
    model = build_classical_model(family, l)
    assert model.space.dim == dimension
    assert len(model.algebra) == algebra_dim
    for x in model.algebra[:10]:
        assert (x.T @ model.space.gram + model.space.gram @ x).is_zero()


def test_random_elements_preserve_the_form_with_det_one():
    rng = random.Random(1)
    for family, l in (("B", 2), ("C", 2), ("D", 3)):
        model = build_classical_model(family, l)
        g = random_model_element(model, rng)
        assert model.space.preserves(g)
        assert determinant(g) == 1


def test_no_model_for_bad_family():
    with pytest.raises(InvalidTypeError):
        build_classical_model("E", 6)


def test_degenerate_gram_is_rejected():
    with pytest.raises(DimensionMismatchError):
        FormSpace(2, RationalMatrix.from_rows([[1, 1], [1, 1]]))


def test_standard_isotropic_subspace_and_complement():
    space = FormSpace.orthogonal(6)
    u = columns_to_matrix(_e(6, 0, 1, 2), 6)
    assert is_isotropic(space, u)
    assert same_span(orthogonal_complement(space, u), u)
    assert space.gram_of(RationalMatrix.identity(6)) == anti_diagonal(6)


def test_intersection_and_sum():
    u = columns_to_matrix(_e(4, 0, 1), 4)
    v = columns_to_matrix(_e(4, 1, 2), 4)
    assert same_span(intersection(u, v), columns_to_matrix(_e(4, 1), 4))
    assert dim(subspace_sum(u, v)) == 3
    assert dim(intersection(u, columns_to_matrix(_e(4, 3), 4))) == 0
    assert dim(span([(1, 1, 0, 0), (2, 2, 0, 0)], 4)) == 1


def test_symplectic_pairs_are_dual():
    space = FormSpace.symplectic(4)
    omega = bilinear(space.gram)
    pairs = symplectic_pairs(omega, _e(4, 0, 1, 2, 3))
    assert len(pairs) == 2
    (p1, q1), (p2, q2) = pairs
    assert omega(p1, q1) == 1 and omega(p2, q2) == 1
    assert omega(p1, p2) == omega(p1, q2) == omega(q1, p2) == omega(q1, q2) == 0
