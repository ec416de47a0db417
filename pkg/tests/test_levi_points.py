# tests/test_levi_points.py
import random
from fractions import Fraction

import pytest

from core.classical.levi_points import (
    B_1L,
    C_1L,
    CASES,
    D_1L,
    D_PAIR,
    D_TRIPLE,
    act,
    canonical_point,
    canonicalize_levi_triple,
    make_point,
    module_dims,
    random_generic_point,
    random_levi_element,
    random_point,
    rational_invariant,
    verify_rational_invariant,
)
from core.error_handler import DimensionMismatchError, GenericityError, InvalidTypeError
from core.levidecomp import decompose_nilradical
from core.orbitrank import algebra_for
from core.parabolic import parabolic_data
from core.rootsystem import SimpleType


@pytest.mark.parametrize("tag,l", [(B_1L, 4), (C_1L, 4), (D_PAIR, 5), (D_1L, 4), (D_TRIPLE, 5)])
def test_module_dimensions_match_the_levi_decomposition(tag, l):
    case = CASES[tag]
    alg = algebra_for(SimpleType(case.family, l))
    pd = parabolic_data(alg, {i - 1 for i in case.simple_indices(l)})
    dims = sorted(s.dim for s in decompose_nilradical(alg, pd))
    assert sorted(module_dims(tag, l)) == dims


@pytest.mark.parametrize("tag,l", [(B_1L, 4), (C_1L, 4), (D_PAIR, 5), (D_TRIPLE, 4)])
def test_invariants_are_exact_and_non_constant(tag, l):
    report = verify_rational_invariant(tag, l, seed=11, trials=50)
    assert report.all_equal
    assert report.failures == 0
    assert report.non_constant


def test_invariant_is_rejected_where_none_exists():
    with pytest.raises(InvalidTypeError):
        verify_rational_invariant(D_1L, 4, seed=0)
    with pytest.raises(InvalidTypeError):
        verify_rational_invariant(D_PAIR, 4, seed=0)


def test_c_invariant_by_hand():
    u = make_point(C_1L, 3, [[1, 2], [3, 4], [[1, 0], [0, 1]], [[2]]])
    assert rational_invariant(u) == Fraction(11, 2)
    h = random_levi_element(C_1L, 3, random.Random(4))
    assert rational_invariant(act(h, u)) == Fraction(11, 2)


def test_vanishing_denominator_is_a_genericity_error():
    u = make_point(C_1L, 3, [[1, 2], [3, 4], [[1, 0], [0, 1]], [[0]]])
    with pytest.raises(GenericityError):
        rational_invariant(u)


def test_make_point_checks_shapes():
    with pytest.raises(DimensionMismatchError):
        make_point(D_1L, 4, [[[0, 1, 0], [1, 0, 0], [0, 0, 0]], [1, 0, 0], [0, 1, 0]])


@pytest.mark.parametrize("tag,l", [(D_PAIR, 4), (D_1L, 4), (D_PAIR, 6), (D_1L, 6)])
def test_canonicalization_reaches_the_canonical_point(tag, l):
    rng = random.Random(21)
    canonical = canonical_point(tag, l)
    for _ in range(25):
        u = random_generic_point(tag, l, rng)
        h, result = canonicalize_levi_triple(tag, u)
        assert result == canonical
        assert act(h, u) == canonical


def test_canonical_point_is_fixed():
    for tag in (D_PAIR, D_1L):
        _, result = canonicalize_levi_triple(tag, canonical_point(tag, 4))
        assert result == canonical_point(tag, 4)


def test_non_generic_point_is_rejected():
    zero_kernel_pairing = make_point(D_1L, 4, [
        [[0, 0, 0], [0, 0, 1], [0, -1, 0]], [0, 1, 0], [1, 0, 0],
    ])
    with pytest.raises(GenericityError) as err:
        canonicalize_levi_triple(D_1L, zero_kernel_pairing)
    assert "kappa . u2 != 0" in err.value.failed


def test_canonicalization_needs_even_rank():
    with pytest.raises(InvalidTypeError):
        canonicalize_levi_triple(D_PAIR, random_point(D_PAIR, 5, random.Random(0)))
