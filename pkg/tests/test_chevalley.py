# tests/test_chevalley.py
import itertools
import random
from fractions import Fraction

import pytest

from core.chevalley import (
    LieElement,
    build_algebra,
    exp_ad,
    random_group_element,
    random_word,
)
from core.error_handler import NotNilpotentError
from core.rootsystem import SimpleType, build_root_system


def _algebra(family, rank):
    return build_algebra(build_root_system(SimpleType(family, rank)))


def _jacobi_holds(alg, a, b, c):
    x, y, z = (alg.basis_vector(k) for k in (a, b, c))
    total = (alg.bracket(x, alg.bracket(y, z))
             + alg.bracket(y, alg.bracket(z, x))
             + alg.bracket(z, alg.bracket(x, y)))
    return total.is_zero()


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3)])
def test_jacobi_identity_exhaustive(family, rank):
    alg = _algebra(family, rank)
    for a, b, c in itertools.combinations(range(alg.dim), 3):
        assert _jacobi_holds(alg, a, b, c), (alg.label(a), alg.label(b), alg.label(c))


@pytest.mark.parametrize("family,rank", [("B", 4), ("D", 4), ("F", 4)])
def test_jacobi_identity_exhaustive_rank_four(family, rank):
    alg = _algebra(family, rank)
    for a, b, c in itertools.combinations(range(alg.dim), 3):
        assert _jacobi_holds(alg, a, b, c)


@pytest.mark.parametrize("family,rank", [("E", 6), ("D", 6), ("B", 5)])
def test_jacobi_identity_random(family, rank):
    alg = _algebra(family, rank)
    rng = random.Random(3)
    for _ in range(2000):
        a, b, c = (rng.randrange(alg.dim) for _ in range(3))
        assert _jacobi_holds(alg, a, b, c)


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3), ("G", 2), ("F", 4)])
def test_structure_constants_are_plus_minus_p_plus_one(family, rank):
    alg = _algebra(family, rank)
    rs = alg.rs
    roots = rs.all_roots()
    for r in roots:
        for s in roots:
            total = tuple(a + b for a, b in zip(r, s))
            if any(total) and rs.is_root(total):
                p = rs.string_down(r, s)
                assert abs(alg.constants.N(r, s)) == p + 1


def test_x_y_bracket_is_coroot():
    alg = _algebra("B", 2)
    rs = alg.rs
    for r in rs.positive_roots:
        h = alg.bracket(alg.basis_vector(alg.x_index(r)), alg.basis_vector(alg.y_index(r)))
        coroot = rs.coroot_coefficients(r)
        assert h.coeffs[:alg.rank] == tuple(Fraction(c) for c in coroot)
        assert not any(h.coeffs[alg.rank:])


def test_ad_equivariance_of_group_elements():
    alg = _algebra("G", 2)
    rng = random.Random(5)
    for trial in range(60):
        g = random_group_element(alg, trial, length=3, height=2)
        u = LieElement.of([rng.randint(-2, 2) for _ in range(alg.dim)])
        v = LieElement.of([rng.randint(-2, 2) for _ in range(alg.dim)])
        assert g.apply(alg.bracket(u, v)) == alg.bracket(g.apply(u), g.apply(v))


def test_exp_ad_matches_integer_fast_path():
    alg = _algebra("C", 2)
    for r in alg.rs.positive_roots:
        k = alg.x_index(r)
        series = exp_ad(alg, alg.basis_vector(k).scale(3))
        fast = alg.unipotent_product([(k, 3)])
        assert series.matrix == fast.matrix


def test_rows_of_product_match_columns():
    alg = _algebra("B", 3)
    rng = random.Random(9)
    factors = random_word(alg, rng, 4, 2)
    full = alg.unipotent_product(factors).matrix
    rows = alg.unipotent_product_rows(factors, [0, 5, alg.dim - 1])
    for r, row in zip([0, 5, alg.dim - 1], rows):
        assert [Fraction(x) for x in row] == list(full.row(r))


def test_random_word_alternates_x_and_y_factors():
    alg = _algebra("B", 3)
    factors = random_word(alg, random.Random(0), 3, 2)
    assert len(factors) == 6
    x_range = range(alg.rank, alg.rank + alg.n_pos)
    y_range = range(alg.rank + alg.n_pos, alg.dim)
    assert all(k in x_range for k, _ in factors[0::2])
    assert all(k in y_range for k, _ in factors[1::2])
    assert all(-2 <= p <= 2 for _, p in factors)


def test_exp_ad_of_semisimple_element_fails():
    alg = _algebra("A", 1)
    with pytest.raises(NotNilpotentError):
        exp_ad(alg, alg.basis_vector(0))


def test_random_group_element_is_deterministic():
    alg = _algebra("A", 2)
    assert random_group_element(alg, 42, 4, 3).matrix == random_group_element(alg, 42, 4, 3).matrix
    with pytest.raises(ValueError):
        random_group_element(alg, 0, 0, 3)
