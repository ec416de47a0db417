# tests/test_orbitrank.py
import random

import pytest

from core.config import RunConfig
from core.error_handler import InvalidParabolicError
from core.orbitrank import (
    BOUND,
    DIRECT,
    LEVI,
    algebra_for,
    check_monotonicity,
    cross_check,
    gtd_flag,
    is_double_flag_spherical,
    is_generically_transitive,
    levi_open_orbit,
    random_cell_point,
    tangent_rank,
)
from core.parabolic import parabolic_data
from core.rootsystem import SimpleType

A1, A2, B3, C3 = SimpleType("A", 1), SimpleType("A", 2), SimpleType("B", 3), SimpleType("C", 3)
D4, D5, E6, G2 = SimpleType("D", 4), SimpleType("D", 5), SimpleType("E", 6), SimpleType("G", 2)


def test_projective_line_is_three_transitive_only():
    assert is_generically_transitive(A1, {0}, 3).transitive
    four = is_generically_transitive(A1, {0}, 4)
    assert not four.transitive
    assert four.method == BOUND
    assert four.one_sided is False


def test_projective_plane_takes_four_points():
    assert is_generically_transitive(A2, {0}, 4).transitive
    assert not is_generically_transitive(A2, {0}, 5).transitive


@pytest.mark.parametrize("t,I,n,expected", [
    (B3, {0}, 3, True),
    (B3, {1}, 3, False),
    (B3, {2}, 3, True),
    (C3, {0, 2}, 3, False),
    (D5, {0, 4}, 3, True),
    (D4, {2, 3}, 3, True),
    (G2, {0}, 3, False),
])
def test_known_verdicts(t, I, n, expected):
    verdict = is_generically_transitive(t, I, n)
    assert verdict.transitive is expected
    if expected:
        assert verdict.method == DIRECT
        assert verdict.certificate.full


def test_e6_with_two_end_nodes_has_no_open_orbit_on_triples():
    verdict = is_generically_transitive(E6, {0, 5}, 3)
    assert not verdict.transitive
    assert verdict.certificate.target_rank == 72
    assert verdict.certificate.retries_used == 5


def test_e6_first_node_is_four_transitive():
    assert is_generically_transitive(E6, {0}, 4).transitive
    assert is_generically_transitive(E6, {0}, 5).method == BOUND


def test_word_sampler_agrees_on_positive_cell():
    config = RunConfig(sampler="word", word_length=8)
    assert is_generically_transitive(B3, {0}, 3, config).transitive


def test_certificate_seed_replays_the_rank():
    config = RunConfig(seed=17)
    verdict = is_generically_transitive(B3, {2}, 3, config)
    alg = algebra_for(B3)
    pd = parabolic_data(alg, {2})
    replay = tangent_rank(alg, pd, 3, verdict.certificate.seeds[0], config)
    assert replay.achieved_rank == verdict.certificate.achieved_rank


def test_same_seed_gives_same_certificate():
    a = is_generically_transitive(D4, {0}, 3, RunConfig(seed=5))
    b = is_generically_transitive(D4, {0}, 3, RunConfig(seed=5))
    assert a == b


@pytest.mark.parametrize("t,I,n", [(D4, {2, 3}, 3), (E6, {0, 5}, 3), (B3, {0}, 3), (A2, {0, 1}, 3)])
def test_levi_route_agrees_with_direct_test(t, I, n):
    direct, levi = cross_check(t, I, n)
    assert levi.method in (LEVI, BOUND)
    assert direct.transitive == levi.transitive


def test_cross_check_skips_non_self_opposite_parabolics():
    assert cross_check(E6, {0}, 3) is None
    assert cross_check(B3, {0}, 2) is None


def test_gtd_values():
    assert gtd_flag(A1, {0}) == 3
    assert gtd_flag(A2, {0}) == 4
    assert gtd_flag(B3, {0}) == 3
    with pytest.raises(InvalidParabolicError):
        gtd_flag(A2, set())


@pytest.mark.parametrize("t,I,expected", [
    (B3, {0}, True),
    (B3, {0, 2}, False),
    (D4, {0, 2}, False),
    (C3, {2}, True),
    (E6, {0}, True),
    (G2, {0}, False),
])
def test_double_flag_sphericity(t, I, expected):
    assert is_double_flag_spherical(t, I).transitive is expected


def test_monotonicity_violations_are_reported():
    verdicts = {
        (B3, (0,), 2): True,
        (B3, (0,), 3): True,
        (B3, (0, 2), 3): True,
        (B3, (2,), 3): False,
        (D4, (0,), 4): True,
        (D4, (0,), 3): False,
    }
    problems = check_monotonicity(verdicts)
    assert len(problems) == 2
    assert any("P{1,3}" in p and "P{3}" in p for p in problems)
    assert any("n=4" in p and "n=3" in p for p in problems)


def test_invalid_n():
    with pytest.raises(ValueError):
        is_generically_transitive(B3, {0}, 0)


@pytest.mark.slow
def test_e8_last_node_has_no_open_orbit_on_triples():
    verdict = is_generically_transitive(SimpleType("E", 8), {7}, 3, RunConfig(retries=2))
    assert not verdict.transitive
    assert verdict.certificate.target_rank == 171


@pytest.mark.slow
def test_e7_last_node_is_three_transitive():
    verdict = is_generically_transitive(SimpleType("E", 7), {6}, 3)
    assert verdict.transitive
    assert verdict.certificate.target_rank == 81


def test_levi_route_directly():
    alg = algebra_for(B3)
    pd = parabolic_data(alg, {0})
    assert levi_open_orbit(alg, pd, 1).transitive
    bound = levi_open_orbit(alg, pd, 4)
    assert bound.method == BOUND and not bound.transitive
    with pytest.raises(ValueError):
        levi_open_orbit(alg, pd, 0)


def test_cell_points_cover_the_nilradical():
    alg = algebra_for(D4)
    pd = parabolic_data(alg, {0})
    factors = random_cell_point(alg, pd, random.Random(3), 2)
    assert [k for k, _ in factors] == list(pd.u_minus_basis)
    assert all(-2 <= s <= 2 for _, s in factors)
