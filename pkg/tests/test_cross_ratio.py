# tests/test_cross_ratio.py
from fractions import Fraction

import pytest

from core.classical.cross_ratio import (
    LINES,
    PLANES,
    QUADRUPLE,
    configuration_cross_ratio,
    cross_ratio,
    cross_ratio_certificate,
    cross_ratio_lines,
    triple_configuration,
)
from core.classical.forms import columns_to_matrix
from core.error_handler import DegenerateConfigurationError, InvalidTypeError


def test_harmonic_quadruple():
    cert = cross_ratio_certificate(QUADRUPLE, [1, -1, 3, Fraction(1, 3)], l=3, trials=50, seed=2)
    assert cert.value == -1
    assert cert.invariant


def test_plane_cross_ratio_formula():
    v = [(1, 0), (0, 1), (1, 1), (1, 2)]
    # det(v1,v3) det(v2,v4) / (det(v1,v4) det(v2,v3)) = 1 * -1 / (2 * -1)
    assert cross_ratio(*v) == Fraction(1, 2)


def test_coinciding_lines_are_degenerate():
    with pytest.raises(DegenerateConfigurationError):
        cross_ratio((1, 0), (0, 1), (0, 1), (1, 0))


@pytest.mark.parametrize("kind", [LINES, PLANES])
def test_triple_configuration_value(kind):
    conf = triple_configuration(kind, 3, Fraction(1, 2), 1, 1)
    assert configuration_cross_ratio(conf) == Fraction(-1, 2)


@pytest.mark.parametrize("kind,l", [(LINES, 3), (PLANES, 3), (LINES, 5)])
def test_cross_ratio_is_invariant_and_separates_orbits(kind, l):
    first = cross_ratio_certificate(kind, [Fraction(1, 2), 1, 1], l=l, trials=50, seed=4)
    second = cross_ratio_certificate(kind, [Fraction(1, 3), 1, 1], l=l, trials=50, seed=4)
    assert first.invariant and second.invariant
    assert first.value != second.value


def test_degenerate_parameters_are_rejected():
    with pytest.raises(DegenerateConfigurationError):
        triple_configuration(LINES, 3, 1, 0, 0)
    with pytest.raises(InvalidTypeError):
        triple_configuration(LINES, 2, 1, 1, 1)
    with pytest.raises(InvalidTypeError):
        cross_ratio_certificate("circles", [1, 2, 3])


def test_wrong_parameter_count():
    with pytest.raises(ValueError):
        cross_ratio_certificate(QUADRUPLE, [1, 2, 3])


def test_cross_ratio_modulo_a_kernel():
    line = lambda v: columns_to_matrix([v], 3)
    kernel = columns_to_matrix([(0, 0, 1)], 3)
    lines = [line((1, 0, 1)), line((0, 1, 0)), line((1, 1, 5)), line((1, 2, 0))]
    assert cross_ratio_lines(lines, kernel) == Fraction(1, 2)


@pytest.mark.parametrize("kind", [LINES, PLANES])
@pytest.mark.parametrize("params,value", [
    ((Fraction(1, 2), 2, 1), Fraction(-1, 4)),
    ((Fraction(2, 7), 2, 1), Fraction(-1, 7)),
])
def test_extra_coordinates_do_not_change_the_value(kind, params, value):
    small = cross_ratio_certificate(kind, params, l=3, trials=5, seed=1)
    large = cross_ratio_certificate(kind, params, l=5, trials=5, seed=1)
    assert small.value == large.value == value
    # -t tau3 / tau2
    assert value == -params[0] * params[2] / params[1]
