"""
Triples of points of SO_{2l}/P_{1,l} for odd l: pairs (s, a) with s a
maximal isotropic subspace in the component of <e_1..e_l> and a a line
in s. Generic triples are moved to one reference triple.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from core.classical.forms import (
    FormSpace,
    columns_to_matrix,
    contains,
    coordinates,
    dim,
    intersection,
    is_isotropic,
    orthogonal_complement,
    random_form_element,
    same_span,
    subspace_sum,
)
from core.classical.lemma import fixed_coordinates, lemma1_basis
from core.error_handler import InvalidTypeError, YConditionError
from core.exactlinalg import RationalMatrix, determinant, inverse, rational_sqrt

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class TriplePoint:
    s: Tuple[RationalMatrix, RationalMatrix, RationalMatrix]
    a: Tuple[Vector, Vector, Vector]

    def transformed(self, g: RationalMatrix) -> "TriplePoint":
        return TriplePoint(tuple(g @ s for s in self.s), tuple(g.apply(a) for a in self.a))


def _e(n: int, i: int) -> Vector:
    """Standard vector e_i, 1-based."""
    return tuple(Fraction(1 if k == i - 1 else 0) for k in range(n))


def _vsum(*vs: Vector) -> Vector:
    return tuple(sum(xs, Fraction(0)) for xs in zip(*vs))


def _check_rank(l: int) -> int:
    if l < 3 or l % 2 == 0:
        raise InvalidTypeError("the triple reduction needs odd l >= 3")
    return l - 3


def reference_point(l: int) -> TriplePoint:
    """The fixed tuple every generic triple is moved to."""
    k = _check_rank(l)
    n = 2 * l
    e = lambda i: _e(n, i)
    s1 = [e(i) for i in range(1, l + 1)]
    s2 = [e(3), e(2 * l - 1), e(2 * l)] + [e(4 + k + j) for j in range(k)]
    _, _, m3 = fixed_coordinates(k) if k else (None, None, None)
    s3 = [e(2), e(2 * l - 2), e(2 * l)]
    for j in range(k):
        sign = m3[k + j, j]
        s3.append(_vsum(e(4 + j), tuple(sign * x for x in e(4 + k + j))))
    a = (e(1), _vsum(e(2 * l - 1), e(2 * l)), _vsum(e(2 * l - 2), e(2 * l), e(2)))
    return TriplePoint(tuple(columns_to_matrix(s, n) for s in (s1, s2, s3)), a)


def y_conditions(space: FormSpace, point: TriplePoint) -> List:
    """Numbers of the violated open conditions, plus structural failures by name."""
    n = space.dim
    l = n // 2
    s1, s2, s3 = point.s
    a = point.a
    bad: List = []
    for idx, s in enumerate(point.s, start=1):
        if dim(s) != l or not is_isotropic(space, s):
            bad.append(f"s{idx} maximal isotropic")
        if not contains(s, a[idx - 1]) or not any(a[idx - 1]):
            bad.append(f"a{idx} in s{idx}")
    if bad:
        return bad
    i12, i13, i23 = intersection(s1, s2), intersection(s1, s3), intersection(s2, s3)
    if dim(intersection(i12, s3)):
        bad.append(1)
    if dim(subspace_sum(s1, s2, s3)) != n:
        bad.append(2)
    if not (dim(i12) == dim(i13) == dim(i23) == 1):
        bad.append(3)
    amat = columns_to_matrix(list(a), n)
    if dim(amat) != 3:
        bad.append(4)
    smat = subspace_sum(i12, i13, i23)
    if dim(smat) + dim(amat) != dim(smat.hstack(amat)):
        bad.append(5)
    for i, (j, k) in enumerate(((1, 2), (0, 2), (0, 1))):
        col = columns_to_matrix([a[i]], n)
        if dim(col.hstack(point.s[j]).hstack(point.s[k])) != n:
            bad.append(6)
            break
    if any(space.pair(a[i], a[j]) == 0 for i, j in ((0, 1), (0, 2), (1, 2))):
        bad.append(7)
    return bad


@dataclass(frozen=True)
class TripleReduction:
    B: RationalMatrix
    reference: TriplePoint
    scalars: Tuple[Fraction, ...]


def reduce_triple_D_odd(l: int, point: TriplePoint) -> TripleReduction:
    """An element B of SO_{2l} with B.point = reference_point(l)."""
    k = _check_rank(l)
    space = FormSpace.orthogonal(2 * l)
    n = space.dim
    violated = y_conditions(space, point)
    if violated:
        raise YConditionError(violated)
    s1, s2, s3 = point.s
    f = list(point.a)
    f.append(intersection(s2, s3).col(0))
    f.append(intersection(s1, s3).col(0))
    f.append(intersection(s1, s2).col(0))
    pair = space.pair
    b1, b2, b3 = pair(f[0], f[1]), pair(f[0], f[2]), pair(f[1], f[2])
    b4, b5, b6 = pair(f[0], f[3]), pair(f[1], f[4]), pair(f[2], f[5])
    # all b_i = 1 after scaling f_i by c_i
    c1 = rational_sqrt(b3 / (b1 * b2))
    c2 = 1 / (c1 * b1)
    c3 = 1 / (c1 * b2)
    c = [c1, c2, c3, 1 / (c1 * b4), 1 / (c2 * b5), 1 / (c3 * b6)]
    f = [tuple(ci * x for x in fi) for ci, fi in zip(c, f)]

    g = [f[0], f[4], f[5],
         tuple(x - y - z for x, y, z in zip(f[2], f[3], f[4])),
         tuple(x - y for x, y in zip(f[1], f[3])),
         f[3]]
    S = columns_to_matrix(f, n)
    perp = orthogonal_complement(space, S)
    qs: List[Vector] = []
    if k:
        restricted = FormSpace(2 * k, perp.T @ space.gram @ perp)
        us = []
        for s in point.s:
            cap = intersection(s, perp)
            us.append(columns_to_matrix([coordinates(perp, cap.col(j)) for j in range(cap.cols)], 2 * k))
        basis, _, _, _ = lemma1_basis(restricted, *us)
        qs = [perp.apply(basis.col(j)) for j in range(2 * k)]
    E = columns_to_matrix(g[:3] + qs + g[3:], n)
    B = inverse(E)
    if not space.preserves(B) or determinant(B) != 1:
        raise YConditionError(["component"])
    ref = reference_point(l)
    moved = point.transformed(B)
    for got, want in zip(moved.s, ref.s):
        assert same_span(got, want)
    for got, want in zip(moved.a, ref.a):
        assert dim(columns_to_matrix([got, want], n)) == 1
    logger.debug("reduced triple for l=%d with scalars %s", l, c)
    return TripleReduction(B, ref, tuple(c))


def random_y_point(l: int, rng: random.Random, length: int = 12) -> TriplePoint:
    """A random SO_{2l} translate of the reference triple."""
    space = FormSpace.orthogonal(2 * l)
    g = random_form_element(space, rng, length)
    return reference_point(l).transformed(g)
