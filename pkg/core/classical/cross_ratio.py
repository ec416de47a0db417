"""
Cross ratios of four lines in a plane, and the configurations whose cross
ratio separates infinitely many orbits.

Every line of a configuration is rebuilt from intersections and sums of
the given subspaces, so moving the whole configuration by a group element
and recomputing must give the same value.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.classical.forms import (
    FormSpace,
    columns_to_matrix,
    dim,
    intersection,
    random_form_element,
    subspace_sum,
)
from core.error_handler import DegenerateConfigurationError, InvalidTypeError
from core.exactlinalg import RationalMatrix, solve

logger = logging.getLogger(__name__)

QUADRUPLE = "quadruple"
LINES = "lines"      # points of SO_{2l}/P_{1,l}
PLANES = "planes"    # points of SO_{2l}/P_{l-1,l}
KINDS = (QUADRUPLE, LINES, PLANES)


def _det2(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def cross_ratio(v1, v2, v3, v4) -> Fraction:
    """(v1,v3)(v2,v4) / ((v1,v4)(v2,v3)) for vectors in a plane, (a,b) = det."""
    den = _det2(v1, v4) * _det2(v2, v3)
    if den == 0:
        raise DegenerateConfigurationError("two of the four lines coincide")
    return _det2(v1, v3) * _det2(v2, v4) / den


def _representative(line: RationalMatrix, kernel: Optional[RationalMatrix]) -> Tuple[Fraction, ...]:
    """A vector of the subspace that is not in the kernel."""
    base = 0 if kernel is None else dim(kernel)
    for j in range(line.cols):
        v = line.col(j)
        spanned = columns_to_matrix([v], line.rows)
        if kernel is not None and kernel.cols:
            spanned = spanned.hstack(kernel)
        if dim(spanned) > base:
            return v
    raise DegenerateConfigurationError("subspace lies in the kernel")


def cross_ratio_lines(lines: Sequence[RationalMatrix], kernel: Optional[RationalMatrix] = None) -> Fraction:
    """
    Cross ratio of four lines of a plane, or of four subspaces that are
    lines modulo a common kernel K. The first two lines give the carrier basis.
    """
    if len(lines) != 4:
        raise ValueError("four lines are needed")
    reps = [_representative(x, kernel) for x in lines]
    n = lines[0].rows
    cols = [reps[0], reps[1]]
    if kernel is not None:
        cols += [kernel.col(j) for j in range(kernel.cols)]
    carrier = columns_to_matrix(cols, n)
    if dim(carrier) != len(cols):
        raise DegenerateConfigurationError("the first two lines coincide")
    coords = []
    for v in reps:
        x = solve(carrier, v)
        if x is None:
            raise DegenerateConfigurationError("the four lines do not share a plane")
        coords.append(x[:2])
    return cross_ratio(*coords)


# --- configurations ---

@dataclass(frozen=True)
class Configuration:
    kind: str
    l: int
    subspaces: Tuple[RationalMatrix, ...]  # S'_1..S'_3 then the three second components

    def transformed(self, g: RationalMatrix) -> "Configuration":
        return Configuration(self.kind, self.l, tuple(g @ s for s in self.subspaces))


def _e(n: int, i: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(1 if k == i - 1 else 0) for k in range(n))


def _comb(n: int, *terms) -> Tuple[Fraction, ...]:
    out = [Fraction(0)] * n
    for c, i in terms:
        out[i - 1] += Fraction(c)
    return tuple(out)


def triple_configuration(kind: str, l: int, t, tau2, tau3) -> Configuration:
    """
    S1 = <e1, e2, e_{2l-2}>, S2 = <e2, e3, e_{2l}>, S3 = <e1, e3, e_{2l-1}>,
    each extended by <e4..el>, with lines T1 = <e1 + t e2>, T2 = <e2 + tau2 e3>,
    T3 = <e1 + tau3 e3>. For planes, U_i = T_i + <e_{2l-2} | e_{2l} | e_{2l-1}>
    extended by <e4..el>.
    """
    if kind not in (LINES, PLANES):
        raise InvalidTypeError(f"unknown configuration kind {kind!r}")
    if l < 3:
        raise InvalidTypeError("configurations live in SO_{2l} with l >= 3")
    if tau2 == 0 and tau3 == 0:
        raise DegenerateConfigurationError("T2 + T3 equals <e1, e2>")
    n = 2 * l
    e = lambda i: _e(n, i)
    extra = [e(i) for i in range(4, l + 1)]
    top = (2 * l - 2, 2 * l, 2 * l - 1)
    S = [[e(1), e(2), e(top[0])], [e(2), e(3), e(top[1])], [e(1), e(3), e(top[2])]]
    T = [_comb(n, (1, 1), (t, 2)), _comb(n, (1, 2), (tau2, 3)), _comb(n, (1, 1), (tau3, 3))]
    subspaces = [columns_to_matrix(s + extra, n) for s in S]
    if kind == LINES:
        subspaces += [columns_to_matrix([x], n) for x in T]
    else:
        subspaces += [columns_to_matrix([x, e(top[i])] + extra, n) for i, x in enumerate(T)]
    return Configuration(kind, l, tuple(subspaces))


def configuration_cross_ratio(c: Configuration) -> Fraction:
    """
    Lines S1∩S3, S1∩S2, T1 and T4 = (T2 + T3) ∩ carrier, modulo K = S1∩S2∩S3.
    For planes, T_i = U_i ∩ (sum of the pairwise intersections).
    """
    s1, s2, s3, x1, x2, x3 = c.subspaces
    kernel = intersection(intersection(s1, s2), s3)
    i12, i13, i23 = intersection(s1, s2), intersection(s1, s3), intersection(s2, s3)
    if c.kind == PLANES:
        pairwise = subspace_sum(i12, i13, i23)
        x1, x2, x3 = (intersection(x, pairwise) for x in (x1, x2, x3))
    carrier = subspace_sum(i13, i12)
    t23 = subspace_sum(x2, x3)
    if kernel.cols:
        t23 = subspace_sum(t23, kernel)
    base = dim(kernel)
    if dim(t23) != base + 2:
        raise DegenerateConfigurationError("T2 + T3 is not direct")
    if dim(subspace_sum(t23, carrier)) == base + 2:
        raise DegenerateConfigurationError("T2 + T3 equals the carrier")
    t4 = intersection(t23, carrier)
    return cross_ratio_lines([i13, i12, x1, t4], kernel if kernel.cols else None)


def quadruple_points(l: int, params: Sequence) -> Tuple[FormSpace, List[RationalMatrix]]:
    """Points <e1 + t_j e2> = exp(t_j Y)<e1> on the quadric of isotropic lines in K^{2l}."""
    space = FormSpace.orthogonal(2 * l)
    if space.dim < 5:
        raise InvalidTypeError("the lowering curve needs dimension at least 5")
    n = space.dim
    return space, [columns_to_matrix([_comb(n, (1, 1), (t, 2))], n) for t in params]


@dataclass(frozen=True)
class CrossRatioCertificate:
    kind: str
    l: int
    params: Tuple[Fraction, ...]
    value: Fraction
    trials: int
    invariant: bool


def cross_ratio_certificate(kind: str, params: Sequence, l: int = 3, trials: int = 50,
                            seed=0) -> CrossRatioCertificate:
    """The configuration's cross ratio and its invariance under random SO_{2l} elements."""
    params = tuple(Fraction(p) for p in params)
    rng = random.Random(seed)
    space = FormSpace.orthogonal(2 * l)
    if kind == QUADRUPLE:
        if len(params) != 4:
            raise ValueError("the quadruple kind takes four parameters t1..t4")
        space, pts = quadruple_points(l, params)
        value = cross_ratio_lines(pts)
        evaluate = lambda g: cross_ratio_lines([g @ p for p in pts])
    elif kind in (LINES, PLANES):
        if len(params) != 3:
            raise ValueError("triple kinds take three parameters t, tau2, tau3")
        conf = triple_configuration(kind, l, *params)
        value = configuration_cross_ratio(conf)
        evaluate = lambda g: configuration_cross_ratio(conf.transformed(g))
    else:
        raise InvalidTypeError(f"unknown certificate kind {kind!r}; expected one of {KINDS}")
    ok = True
    for _ in range(trials):
        g = random_form_element(space, rng)
        moved = evaluate(g)
        if moved != value:
            logger.warning("cross ratio changed from %s to %s", value, moved)
            ok = False
    return CrossRatioCertificate(kind, l, params, value, trials, ok)
