"""
The Levi module u- split by I-degree.

Root spaces of u- with equal I-degree form one summand; each summand is an
irreducible l-module, which is certified here rather than assumed. Central
torus weights are reported as the raw (negative) I-degree vectors. Single
K*-weights used elsewhere are linear functionals of these, see
project_weights.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.chevalley import ChevalleyAlgebra
from core.error_handler import FlagRankError
from core.exactlinalg import RationalMatrix, kernel_basis, rank
from core.parabolic import ParabolicData
from core.rootsystem import Root, i_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeviSummand:
    degree: Tuple[int, ...]
    root_list: Tuple[Root, ...]
    basis: Tuple[int, ...]
    dim: int
    lowest_root: Root
    lowest_weight: Tuple[int, ...]
    central_weights: Tuple[int, ...]


def _levi_simple(alg: ChevalleyAlgebra, pd: ParabolicData) -> List[int]:
    return [j for j in range(alg.rank) if j not in pd.I]


def _lowest_roots(alg: ChevalleyAlgebra, pd: ParabolicData, roots) -> List[Root]:
    """Roots beta with beta - alpha_j not a root for every Levi simple j."""
    rs = alg.rs
    out = []
    for r in roots:
        if all(not rs.is_root(tuple(c - (1 if k == j else 0) for k, c in enumerate(r)))
               for j in _levi_simple(alg, pd)):
            out.append(r)
    return out


def _generated(alg: ChevalleyAlgebra, pd: ParabolicData, start: int) -> set:
    """Indices reached from one basis vector under ad x_j, j not in I."""
    raising = [alg.x_index(alg.rs.simple_root(j)) for j in _levi_simple(alg, pd)]
    seen = {start}
    frontier = [start]
    while frontier:
        b = frontier.pop()
        for a in raising:
            for k, c in alg.ad_table(a)[b]:
                if c and k not in seen:
                    seen.add(k)
                    frontier.append(k)
    return seen


def decompose_nilradical(alg: ChevalleyAlgebra, pd: ParabolicData) -> List[LeviSummand]:
    if not pd.I:
        raise FlagRankError("empty index set: the nilradical is zero")
    rs = alg.rs
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for k in pd.u_minus_basis:
        groups.setdefault(i_degree(rs, alg.root_of(k), pd.I), []).append(k)

    summands = []
    for degree in sorted(groups):
        basis = tuple(groups[degree])
        roots = tuple(alg.root_of(k) for k in basis)
        lowest = _lowest_roots(alg, pd, roots)
        if len(lowest) != 1:
            raise FlagRankError(f"degree {degree}: {len(lowest)} lowest roots")
        low = lowest[0]
        summands.append(LeviSummand(
            degree=degree,
            root_list=roots,
            basis=basis,
            dim=len(basis),
            lowest_root=low,
            lowest_weight=tuple(rs.pairing(low, j) for j in _levi_simple(alg, pd)),
            central_weights=degree,
        ))
    _verify(alg, pd, summands)
    return summands


def _verify(alg: ChevalleyAlgebra, pd: ParabolicData, summands: Sequence[LeviSummand]) -> None:
    assert sum(s.dim for s in summands) == pd.flag_dim
    for s in summands:
        span = set(s.basis)
        for a in pd.levi_basis:
            table = alg.ad_table(a)
            for b in s.basis:
                if any(k not in span for k, _ in table[b]):
                    raise FlagRankError(f"summand {s.degree} is not Levi-stable")
        low_idx = alg.y_index(tuple(-c for c in s.lowest_root))
        if _generated(alg, pd, low_idx) != span:
            raise FlagRankError(f"summand {s.degree} is not generated by its lowest vector")


def grading_holds(alg: ChevalleyAlgebra, pd: ParabolicData,
                  summands: Sequence[LeviSummand]) -> bool:
    """[V_d1, V_d2] lies in V_{d1+d2}, or is zero when that degree is absent."""
    by_degree = {s.degree: set(s.basis) for s in summands}
    for s1 in summands:
        for s2 in summands:
            target = tuple(a + b for a, b in zip(s1.degree, s2.degree))
            allowed = by_degree.get(target, set())
            for a in s1.basis:
                table = alg.ad_table(a)
                for b in s2.basis:
                    if any(k not in allowed for k, c in table[b] if c):
                        return False
    return True


def _restricted(alg: ChevalleyAlgebra, a: int, basis: Sequence[int]) -> List[List[int]]:
    """ad(b_a) on a stable summand, in the summand's basis."""
    pos = {k: i for i, k in enumerate(basis)}
    m = [[0] * len(basis) for _ in basis]
    table = alg.ad_table(a)
    for col, b in enumerate(basis):
        for k, c in table[b]:
            m[pos[k]][col] += c
    return m


def has_invariant_quadratic(alg: ChevalleyAlgebra, pd: ParabolicData,
                            summand: LeviSummand) -> bool:
    """
    A nonzero symmetric B with M^T B + B M = 0 for every semisimple Levi
    generator M. Torus invariance is imposed by only allowing entries
    B[p][q] whose weights pair to zero against every Levi coroot.
    """
    rs = alg.rs
    levi = _levi_simple(alg, pd)
    roots = summand.root_list
    d = summand.dim
    unknowns = [(p, q) for p in range(d) for q in range(p, d)
                if all(rs.pairing(roots[p], j) + rs.pairing(roots[q], j) == 0 for j in levi)]
    if not unknowns:
        return False
    if not levi:
        return True
    col_of = {pq: c for c, pq in enumerate(unknowns)}

    def var(p, q):
        return col_of.get((min(p, q), max(p, q)))

    rows = []
    for j in levi:
        simple = rs.simple_root(j)
        for a in (alg.x_index(simple), alg.y_index(simple)):
            m = _restricted(alg, a, summand.basis)
            # (M^T B + B M)[p][q] = sum_r M[r][p] B[r][q] + B[p][r] M[r][q]
            for p in range(d):
                for q in range(p, d):
                    row = [0] * len(unknowns)
                    for r in range(d):
                        if m[r][p]:
                            v = var(r, q)
                            if v is not None:
                                row[v] += m[r][p]
                        if m[r][q]:
                            v = var(p, r)
                            if v is not None:
                                row[v] += m[r][q]
                    if any(row):
                        rows.append(row)
    if not rows:
        return True
    return rank(RationalMatrix.from_rows(rows, cols=len(unknowns))) < len(unknowns)


def invariant_quadratic_weights(alg: ChevalleyAlgebra, pd: ParabolicData,
                                summands: Optional[Sequence[LeviSummand]] = None
                                ) -> List[Tuple[int, Tuple[int, ...]]]:
    """(summand index, central weight of the quadratic) for each summand that has one."""
    if summands is None:
        summands = decompose_nilradical(alg, pd)
    out = []
    for idx, s in enumerate(summands):
        if has_invariant_quadratic(alg, pd, s):
            out.append((idx, tuple(2 * w for w in s.central_weights)))
    logger.debug("invariant quadratics on summands %s", [i for i, _ in out])
    return out


def weight_balance(weights: Sequence[Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """
    A primitive integer vector a != 0 with sum a_i * w_i = 0, or None.

    Normalized so that its first nonzero entry is positive.
    """
    if not weights:
        return None
    width = len(weights[0])
    m = RationalMatrix.from_rows(
        [[w[k] for w in weights] for k in range(width)], cols=len(weights)
    )
    basis = kernel_basis(m)
    if not basis:
        return None
    v = basis[0]
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def project_weights(summands: Sequence[LeviSummand],
                    functional: Sequence[int]) -> List[int]:
    """Single K*-weights from the raw central weights, e.g. (-1, 1) on D_4 P{3,4}."""
    return [sum(f * w for f, w in zip(functional, s.central_weights))
            for s in summands]
