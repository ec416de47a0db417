"""
Parabolic subalgebras p_I, their opposites, Levi parts and nilradicals.

I is the set of (0-based) simple indices whose lowering directions are
removed: p_I = b + sum of g_alpha over negative alpha with no support on I.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from core.chevalley import ChevalleyAlgebra
from core.error_handler import InvalidParabolicError
from core.rootsystem import Root, RootSystem, minus_w0_involution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicData:
    I: FrozenSet[int]
    phi_I: Tuple[Root, ...]
    p_basis: Tuple[int, ...]
    p_minus_basis: Tuple[int, ...]
    levi_basis: Tuple[int, ...]
    u_minus_basis: Tuple[int, ...]
    flag_dim: int

    @property
    def u_plus_basis(self) -> Tuple[int, ...]:
        """Mirror of u_minus_basis under x <-> y."""
        return tuple(k for k in self.p_basis if k not in set(self.levi_basis))


def _validate(rs: RootSystem, I: Iterable[int]) -> FrozenSet[int]:
    I = frozenset(I)
    bad = sorted(i for i in I if not 0 <= i < rs.rank)
    if bad:
        raise InvalidParabolicError(
            f"simple indices {[i + 1 for i in bad]} are out of range for {rs.type}"
        )
    return I


def parabolic_data(alg: ChevalleyAlgebra, I: Iterable[int]) -> ParabolicData:
    rs = alg.rs
    I = _validate(rs, I)
    if not I:
        logger.warning("empty index set: P = G and G/P is a point")

    h = list(range(alg.rank))
    x_all = [alg.x_index(r) for r in rs.positive_roots]
    y_all = [alg.y_index(r) for r in rs.positive_roots]
    levi_roots = [r for r in rs.positive_roots if not any(r[i] for i in I)]
    x_levi = [alg.x_index(r) for r in levi_roots]
    y_levi = [alg.y_index(r) for r in levi_roots]
    y_nil = [alg.y_index(r) for r in rs.positive_roots if any(r[i] for i in I)]

    p_basis = tuple(sorted(h + x_all + y_levi))
    p_minus_basis = tuple(sorted(h + x_levi + y_all))
    levi_basis = tuple(sorted(h + x_levi + y_levi))
    u_minus_basis = tuple(y_nil)
    pd = ParabolicData(
        I=I,
        phi_I=tuple(tuple(-c for c in r) for r in levi_roots),
        p_basis=p_basis,
        p_minus_basis=p_minus_basis,
        levi_basis=levi_basis,
        u_minus_basis=u_minus_basis,
        flag_dim=alg.dim - len(p_basis),
    )
    assert pd.flag_dim == len(u_minus_basis)
    logger.debug("P_%s in %s: flag_dim %d", sorted(i + 1 for i in I), rs.type, pd.flag_dim)
    return pd


def levi_normalizes_nilradical(alg: ChevalleyAlgebra, pd: ParabolicData) -> bool:
    """[l, u-] is contained in u- (checked on basis pairs)."""
    u = set(pd.u_minus_basis)
    for a in pd.levi_basis:
        table = alg.ad_table(a)
        for b in pd.u_minus_basis:
            if any(k not in u for k, _ in table[b]):
                return False
    return True


def is_self_opposite(rs: RootSystem, I: Iterable[int]) -> bool:
    """P_I is conjugate to its opposite iff I is stable under -w0."""
    I = _validate(rs, I)
    sigma = minus_w0_involution(rs)
    return {sigma[i] for i in I} == set(I)


def flag_dimension(alg: ChevalleyAlgebra, I: Iterable[int]) -> int:
    return parabolic_data(alg, I).flag_dim


def borel_basis(alg: ChevalleyAlgebra) -> List[int]:
    """h_1..h_l and every x_alpha."""
    return list(range(alg.rank + alg.n_pos))
