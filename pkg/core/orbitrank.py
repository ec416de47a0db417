"""
Rank tests for open orbits: generic transitivity of G on (G/P)^n, open
Levi orbits on copies of u-, and open Borel orbits on (G/P)^2.

Every test is one-sided. A full-rank matrix at some sampled point proves
the orbit is open. A deficient rank at every one of the retried points is
reported as a negative verdict; it is overwhelming evidence, not a proof.

Tangent model: at a point gP the tangent space is g / Ad(g)p. Writing
h = g^-1, the map xi -> xi mod Ad(g)p becomes xi -> (Ad(h) xi) mod p,
and since g = u- + p as index sets, the u- rows of Ad(h) give its
coordinates.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.chevalley import ChevalleyAlgebra, build_algebra, random_word
from core.config import RunConfig
from core.error_handler import InvalidParabolicError
from core.exactlinalg import rank_of_integer_rows
from core.parabolic import ParabolicData, borel_basis, is_self_opposite, parabolic_data
from core.rootsystem import SimpleType, build_root_system
from utils.hash_checker import derive_seed

logger = logging.getLogger(__name__)

DIRECT = "direct tangent"
LEVI = "levi route"
BOUND = "dimension bound"
BOREL = "borel tangent"


@dataclass(frozen=True)
class RankCertificate:
    achieved_rank: int
    target_rank: int
    seeds: Tuple[int, ...]
    retries_used: int
    matrix_shape: Tuple[int, int]

    @property
    def full(self) -> bool:
        return self.achieved_rank == self.target_rank


@dataclass(frozen=True)
class TransitivityVerdict:
    transitive: bool
    certificate: RankCertificate
    method: str
    one_sided: bool = field(default=True)


@lru_cache(maxsize=None)
def algebra_for(t: SimpleType) -> ChevalleyAlgebra:
    return build_algebra(build_root_system(t))


# --- generic points ---

def random_cell_point(alg: ChevalleyAlgebra, pd: ParabolicData,
                      rng: random.Random, height: int) -> List[Tuple[int, int]]:
    """
    Factors of h = prod exp(s_beta y_beta) over the roots of u-, in root order.

    This parametrizes the opposite big cell U-_P, whose image in G/P is
    open, so a random integer point is generic.
    """
    factors = []
    for k in pd.u_minus_basis:
        s = rng.randint(-height, height)
        factors.append((k, s))
    return factors


def _point_factors(alg: ChevalleyAlgebra, pd: ParabolicData, rng: random.Random,
                   config: RunConfig) -> List[Tuple[int, int]]:
    if config.sampler == "word":
        return random_word(alg, rng, config.length_for(alg.rank), config.height)
    return random_cell_point(alg, pd, rng, config.height)


def _tangent_rows(alg: ChevalleyAlgebra, pd: ParabolicData, factors,
                  columns: Optional[Sequence[int]] = None) -> List[List[int]]:
    rows = alg.unipotent_product_rows(factors, pd.u_minus_basis)
    if columns is not None:
        rows = [[r[c] for c in columns] for r in rows]
    return rows


def _identity_rows(alg: ChevalleyAlgebra, pd: ParabolicData) -> List[List[int]]:
    out = []
    for k in pd.u_minus_basis:
        row = [0] * alg.dim
        row[k] = 1
        out.append(row)
    return out


# --- direct test ---

def _tangent_rank_once(alg, pd, n, seed, config) -> int:
    rng = random.Random(seed)
    rows = _identity_rows(alg, pd)
    for _ in range(1, n):
        rows.extend(_tangent_rows(alg, pd, _point_factors(alg, pd, rng, config)))
    return rank_of_integer_rows(rows, alg.dim)


def tangent_rank(alg: ChevalleyAlgebra, pd: ParabolicData, n: int, seed,
                 config: Optional[RunConfig] = None) -> RankCertificate:
    """Rank of xi -> (xi mod Ad(g_i)p)_i at one random point, g_1 = 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    config = config or RunConfig()
    achieved = _tangent_rank_once(alg, pd, n, seed, config)
    return RankCertificate(
        achieved_rank=achieved,
        target_rank=n * pd.flag_dim,
        seeds=(seed,),
        retries_used=1,
        matrix_shape=(n * pd.flag_dim, alg.dim),
    )


def _retry(label, run_once, target: int, shape: Tuple[int, int],
           config: RunConfig) -> RankCertificate:
    best = -1
    best_seed = None
    seeds = []
    for attempt in range(config.retries):
        seed = derive_seed(config.seed, label, attempt)
        seeds.append(seed)
        achieved = run_once(seed)
        logger.debug("%s attempt %d seed %d: rank %d / %d",
                     label, attempt, seed, achieved, target)
        if achieved > best:
            best, best_seed = achieved, seed
        if achieved == target:
            break
    # best seed first so the certificate can be replayed directly
    ordered = (best_seed,) + tuple(s for s in seeds if s != best_seed)
    return RankCertificate(best, target, ordered, len(seeds), shape)


def _bound_verdict(target: int, available: int, shape) -> TransitivityVerdict:
    cert = RankCertificate(available, target, (), 0, shape)
    return TransitivityVerdict(False, cert, BOUND, one_sided=False)


def is_generically_transitive(t: SimpleType, I: Iterable[int], n: int,
                              config: Optional[RunConfig] = None) -> TransitivityVerdict:
    """Open G-orbit on (G/P_I)^n; I is a 0-based simple index set."""
    if n < 1:
        raise ValueError("n must be at least 1")
    config = config or RunConfig()
    alg = algebra_for(t)
    pd = parabolic_data(alg, I)
    return transitivity_verdict(alg, pd, n, config)


def transitivity_verdict(alg: ChevalleyAlgebra, pd: ParabolicData, n: int,
                         config: RunConfig) -> TransitivityVerdict:
    target = n * pd.flag_dim
    shape = (target, alg.dim)
    if target > alg.dim:
        return _bound_verdict(target, alg.dim, shape)
    label = f"direct:{alg.rs.type}:{sorted(pd.I)}:{n}"
    cert = _retry(label, lambda s: _tangent_rank_once(alg, pd, n, s, config),
                  target, shape, config)
    logger.info("%s P%s n=%d: rank %d/%d", alg.rs.type, _fmt(pd.I), n,
                cert.achieved_rank, target)
    return TransitivityVerdict(cert.full, cert, DIRECT)


# --- Levi route ---

def _levi_matrix_rows(alg: ChevalleyAlgebra, pd: ParabolicData, us) -> List[List[int]]:
    """Rows indexed by (copy, u- basis), columns by the Levi basis."""
    u_pos = {k: r for r, k in enumerate(pd.u_minus_basis)}
    fd = pd.flag_dim
    rows = [[0] * len(pd.levi_basis) for _ in range(len(us) * fd)]
    for col, a in enumerate(pd.levi_basis):
        table = alg.ad_table(a)
        for j, u in enumerate(us):
            for b, ub in u:
                for k, c in table[b]:
                    rows[j * fd + u_pos[k]][col] += c * ub
    return rows


def _levi_rank_once(alg, pd, copies, seed, height) -> int:
    rng = random.Random(seed)
    us = [[(k, rng.randint(-height, height)) for k in pd.u_minus_basis]
          for _ in range(copies)]
    return rank_of_integer_rows(_levi_matrix_rows(alg, pd, us), len(pd.levi_basis))


def levi_open_orbit(alg: ChevalleyAlgebra, pd: ParabolicData, copies: int, seed=None,
                    config: Optional[RunConfig] = None) -> TransitivityVerdict:
    """Open L-orbit on (u-)^copies via xi -> ([xi, u_j])_j."""
    if copies < 1:
        raise ValueError("copies must be at least 1")
    config = config or RunConfig()
    if seed is not None:
        config = config.with_seed(seed)
    target = copies * pd.flag_dim
    shape = (target, len(pd.levi_basis))
    if target > len(pd.levi_basis):
        return _bound_verdict(target, len(pd.levi_basis), shape)
    label = f"levi:{alg.rs.type}:{sorted(pd.I)}:{copies}"
    cert = _retry(label, lambda s: _levi_rank_once(alg, pd, copies, s, config.height),
                  target, shape, config)
    return TransitivityVerdict(cert.full, cert, LEVI)


def cross_check(t: SimpleType, I: Iterable[int], n: int,
                config: Optional[RunConfig] = None) -> Optional[Tuple[TransitivityVerdict, TransitivityVerdict]]:
    """Direct verdict and Levi verdict with n-2 copies, for self-opposite P and n >= 3."""
    config = config or RunConfig()
    alg = algebra_for(t)
    pd = parabolic_data(alg, I)
    if n < 3 or not pd.I or not is_self_opposite(alg.rs, pd.I):
        return None
    return (transitivity_verdict(alg, pd, n, config),
            levi_open_orbit(alg, pd, n - 2, config=config))


# --- gtd and sphericity ---

def gtd_flag(t: SimpleType, I: Iterable[int], config: Optional[RunConfig] = None) -> int:
    """Largest n with an open orbit on (G/P)^n."""
    config = config or RunConfig()
    alg = algebra_for(t)
    pd = parabolic_data(alg, I)
    if pd.flag_dim == 0:
        raise InvalidParabolicError("G/P is a point; gtd is unbounded")
    best = 0
    for n in range(1, alg.dim // pd.flag_dim + 1):
        if not transitivity_verdict(alg, pd, n, config).transitive:
            break
        best = n
    return best


def _borel_rank_once(alg, pd, seed, config) -> int:
    rng = random.Random(seed)
    cols = borel_basis(alg)
    rows = []
    for _ in range(2):
        rows.extend(_tangent_rows(alg, pd, _point_factors(alg, pd, rng, config), cols))
    return rank_of_integer_rows(rows, len(cols))


def is_double_flag_spherical(t: SimpleType, I: Iterable[int],
                             config: Optional[RunConfig] = None) -> TransitivityVerdict:
    """Open B-orbit on G/P x G/P."""
    config = config or RunConfig()
    alg = algebra_for(t)
    pd = parabolic_data(alg, I)
    target = 2 * pd.flag_dim
    ncols = alg.rank + alg.n_pos
    shape = (target, ncols)
    if target > ncols:
        return _bound_verdict(target, ncols, shape)
    label = f"borel:{t}:{sorted(pd.I)}"
    cert = _retry(label, lambda s: _borel_rank_once(alg, pd, s, config),
                  target, shape, config)
    return TransitivityVerdict(cert.full, cert, BOREL)


# --- monotonicity ---

Key = Tuple[SimpleType, Tuple[int, ...], int]


def check_monotonicity(verdicts: Dict[Key, bool]) -> List[str]:
    """
    Violations of: transitive at n implies transitive at n-1, and
    transitive for P_I implies transitive for P_i, i in I.
    """
    problems = []
    for (t, I, n), ok in sorted(verdicts.items()):
        if not ok:
            continue
        prev = verdicts.get((t, I, n - 1))
        if prev is False:
            problems.append(f"{t} P{_fmt(I)}: transitive at n={n} but not at n={n - 1}")
        if len(I) > 1:
            for i in I:
                sub = verdicts.get((t, (i,), n))
                if sub is False:
                    problems.append(
                        f"{t} P{_fmt(I)} n={n}: transitive but P{_fmt((i,))} is not"
                    )
    return problems


def _fmt(I) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(I)) + "}"
