"""
Block models of u- for the classical Levi cases, their rational invariants,
and the canonical form of generic points in the two even D cases.

A case lists its components as (kind, torus weight). Kinds:
    taut    g v
    dual    g^-T v
    lam2    g A g^T       (A antisymmetric)
    sym2    g S g^T       (S symmetric)
    trivial c
each multiplied by the torus character t^weight. The GL block has size m.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core.classical.forms import bilinear, symplectic_pairs
from core.error_handler import (
    DimensionMismatchError,
    GenericityError,
    InvalidTypeError,
    ResampleExhaustedError,
)
from core.exactlinalg import (
    RationalMatrix,
    determinant,
    inverse,
    kernel_basis,
    rank,
    rational_sqrt,
)

logger = logging.getLogger(__name__)

B_1L = "B_1l"
C_1L = "C_1l"
D_PAIR = "D_l-1l"
D_1L = "D_1l"
D_TRIPLE = "D_1l-1l"

TORUS_SCALARS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                 Fraction(1, 2), Fraction(-1, 2))
MAX_RESAMPLE = 100


@dataclass(frozen=True)
class LeviCase:
    tag: str
    family: str
    parabolic: Tuple[str, ...]  # simple indices as expressions in l, 1-based
    block: Callable[[int], int]
    components: Tuple[Tuple[str, Tuple[int, ...]], ...]
    min_rank: int
    default_rank: int

    def m(self, l: int) -> int:
        return self.block(l)

    def simple_indices(self, l: int) -> List[int]:
        """The parabolic's simple indices, 1-based."""
        return sorted({eval_index(expr, l) for expr in self.parabolic})


def eval_index(expr: str, l: int) -> int:
    return {"1": 1, "l": l, "l-1": l - 1}[expr]


CASES: Dict[str, LeviCase] = {
    B_1L: LeviCase(B_1L, "B", ("1", "l"), lambda l: l - 1,
                   (("dual", (1,)), ("trivial", (1,)), ("taut", (0,)),
                    ("taut", (1,)), ("lam2", (0,))), 3, 4),
    C_1L: LeviCase(C_1L, "C", ("1", "l"), lambda l: l - 1,
                   (("dual", (1,)), ("taut", (1,)), ("sym2", (0,)),
                    ("trivial", (2,))), 3, 4),
    D_PAIR: LeviCase(D_PAIR, "D", ("l-1", "l"), lambda l: l - 1,
                     (("lam2", (0,)), ("taut", (1,)), ("taut", (-1,))), 4, 5),
    D_1L: LeviCase(D_1L, "D", ("1", "l"), lambda l: l - 1,
                   (("lam2", (0,)), ("taut", (1,)), ("dual", (1,))), 4, 4),
    D_TRIPLE: LeviCase(D_TRIPLE, "D", ("1", "l-1", "l"), lambda l: l - 2,
                       (("dual", (1, 0)), ("trivial", (1, 1)), ("taut", (0, 1)),
                        ("trivial", (1, -1)), ("taut", (0, -1)), ("taut", (1, 0)),
                        ("lam2", (0, 0))), 4, 4),
}


def get_case(tag: str, l: Optional[int] = None) -> Tuple[LeviCase, int]:
    case = CASES.get(tag)
    if case is None:
        raise InvalidTypeError(f"unknown Levi case {tag!r}; expected one of {sorted(CASES)}")
    l = case.default_rank if l is None else l
    if l < case.min_rank:
        raise InvalidTypeError(f"case {tag} needs l >= {case.min_rank}")
    return case, l


def component_dim(kind: str, m: int) -> int:
    return {"taut": m, "dual": m, "lam2": m * (m - 1) // 2,
            "sym2": m * (m + 1) // 2, "trivial": 1}[kind]


def module_dims(tag: str, l: int) -> List[int]:
    case, l = get_case(tag, l)
    return [component_dim(kind, case.m(l)) for kind, _ in case.components]


@dataclass(frozen=True)
class LeviPoint:
    case: str
    l: int
    components: Tuple[RationalMatrix, ...]

    def __getitem__(self, k: int) -> RationalMatrix:
        """u_k, 1-based."""
        return self.components[k - 1]


@dataclass(frozen=True)
class LeviElement:
    g: RationalMatrix
    torus: Tuple[Fraction, ...] = field(default=(Fraction(1),))

    def character(self, weight: Sequence[int]) -> Fraction:
        out = Fraction(1)
        for t, w in zip(self.torus, weight):
            out *= t ** w
        return out


def _check_shape(kind: str, m: int, c: RationalMatrix) -> None:
    want = {"taut": (m, 1), "dual": (m, 1), "lam2": (m, m), "sym2": (m, m),
            "trivial": (1, 1)}[kind]
    if c.shape != want:
        raise DimensionMismatchError(f"{kind} component has shape {c.shape}, expected {want}")
    if kind == "lam2" and c.T != -c:
        raise DimensionMismatchError("lam2 component must be antisymmetric")
    if kind == "sym2" and c.T != c:
        raise DimensionMismatchError("sym2 component must be symmetric")


def make_point(tag: str, l: int, components: Sequence) -> LeviPoint:
    case, l = get_case(tag, l)
    m = case.m(l)
    comps = []
    for (kind, _), c in zip(case.components, components):
        if not isinstance(c, RationalMatrix):
            c = RationalMatrix.column(c) if kind in ("taut", "dual") else RationalMatrix.from_rows(c)
        _check_shape(kind, m, c)
        comps.append(c)
    if len(comps) != len(case.components):
        raise DimensionMismatchError(f"case {tag} has {len(case.components)} components")
    return LeviPoint(tag, l, tuple(comps))


def act(h: LeviElement, u: LeviPoint) -> LeviPoint:
    case, _ = get_case(u.case, u.l)
    g = h.g
    g_dual = None
    out = []
    for (kind, weight), c in zip(case.components, u.components):
        chi = h.character(weight)
        if kind == "taut":
            v = g @ c
        elif kind == "dual":
            if g_dual is None:
                g_dual = inverse(g).T
            v = g_dual @ c
        elif kind in ("lam2", "sym2"):
            v = g @ c @ g.T
        else:
            v = c
        out.append(v.scale(chi))
    return LeviPoint(u.case, u.l, tuple(out))


# --- random elements and points ---

def random_levi_element(tag: str, l: int, rng: random.Random, height: int = 3) -> LeviElement:
    case, l = get_case(tag, l)
    m = case.m(l)
    torus_rank = len(case.components[0][1])
    for _ in range(MAX_RESAMPLE):
        g = RationalMatrix.from_rows(
            [[rng.randint(-height, height) for _ in range(m)] for _ in range(m)]
        )
        if determinant(g) != 0:
            torus = tuple(rng.choice(TORUS_SCALARS) for _ in range(torus_rank))
            return LeviElement(g, torus)
    raise ResampleExhaustedError("no invertible block found")


def _random_component(kind: str, m: int, rng: random.Random, height: int) -> RationalMatrix:
    r = lambda: rng.randint(-height, height)
    if kind in ("taut", "dual"):
        return RationalMatrix.column([r() for _ in range(m)])
    if kind == "trivial":
        return RationalMatrix.from_rows([[r()]])
    a = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            if i == j:
                if kind == "sym2":
                    a[i][i] = r()
                continue
            x = r()
            a[i][j] = x
            a[j][i] = x if kind == "sym2" else -x
    return RationalMatrix.from_rows(a)


def random_point(tag: str, l: int, rng: random.Random, height: int = 3) -> LeviPoint:
    case, l = get_case(tag, l)
    m = case.m(l)
    return LeviPoint(tag, l, tuple(_random_component(kind, m, rng, height)
                                   for kind, _ in case.components))


# --- rational invariants ---

def _dot(u: RationalMatrix, v: RationalMatrix) -> Fraction:
    return sum((a * b for a, b in zip(u.entries, v.entries)), Fraction(0))


def invariant_parts(u: LeviPoint) -> Tuple[Fraction, Fraction]:
    """(numerator, denominator) of the case's rational invariant."""
    tag = u.case
    if tag == B_1L:
        # (u1, u3)^2 / (u1, u4)
        return _dot(u[1], u[3]) ** 2, _dot(u[1], u[4])
    if tag == C_1L:
        # (u1, u2) / u4
        return _dot(u[1], u[2]), u[4][0, 0]
    if tag == D_PAIR:
        # u2^T u1^-1 u3, for l odd
        if u.l % 2 == 0:
            raise InvalidTypeError("u1 is invertible only for l odd")
        det = determinant(u[1])
        if det == 0:
            return Fraction(0), Fraction(0)
        return (u[2].T @ inverse(u[1]) @ u[3])[0, 0], Fraction(1)
    if tag == D_TRIPLE:
        # (u1, u3) / u2
        return _dot(u[1], u[3]), u[2][0, 0]
    raise InvalidTypeError(f"no rational invariant recorded for case {tag}")


def rational_invariant(u: LeviPoint) -> Fraction:
    num, den = invariant_parts(u)
    if den == 0:
        raise GenericityError(["denominator of the invariant vanishes"])
    return num / den


@dataclass(frozen=True)
class InvariantReport:
    case: str
    l: int
    trials: int
    all_equal: bool
    failures: int
    sample_values: Tuple[Fraction, ...]
    witness: Optional[Tuple[Fraction, Fraction]]

    @property
    def non_constant(self) -> bool:
        return self.witness is not None


def _generic_random_point(tag: str, l: int, rng: random.Random) -> LeviPoint:
    for _ in range(MAX_RESAMPLE):
        u = random_point(tag, l, rng)
        num, den = invariant_parts(u)
        if den != 0:
            return u
    raise ResampleExhaustedError(f"case {tag}: denominator vanished at every sample")


def verify_rational_invariant(tag: str, l: Optional[int], seed, trials: int = 50) -> InvariantReport:
    """f(g.u) == f(u) on random points and random Levi elements."""
    case, l = get_case(tag, l)
    if tag == D_1L:
        raise InvalidTypeError("case D_1l has no recorded rational invariant")
    if tag == D_PAIR and l % 2 == 0:
        raise InvalidTypeError("case D_l-1l carries the invariant only for l odd")
    rng = random.Random(seed)
    values: List[Fraction] = []
    failures = 0
    for _ in range(trials):
        u = _generic_random_point(tag, l, rng)
        h = random_levi_element(tag, l, rng)
        before = rational_invariant(u)
        after = rational_invariant(act(h, u))
        if before != after:
            failures += 1
            logger.warning("case %s: f(u)=%s but f(g.u)=%s", tag, before, after)
        values.append(before)
    distinct = list(dict.fromkeys(values))
    witness = (distinct[0], distinct[1]) if len(distinct) > 1 else None
    return InvariantReport(tag, l, trials, failures == 0, failures,
                           tuple(values[:5]), witness)


# --- canonical form for the even D cases ---

def canonical_skew(m: int) -> RationalMatrix:
    """R = diag(0, J2, ..., J2) for odd m."""
    rows = [[0] * m for _ in range(m)]
    for i in range(1, m, 2):
        rows[i][i + 1] = 1
        rows[i + 1][i] = -1
    return RationalMatrix.from_rows(rows)


def canonical_point(tag: str, l: int) -> LeviPoint:
    case, l = get_case(tag, l)
    m = case.m(l)
    e1 = [1] + [0] * (m - 1)
    e12 = [1, 1] + [0] * (m - 2)
    return make_point(tag, l, [canonical_skew(m), e1, e12])


def _check_even_case(tag: str, l: int) -> int:
    if tag not in (D_PAIR, D_1L):
        raise InvalidTypeError(f"canonical forms exist for {D_PAIR} and {D_1L} only")
    if l % 2:
        raise InvalidTypeError("canonical forms are for l even")
    return l - 1


def _skew_normal_rows(a: RationalMatrix) -> Tuple[RationalMatrix, Tuple[Fraction, ...]]:
    """g1 with g1 A g1^T = R, first row spanning the kernel of A."""
    m = a.rows
    kappa = kernel_basis(a)[0]
    drop = next(j for j, x in enumerate(kappa) if x)
    candidates = [[1 if k == j else 0 for k in range(m)] for j in range(m) if j != drop]
    pairs = symplectic_pairs(bilinear(a), candidates)
    rows = [kappa]
    for p, q in pairs:
        rows.extend([p, q])
    return RationalMatrix.from_rows(rows), kappa


def _genericity(tag: str, u: LeviPoint) -> List[str]:
    m = u[1].rows
    failed = []
    if rank(u[1]) != m - 1:
        failed.append("rank(u1) = m - 1")
        return failed
    kappa = kernel_basis(u[1])[0]
    k2 = sum((a * b for a, b in zip(kappa, u[2].entries)), Fraction(0))
    k3 = sum((a * b for a, b in zip(kappa, u[3].entries)), Fraction(0))
    if k2 == 0:
        failed.append("kappa . u2 != 0")
    if tag == D_PAIR:
        if rank(u[2].hstack(u[3])) < 2:
            failed.append("u3 not proportional to u2")
        if k3 == 0:
            failed.append("kappa . u3 != 0")
    else:
        if _dot(u[2], u[3]) == 0:
            failed.append("<u2, u3> != 0")
        kap = RationalMatrix.column(kappa)
        if rank(kap.hstack(u[3])) < 2:
            failed.append("u3 not in span(kappa)")
    return failed


def _first_steps(tag: str, u: LeviPoint):
    """Skew normal form and first-column clearing: (g, a, b, rest of u3)."""
    m = u[1].rows
    g1, _ = _skew_normal_rows(u[1])
    u2 = g1.apply(u[2].entries)
    u3 = g1.apply(u[3].entries) if tag == D_PAIR else inverse(g1).T.apply(u[3].entries)
    a = u2[0]
    e = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for i in range(1, m):
        e[i][0] = -u2[i] / a
    E = RationalMatrix.from_rows(e)
    u3 = E.apply(u3) if tag == D_PAIR else inverse(E).T.apply(u3)
    return E @ g1, a, u3[0], u3[1:]


def canonicalize_levi_triple(tag: str, u: LeviPoint) -> Tuple[LeviElement, LeviPoint]:
    """
    Levi element h with h.u = (R, e1, e1 + e2).

    Steps: skew normal form of u1, clearing the first column against u2,
    torus and kernel scaling, then a symplectic map on the R-block sending
    the rest of u3 to e2.
    """
    m = _check_even_case(tag, u.l)
    if u.case != tag:
        raise InvalidTypeError(f"point belongs to case {u.case}, not {tag}")
    failed = _genericity(tag, u)
    if failed:
        raise GenericityError(failed)
    g, a, b, v = _first_steps(tag, u)
    lam = rational_sqrt(1 / (a * b) if tag == D_PAIR else b / a)
    t = 1 / (lam * a)
    # target for the rest of u3 inside the symplectic block
    s = 1 / (lam * a) if tag == D_PAIR else lam * a
    block = m - 1
    jm = canonical_skew(m).submatrix(range(1, m), range(1, m))
    first = tuple(x / s for x in v)
    basis = [first] + [tuple(Fraction(1 if k == j else 0) for k in range(block))
                       for j in range(block)]
    pairs = symplectic_pairs(bilinear(jm), basis)
    cols = []
    for p, q in pairs:
        cols.extend([p, q])
    P = RationalMatrix.from_columns(cols, rows=block)
    S = inverse(P) if tag == D_PAIR else P.T
    full = [[0] * m for _ in range(m)]
    full[0][0] = lam
    for i in range(block):
        for j in range(block):
            full[i + 1][j + 1] = S[i, j]
    h = LeviElement(RationalMatrix.from_rows(full) @ g, (t,))
    result = act(h, u)
    canonical = canonical_point(tag, u.l)
    assert result == canonical, "canonicalization did not reach the canonical point"
    return h, result


def random_generic_point(tag: str, l: int, rng: random.Random) -> LeviPoint:
    """Random generic point in the rational orbit of the canonical one."""
    _check_even_case(tag, l)
    for _ in range(MAX_RESAMPLE):
        u = random_point(tag, l, rng)
        if _genericity(tag, u):
            continue
        _, a, b, _ = _first_steps(tag, u)
        # scaling u3 by a*b makes the needed square root rational
        return LeviPoint(tag, l, (u[1], u[2], u[3].scale(a * b)))
    raise ResampleExhaustedError("no generic point found")
