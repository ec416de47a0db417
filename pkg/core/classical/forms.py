"""
Bilinear forms, subspaces and matrix groups for the classical models.

Orthogonal spaces carry the anti-diagonal form Q (Q[i][N-1-i] = 1);
symplectic spaces carry J with J[i][N-1-i] = 1 for i < N/2 and -1 below.
Subspaces are given by a matrix whose columns are a basis.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from core.error_handler import DimensionMismatchError, InvalidTypeError
from core.exactlinalg import (
    RationalMatrix,
    determinant,
    inverse,
    kernel_basis,
    nilpotent_exp,
    rank,
    rref,
    solve,
)

logger = logging.getLogger(__name__)

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"


def anti_diagonal(n: int) -> RationalMatrix:
    return RationalMatrix.from_rows([[1 if i + j == n - 1 else 0 for j in range(n)]
                                     for i in range(n)])


def skew_anti_diagonal(n: int) -> RationalMatrix:
    if n % 2:
        raise DimensionMismatchError("a symplectic form needs even dimension")
    return RationalMatrix.from_rows(
        [[(1 if i < n // 2 else -1) if i + j == n - 1 else 0 for j in range(n)]
         for i in range(n)]
    )


@dataclass(frozen=True)
class FormSpace:
    dim: int
    gram: RationalMatrix
    kind: str = ORTHOGONAL

    def __post_init__(self):
        if self.gram.shape != (self.dim, self.dim):
            raise DimensionMismatchError("gram matrix does not match the dimension")
        sign = 1 if self.kind == ORTHOGONAL else -1
        if self.gram.T != self.gram.scale(sign):
            raise DimensionMismatchError(f"gram matrix is not {self.kind}")
        if determinant(self.gram) == 0:
            raise DimensionMismatchError("degenerate form")

    @classmethod
    def orthogonal(cls, n: int) -> "FormSpace":
        return cls(n, anti_diagonal(n), ORTHOGONAL)

    @classmethod
    def symplectic(cls, n: int) -> "FormSpace":
        return cls(n, skew_anti_diagonal(n), SYMPLECTIC)

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(u, self.gram.apply(v)) if a), Fraction(0))

    def gram_of(self, basis: RationalMatrix) -> RationalMatrix:
        return basis.T @ self.gram @ basis

    def preserves(self, g: RationalMatrix) -> bool:
        return g.T @ self.gram @ g == self.gram

    def standard_vector(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(Fraction(1 if k == i else 0) for k in range(self.dim))


# --- subspaces as column spans ---

def columns_to_matrix(vectors: Sequence[Sequence], n: int) -> RationalMatrix:
    if not vectors:
        return RationalMatrix.zeros(n, 0)
    return RationalMatrix.from_columns(vectors, rows=n)


def span_basis(m: RationalMatrix) -> RationalMatrix:
    """Independent columns spanning the same space."""
    if m.cols == 0:
        return m
    _, pivots = rref(m)
    return m.submatrix(range(m.rows), pivots)


def span(vectors: Sequence[Sequence], n: int) -> RationalMatrix:
    return span_basis(columns_to_matrix(list(vectors), n))


def subspace_sum(*ms: RationalMatrix) -> RationalMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = out.hstack(m)
    return span_basis(out)


def intersection(u: RationalMatrix, v: RationalMatrix) -> RationalMatrix:
    """Column basis of span(u) ∩ span(v)."""
    n = u.rows
    if u.cols == 0 or v.cols == 0:
        return RationalMatrix.zeros(n, 0)
    u = span_basis(u)
    v = span_basis(v)
    kern = kernel_basis(u.hstack(-v))
    vectors = [u.apply(x[:u.cols]) for x in kern]
    return span(vectors, n)


def dim(m: RationalMatrix) -> int:
    return rank(m) if m.cols else 0


def contains(m: RationalMatrix, v: Sequence) -> bool:
    if m.cols == 0:
        return not any(v)
    return solve(m, v) is not None


def same_span(u: RationalMatrix, v: RationalMatrix) -> bool:
    du, dv = dim(u), dim(v)
    return du == dv == dim(u.hstack(v))


def coordinates(basis: RationalMatrix, v: Sequence) -> Tuple[Fraction, ...]:
    x = solve(basis, v)
    if x is None:
        raise DimensionMismatchError("vector is not in the span")
    return x


def orthogonal_complement(space: FormSpace, m: RationalMatrix) -> RationalMatrix:
    if m.cols == 0:
        return RationalMatrix.identity(space.dim)
    return columns_to_matrix(kernel_basis(m.T @ space.gram), space.dim)


def is_isotropic(space: FormSpace, m: RationalMatrix) -> bool:
    return space.gram_of(m).is_zero()


# --- symplectic Gram-Schmidt ---

def symplectic_pairs(omega: Callable[[Sequence, Sequence], Fraction],
                     candidates: Sequence[Sequence]) -> List[Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]]:
    """
    Pairs (p_i, q_i) with omega(p_i, q_i) = 1 and all other pairings zero.

    The first nonzero candidate becomes p_1. The candidates must span a
    space on which omega is nondegenerate.
    """
    work = [tuple(Fraction(x) for x in c) for c in candidates]
    pairs = []
    while work:
        p = work.pop(0)
        if not any(p):
            continue
        idx = next((i for i, w in enumerate(work) if omega(p, w)), None)
        if idx is None:
            raise DimensionMismatchError("form is degenerate on the candidate span")
        w = work.pop(idx)
        c = omega(p, w)
        q = tuple(x / c for x in w)
        work = [
            tuple(xi - omega(x, q) * pi + omega(x, p) * qi for xi, pi, qi in zip(x, p, q))
            for x in work
        ]
        pairs.append((p, q))
    return pairs


def bilinear(m: RationalMatrix) -> Callable[[Sequence, Sequence], Fraction]:
    """(u, v) -> u^T m v."""
    def omega(u, v):
        mv = m.apply(v)
        return sum((Fraction(a) * b for a, b in zip(u, mv) if a), Fraction(0))
    return omega


# --- the Lie algebra and group of a form ---

@dataclass(frozen=True)
class ClassicalModel:
    family: str
    rank: int
    space: FormSpace
    algebra: Tuple[RationalMatrix, ...]

    @property
    def nilpotent_basis(self) -> Tuple[RationalMatrix, ...]:
        return tuple(x for x in self.algebra if _strictly_triangular(x))


def _strictly_triangular(x: RationalMatrix) -> bool:
    n = x.rows
    lower = all(not x[i, j] for i in range(n) for j in range(i, n))
    upper = all(not x[i, j] for i in range(n) for j in range(0, i + 1))
    return lower or upper


def form_algebra(space: FormSpace) -> List[RationalMatrix]:
    """Basis of {X : X^T G + G X = 0} as G^-1 Y, Y antisymmetric resp. symmetric."""
    n = space.dim
    g_inv = inverse(space.gram)
    basis = []
    for i in range(n):
        for j in range(i, n):
            if space.kind == ORTHOGONAL and i == j:
                continue
            sign = -1 if space.kind == ORTHOGONAL else 1
            y = [[0] * n for _ in range(n)]
            y[i][j] += 1
            y[j][i] += sign
            basis.append(g_inv @ RationalMatrix.from_rows(y))
    return basis


def build_classical_model(family: str, l: int) -> ClassicalModel:
    """SO_{2l+1} (B), Sp_{2l} (C) or SO_{2l} (D) with its Lie algebra."""
    if family == "B" and l >= 1:
        space = FormSpace.orthogonal(2 * l + 1)
    elif family == "C" and l >= 1:
        space = FormSpace.symplectic(2 * l)
    elif family == "D" and l >= 2:
        space = FormSpace.orthogonal(2 * l)
    else:
        raise InvalidTypeError(f"no classical model for {family}{l}")
    return ClassicalModel(family, l, space, tuple(form_algebra(space)))


def random_form_element(space: FormSpace, rng: random.Random, length: int = 8,
                        height: int = 3,
                        nilpotents: Optional[Sequence[RationalMatrix]] = None) -> RationalMatrix:
    """Product of exp(t X) over random nilpotent X of the form's algebra; det 1."""
    if nilpotents is None:
        nilpotents = [x for x in form_algebra(space) if _strictly_triangular(x)]
    g = RationalMatrix.identity(space.dim)
    for _ in range(length):
        x = rng.choice(nilpotents)
        t = rng.choice([s for s in range(-height, height + 1) if s])
        g = g @ nilpotent_exp(x.scale(t))
    assert space.preserves(g)
    return g


def random_model_element(model: ClassicalModel, rng: random.Random, length: int = 8,
                         height: int = 3) -> RationalMatrix:
    return random_form_element(model.space, rng, length, height, model.nilpotent_basis)
