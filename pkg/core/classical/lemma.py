"""
Standard basis for three pairwise transversal maximal isotropic subspaces
of a 2k-dimensional orthogonal space.

U3 is the graph of an invertible A: U1 -> U2. The form (v, w)_A = (v, Aw)
on U1 is skew and nondegenerate, so k is even. A symplectic basis
q_1..q_k of U1 with the skew anti-diagonal Gram matrix, completed by
q_{k+j} = -A q_j (j <= k/2) and q_{k+j} = A q_j (j > k/2), has Gram
matrix Q, and the three subspaces have fixed coordinates in it.
"""

import random
from typing import Tuple

from core.classical.forms import (
    FormSpace,
    anti_diagonal,
    bilinear,
    dim,
    intersection,
    is_isotropic,
    random_form_element,
    same_span,
    symplectic_pairs,
)
from core.error_handler import (
    DimensionMismatchError,
    ResampleExhaustedError,
    StructuralImpossibilityError,
    TransversalityError,
)
from core.exactlinalg import RationalMatrix, determinant, inverse, solve


def fixed_coordinates(k: int) -> Tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """M1 = [I; 0], M2 = [0; I], M3 = [I; D] with D = diag(-1 (k/2 times), +1 (k/2 times))."""
    half = k // 2
    m1 = [[1 if i == j else 0 for j in range(k)] for i in range(2 * k)]
    m2 = [[1 if i == j + k else 0 for j in range(k)] for i in range(2 * k)]
    m3 = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    m3 += [[(-1 if j < half else 1) if i == j else 0 for j in range(k)] for i in range(k)]
    return (RationalMatrix.from_rows(m1), RationalMatrix.from_rows(m2),
            RationalMatrix.from_rows(m3))


def _check(space: FormSpace, us) -> int:
    n = space.dim
    if n % 2:
        raise DimensionMismatchError("ambient dimension must be even")
    k = n // 2
    for idx, u in enumerate(us, start=1):
        if u.rows != n or dim(u) != k or u.cols != k:
            raise DimensionMismatchError(f"U{idx} must have a basis of {k} vectors")
        if not is_isotropic(space, u):
            raise DimensionMismatchError(f"U{idx} is not isotropic")
    if k % 2:
        raise StructuralImpossibilityError(
            f"k = {k} is odd, so no nondegenerate skew form exists on U1"
        )
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if dim(intersection(us[i], us[j])):
            raise TransversalityError(f"U{i + 1} and U{j + 1} meet nontrivially")
    return k


def lemma1_basis(space: FormSpace, u1: RationalMatrix, u2: RationalMatrix,
                 u3: RationalMatrix):
    """Returns (basis, M1, M2, M3) with basis^T G basis = Q and basis M_i spanning U_i."""
    k = _check(space, (u1, u2, u3))
    if k == 0:
        empty = RationalMatrix.zeros(0, 0)
        return empty, empty, empty, empty
    both = u1.hstack(u2)
    xs, ys = [], []
    for j in range(k):
        coords = solve(both, u3.col(j))
        xs.append(coords[:k])
        ys.append(coords[k:])
    X = RationalMatrix.from_columns(xs, rows=k)
    Y = RationalMatrix.from_columns(ys, rows=k)
    A = Y @ inverse(X)  # U1-coordinates -> U2-coordinates
    M_A = u1.T @ space.gram @ u2 @ A

    pairs = symplectic_pairs(bilinear(M_A), [[1 if i == j else 0 for i in range(k)]
                                             for j in range(k)])
    half = k // 2
    coords = [None] * k
    for i, (p, q) in enumerate(pairs):
        coords[i] = p
        coords[k - 1 - i] = q
    first = [u1.apply(c) for c in coords]
    second = []
    for j, c in enumerate(coords):
        w = u2.apply(A.apply(c))
        second.append(tuple(-x for x in w) if j < half else w)
    basis = RationalMatrix.from_columns(first + second, rows=space.dim)

    M1, M2, M3 = fixed_coordinates(k)
    assert space.gram_of(basis) == anti_diagonal(2 * k)
    for u, m in ((u1, M1), (u2, M2), (u3, M3)):
        assert same_span(basis @ m, u)
    return basis, M1, M2, M3


def random_transversal_triple(k: int, rng: random.Random, height: int = 3):
    """U1 = <e1..ek>, U2 = <e_{k+1}..e_{2k}>, U3 = graph of P S (S skew), then a random SO(2k) element."""
    space = FormSpace.orthogonal(2 * k)
    n = 2 * k
    u1 = RationalMatrix.from_rows([[1 if i == j else 0 for j in range(k)] for i in range(n)])
    u2 = RationalMatrix.from_rows([[1 if i == j + k else 0 for j in range(k)] for i in range(n)])
    for _ in range(100):
        s = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                x = rng.randint(-height, height)
                s[i][j], s[j][i] = x, -x
        S = RationalMatrix.from_rows(s)
        if k and determinant(S) != 0:
            break
    else:
        raise ResampleExhaustedError("no invertible skew matrix found")
    N = anti_diagonal(k) @ S
    u3 = u1 + u2 @ N
    g = random_form_element(space, rng)
    return space, g @ u1, g @ u2, g @ u3
