"""
Chevalley basis of a simple Lie algebra with exact integer structure constants.

Basis order: h_1..h_l, then x_alpha for the positive roots in root order,
then y_alpha in the same order. Internally x_alpha = e_alpha and
y_alpha = e_{-alpha}; [e_r, e_{-r}] = h_r.

Signs: for every non-simple positive root the extraspecial pair gets
N = +(p+1). All other constants follow from the standard identities
    N_{s,r} = -N_{r,s},   N_{-r,-s} = -N_{r,s},
    N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2)   (r1+r2+r3 = 0),
and the four-root identity for r1+r2+r3+r4 = 0.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from core.error_handler import DimensionMismatchError, NotNilpotentError
from core.exactlinalg import RationalMatrix
from core.rootsystem import Root, RootSystem

logger = logging.getLogger(__name__)

Terms = Tuple[Tuple[int, int], ...]


def _neg(r: Root) -> Root:
    return tuple(-c for c in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


class StructureConstants:
    """N_{r,s} for all roots r, s with r + s a root."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._pos: Dict[Tuple[Root, Root], int] = {}
        self.extraspecial: Dict[Root, Tuple[Root, Root]] = {}
        self._fill_positive()

    def _is_pos_root(self, r: Root) -> bool:
        return r in self.rs._index

    def _fill_positive(self) -> None:
        rs = self.rs
        order = rs._index
        for xi in rs.positive_roots:
            if sum(xi) == 1:
                continue
            special = []
            for r in rs.positive_roots:
                if sum(r) >= sum(xi):
                    break
                s = _sub(xi, r)
                if self._is_pos_root(s) and order[r] < order[s]:
                    special.append((r, s))
            r1, s1 = min(special, key=lambda p: order[p[0]])
            self.extraspecial[xi] = (r1, s1)
            n_es = rs.string_down(r1, s1) + 1
            self._pos[(r1, s1)] = n_es
            self._pos[(s1, r1)] = -n_es
            xi_len = rs.inner(xi, xi)
            for r, s in special:
                if (r, s) == (r1, s1):
                    continue
                total = Fraction(0)
                t = _sub(s1, r)
                if rs.is_root(t):
                    total += Fraction(self.N(s1, _neg(r)) * self.N(r1, _neg(s)), rs.inner(t, t))
                t = _sub(r1, r)
                if rs.is_root(t):
                    total += Fraction(self.N(_neg(r), r1) * self.N(s1, _neg(s)), rs.inner(t, t))
                n_neg = -Fraction(xi_len, n_es) * total
                assert n_neg.denominator == 1, "non-integral structure constant"
                value = -int(n_neg)
                self._pos[(r, s)] = value
                self._pos[(s, r)] = -value

    def N(self, a: Root, b: Root) -> int:
        rs = self.rs
        c = _add(a, b)
        if not rs.is_root(c):
            return 0
        a_pos = self._is_pos_root(a)
        b_pos = self._is_pos_root(b)
        if a_pos and b_pos:
            return self._pos[(a, b)]
        if not a_pos and not b_pos:
            return -self._pos[(_neg(a), _neg(b))]
        if not a_pos:
            return -self.N(b, a)
        # a positive, b negative
        if self._is_pos_root(c):
            q = Fraction(-rs.inner(c, c), rs.inner(a, a)) * self.N(_neg(b), c)
        else:
            q = Fraction(rs.inner(c, c), rs.inner(b, b)) * self.N(_neg(c), a)
        assert q.denominator == 1
        return int(q)


@dataclass(frozen=True)
class LieElement:
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Sequence) -> "LieElement":
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "LieElement") -> "LieElement":
        if len(self) != len(other):
            raise DimensionMismatchError("Lie elements of different algebras")
        return LieElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def scale(self, c) -> "LieElement":
        c = Fraction(c)
        return LieElement(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> List[int]:
        return [i for i, a in enumerate(self.coeffs) if a]


@dataclass(frozen=True)
class AdOperator:
    """A dim x dim operator in the adjoint picture."""

    matrix: RationalMatrix
    kind: str  # "adjoint" | "group"

    def apply(self, v: LieElement) -> LieElement:
        return LieElement(self.matrix.apply(v.coeffs))

    def __matmul__(self, other: "AdOperator") -> "AdOperator":
        kind = "group" if self.kind == other.kind == "group" else "adjoint"
        return AdOperator(self.matrix @ other.matrix, kind)


class ChevalleyAlgebra:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        self.n_pos = len(rs.positive_roots)
        self.dim = self.rank + 2 * self.n_pos
        self.constants = StructureConstants(rs)
        self._roots: List[Optional[Root]] = (
            [None] * self.rank
            + list(rs.positive_roots)
            + [_neg(r) for r in rs.positive_roots]
        )
        self._root_index: Dict[Root, int] = {
            r: k for k, r in enumerate(self._roots) if r is not None
        }
        self._ad_cache: Dict[int, List[Terms]] = {}
        self._adt_cache: Dict[int, List[Terms]] = {}

    # --- indexing ---

    def x_index(self, r: Root) -> int:
        return self.rank + self.rs.index(r)

    def y_index(self, r: Root) -> int:
        return self.rank + self.n_pos + self.rs.index(r)

    def h_index(self, i: int) -> int:
        return i

    def root_of(self, k: int) -> Optional[Root]:
        """Signed root of a basis vector, None for the Cartan part."""
        return self._roots[k]

    def basis_vector(self, k: int) -> LieElement:
        return LieElement(tuple(Fraction(1 if j == k else 0) for j in range(self.dim)))

    def label(self, k: int) -> str:
        if k < self.rank:
            return f"h{k + 1}"
        r = self._roots[k]
        name = "x" if k < self.rank + self.n_pos else "y"
        return f"{name}{tuple(abs(c) for c in r)}"

    # --- brackets ---

    def basis_bracket(self, a: int, b: int) -> Terms:
        """[b_a, b_b] as ((index, integer coefficient), ...)."""
        ra, rb = self._roots[a], self._roots[b]
        rs = self.rs
        if ra is None and rb is None:
            return ()
        if ra is None:
            c = rs.pairing(rb, a)
            return ((b, c),) if c else ()
        if rb is None:
            c = rs.pairing(ra, b)
            return ((a, -c),) if c else ()
        s = _add(ra, rb)
        if not any(s):
            coroot = rs.coroot_coefficients(ra)
            return tuple((i, c) for i, c in enumerate(coroot) if c)
        if not rs.is_root(s):
            return ()
        return ((self._root_index[s], self.constants.N(ra, rb)),)

    def ad_table(self, a: int) -> List[Terms]:
        cached = self._ad_cache.get(a)
        if cached is None:
            cached = [self.basis_bracket(a, b) for b in range(self.dim)]
            self._ad_cache[a] = cached
        return cached

    def bracket(self, u: LieElement, v: LieElement) -> LieElement:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError(
                f"bracket needs elements of length {self.dim}"
            )
        out = [Fraction(0)] * self.dim
        v_support = v.support()
        for a in u.support():
            ca = u.coeffs[a]
            table = self.ad_table(a)
            for b in v_support:
                cab = ca * v.coeffs[b]
                for k, c in table[b]:
                    out[k] += cab * c
        return LieElement(tuple(out))

    def ad_matrix(self, u: LieElement) -> RationalMatrix:
        cols = [self.bracket(u, self.basis_vector(j)).coeffs for j in range(self.dim)]
        return RationalMatrix.from_columns(cols, rows=self.dim)

    # --- integer fast path for unipotent factors ---

    def ad_transpose_table(self, a: int) -> List[Terms]:
        """Row k lists (j, c) such that [b_a, b_j] has coefficient c at k."""
        cached = self._adt_cache.get(a)
        if cached is None:
            rows: List[List[Tuple[int, int]]] = [[] for _ in range(self.dim)]
            for j, terms in enumerate(self.ad_table(a)):
                for k, c in terms:
                    rows[k].append((j, c))
            cached = [tuple(r) for r in rows]
            self._adt_cache[a] = cached
        return cached

    def _ad_apply_int(self, a: int, vec: List[int], transpose: bool = False) -> List[int]:
        table = self.ad_transpose_table(a) if transpose else self.ad_table(a)
        out = [0] * self.dim
        for j, vj in enumerate(vec):
            if vj:
                for k, c in table[j]:
                    out[k] += c * vj
        return out

    def apply_root_exponential(self, a: int, t: int, vec: List[int],
                               transpose: bool = False) -> List[int]:
        """exp(t ad b_a) (or its transpose) applied to an integer vector; b_a a root vector."""
        if t == 0:
            return vec
        result = list(vec)
        term = vec
        k = 0
        while True:
            k += 1
            term = self._ad_apply_int(a, term, transpose)
            if not any(term):
                return result
            if k > 4:
                raise NotNilpotentError("root vector with ad^5 != 0")
            scale = t ** k
            fk = factorial(k)
            for i, x in enumerate(term):
                if x:
                    q, rem = divmod(x * scale, fk)
                    assert rem == 0, "exp of a Chevalley root vector must be integral"
                    result[i] += q

    def unipotent_product_columns(self, factors: Sequence[Tuple[int, int]]) -> List[List[int]]:
        """Columns of Ad(f_1 ... f_L) for factors (basis index, integer parameter)."""
        cols = []
        for j in range(self.dim):
            v = [0] * self.dim
            v[j] = 1
            for a, t in reversed(factors):
                v = self.apply_root_exponential(a, t, v)
            cols.append(v)
        return cols

    def unipotent_product_rows(self, factors: Sequence[Tuple[int, int]],
                               row_indices: Sequence[int]) -> List[List[int]]:
        """Selected rows of Ad(f_1 ... f_L), without forming the full matrix."""
        out = []
        for r in row_indices:
            v = [0] * self.dim
            v[r] = 1
            for a, t in factors:
                v = self.apply_root_exponential(a, t, v, transpose=True)
            out.append(v)
        return out

    def unipotent_product(self, factors: Sequence[Tuple[int, int]]) -> AdOperator:
        cols = self.unipotent_product_columns(factors)
        return AdOperator(RationalMatrix.from_columns(cols, rows=self.dim), "group")


def build_algebra(rs: RootSystem) -> ChevalleyAlgebra:
    alg = ChevalleyAlgebra(rs)
    logger.debug("Chevalley algebra of type %s, dim %d", rs.type, alg.dim)
    return alg


def bracket(alg: ChevalleyAlgebra, a: LieElement, b: LieElement) -> LieElement:
    return alg.bracket(a, b)


def exp_ad(alg: ChevalleyAlgebra, a: LieElement) -> AdOperator:
    """exp(ad a) as a terminating series; raises NotNilpotentError otherwise."""
    if len(a) != alg.dim:
        raise DimensionMismatchError("element does not belong to this algebra")
    cols = []
    for j in range(alg.dim):
        col = list(alg.basis_vector(j).coeffs)
        term = alg.basis_vector(j)
        for k in range(1, alg.dim + 2):
            term = alg.bracket(a, term).scale(Fraction(1, k))
            if term.is_zero():
                break
            col = [x + y for x, y in zip(col, term.coeffs)]
        else:
            raise NotNilpotentError("ad(a) is not nilpotent")
        cols.append(col)
    return AdOperator(RationalMatrix.from_columns(cols, rows=alg.dim), "group")


def random_word(alg: ChevalleyAlgebra, rng: random.Random, length: int,
                height: int) -> List[Tuple[int, int]]:
    """
    A random word of 2 * `length` factors (index, parameter).

    Each step appends exp(t x_beta) then exp(s y_gamma), with beta and gamma
    drawn independently from the positive roots, so x and y factors alternate.
    """
    roots = alg.rs.positive_roots
    factors = []
    for _ in range(length):
        beta = rng.choice(roots)
        t = rng.randint(-height, height)
        gamma = rng.choice(roots)
        s = rng.randint(-height, height)
        factors.append((alg.x_index(beta), t))
        factors.append((alg.y_index(gamma), s))
    return factors


def random_group_element(alg: ChevalleyAlgebra, seed, length: int,
                         height: int) -> AdOperator:
    """Deterministic in seed; product of unipotent exponentials with det 1."""
    if length < 1:
        raise ValueError("word length must be at least 1")
    if height < 0:
        raise ValueError("height must be non-negative")
    rng = random.Random(seed)
    return alg.unipotent_product(random_word(alg, rng, length, height))
