"""
Root systems of the simple types, numbered as in Bourbaki / Humphreys.

    A_l   1 - 2 - ... - l
    B_l   1 - 2 - ... - (l-1) => l          (alpha_l short)
    C_l   1 - 2 - ... - (l-1) <= l          (alpha_l long)
    D_l   1 - 2 - ... - (l-2) < (l-1), l
    E_l   1 - 3 - 4 - 5 - ... - l,  2 attached to 4
    F_4   1 - 2 => 3 - 4                    (alpha_1, alpha_2 long)
    G_2   1 <= 2                            (alpha_1 short)

Roots are integer coordinate tuples over the simple roots. Positive roots
are generated by closure along root strings and ordered by height, then by
descending coordinates so that alpha_1 precedes alpha_2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from core.error_handler import InvalidTypeError, NotRootError

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]

RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# |Phi+| per family as a function of the rank.
POSITIVE_ROOT_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in RANK_BOUNDS:
            raise InvalidTypeError(f"unknown family {self.family!r}")
        lo, hi = RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidTypeError(f"rank {self.rank} is out of range for type {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _edges(t: SimpleType) -> List[Tuple[int, int]]:
    l = t.rank
    if t.family in "ABCFG":
        return [(i, i + 1) for i in range(l - 1)]
    if t.family == "D":
        return [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    # E_l: chain 1-3-4-...-l and 2-4 (0-based: 0-2, 2-3, ..., 1-3)
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, l - 1)]


def symmetric_form(t: SimpleType) -> List[List[int]]:
    """Integer Gram matrix (alpha_i, alpha_j) of the simple roots."""
    l = t.rank
    lengths = [2] * l
    if t.family == "B":
        lengths = [4] * (l - 1) + [2]
    elif t.family == "C":
        lengths = [2] * (l - 1) + [4]
    elif t.family == "F":
        lengths = [4, 4, 2, 2]
    elif t.family == "G":
        lengths = [2, 6]
    form = [[0] * l for _ in range(l)]
    for i in range(l):
        form[i][i] = lengths[i]
    for i, j in _edges(t):
        # Adjacent roots: (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2.
        v = -max(lengths[i], lengths[j]) // 2
        form[i][j] = form[j][i] = v
    return form


@dataclass
class RootSystem:
    type: SimpleType
    form: List[List[int]]
    cartan: List[List[int]]
    positive_roots: List[Root]
    _index: Dict[Root, int] = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def simple_root(self, i: int) -> Root:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def is_root(self, r: Sequence[int]) -> bool:
        r = tuple(r)
        return r in self._index or tuple(-c for c in r) in self._index

    def index(self, r: Sequence[int]) -> int:
        """Position of a positive root in the fixed order."""
        return self._index[tuple(r)]

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(a[i] * self.form[i][j] * b[j]
                   for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def pairing(self, r: Sequence[int], i: int) -> int:
        """<r, alpha_i^vee>."""
        return sum(r[j] * self.cartan[j][i] for j in range(self.rank))

    def reflect(self, r: Sequence[int], i: int) -> Root:
        c = self.pairing(r, i)
        return tuple(r[k] - (c if k == i else 0) for k in range(self.rank))

    def coroot_coefficients(self, r: Sequence[int]) -> Root:
        """h_r in terms of h_1..h_l: c_i (a_i, a_i) / (r, r)."""
        rr = self.inner(r, r)
        out = []
        for i in range(self.rank):
            q = Fraction(r[i] * self.form[i][i], rr)
            assert q.denominator == 1
            out.append(int(q))
        return tuple(out)

    def height(self, r: Sequence[int]) -> int:
        return sum(r)

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def string_down(self, r: Sequence[int], s: Sequence[int]) -> int:
        """Largest p with s - p r in Phi (s itself is a root)."""
        p = 0
        cur = tuple(s)
        while True:
            cur = tuple(a - b for a, b in zip(cur, r))
            if not self.is_root(cur):
                return p
            p += 1

    def all_roots(self) -> List[Root]:
        return list(self.positive_roots) + [tuple(-c for c in r) for r in self.positive_roots]


def _root_order_key(r: Root):
    return (sum(r), tuple(-c for c in r))


def build_root_system(t: SimpleType) -> RootSystem:
    """Positive roots by closure along alpha_i-strings, level by height."""
    l = t.rank
    form = symmetric_form(t)
    cartan = [[2 * form[i][j] // form[j][j] for j in range(l)] for i in range(l)]
    simple = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    known = set(simple)
    level = list(simple)
    while level:
        nxt = set()
        for r in level:
            for i in range(l):
                # p: how far the alpha_i-string through r extends downwards.
                p = 0
                cur = r
                while True:
                    cur = tuple(c - (1 if k == i else 0) for k, c in enumerate(cur))
                    if cur in known:
                        p += 1
                    else:
                        break
                pair = sum(r[j] * cartan[j][i] for j in range(l))
                if p - pair > 0:
                    up = tuple(c + (1 if k == i else 0) for k, c in enumerate(r))
                    if up not in known:
                        nxt.add(up)
        known.update(nxt)
        level = sorted(nxt)
    positive = sorted(known, key=_root_order_key)
    rs = RootSystem(t, form, cartan, positive)
    rs._index = {r: k for k, r in enumerate(positive)}
    logger.debug("built %s with %d positive roots", t, len(positive))
    return rs


def minus_w0_involution(rs: RootSystem) -> List[int]:
    """
    Permutation sigma of 0-based simple indices with -w0(alpha_i) = alpha_sigma(i).

    w0 is found as the word that drives 2*rho to the antidominant chamber.
    """
    l = rs.rank
    two_rho = tuple(sum(r[k] for r in rs.positive_roots) for k in range(l))
    word: List[int] = []
    v = two_rho
    while True:
        i = next((i for i in range(l) if rs.pairing(v, i) > 0), None)
        if i is None:
            break
        v = rs.reflect(v, i)
        word.append(i)
    sigma = []
    for j in range(l):
        img = rs.simple_root(j)
        for i in word:
            img = rs.reflect(img, i)
        neg = tuple(-c for c in img)
        sigma.append(neg.index(1))
    return sigma


def i_degree(rs: RootSystem, r: Sequence[int], I: Iterable[int]) -> Tuple[int, ...]:
    """Coordinates of a root at the (0-based) positions in I."""
    if not rs.is_root(r):
        raise NotRootError(f"{tuple(r)} is not a root of {rs.type}")
    return tuple(r[i] for i in sorted(I))
