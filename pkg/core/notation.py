"""
notation.py: parsing of the command-line notation
Rules:
- types are written "E6", "D 5" or given as family + rank
- parabolic index sets are 1-based comma lists ("1,6", "{1, l-1}") and
  come back 0-based
- rationals are "p/q", integers or decimals; output is always "p/q"
Fail fast with the offending token in the message. Never guess.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Union

from core.error_handler import InvalidParabolicError, InvalidTypeError
from core.rootsystem import SimpleType

TYPE_TOKEN = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")

# One index: a number, "l", or "l-k"
INDEX_TOKEN = re.compile(
    r"""
    ^\s*
    (?:
        (\d+)                   # 6
        |
        l\s*(?:-\s*(\d+))?      # l, l-1
    )
    \s*$
    """,
    re.VERBOSE,
)

RATIONAL_TOKEN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_type(text: str, rank: Optional[int] = None) -> SimpleType:
    """'E6' -> SimpleType('E', 6); with rank given, text is just the family."""
    if rank is not None:
        family = text.strip().upper()
        if len(family) != 1:
            raise InvalidTypeError(f"family must be a single letter, got {text!r}")
        return SimpleType(family, int(rank))
    m = TYPE_TOKEN.match(text)
    if not m:
        raise InvalidTypeError(f"cannot read a simple type from {text!r}")
    return SimpleType(m.group(1).upper(), int(m.group(2)))


def parse_parabolic(text: str, rank: int) -> FrozenSet[int]:
    """
    Reads a 1-based index list and returns the 0-based index set.
    "" and "{}" give the empty set, so P = G.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if not body.strip():
        return frozenset()
    out = set()
    for pos, token in enumerate(body.split(","), 1):
        m = INDEX_TOKEN.match(token)
        if not m:
            raise InvalidParabolicError(f"bad index {token.strip()!r} at position {pos}")
        if m.group(1) is not None:
            idx = int(m.group(1))
        else:
            idx = rank - int(m.group(2) or 0)
        if not 1 <= idx <= rank:
            raise InvalidParabolicError(
                f"index {idx} at position {pos} is outside 1..{rank}"
            )
        out.add(idx - 1)
    return frozenset(out)


def format_parabolic(I: Iterable[int]) -> str:
    """0-based set -> '1,6'."""
    return ",".join(str(i + 1) for i in sorted(I))


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = RATIONAL_TOKEN.match(text)
    if m:
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    try:
        return Fraction(text.strip())
    except ValueError:
        raise ValueError(f"not a rational number: {text!r}") from None


def format_rational(q: Union[int, Fraction]) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_range(text: str) -> range:
    """'4-6' or '5' -> inclusive range of ranks."""
    m = re.match(r"^\s*(\d+)\s*(?:-\s*(\d+))?\s*$", text)
    if not m:
        raise ValueError(f"bad rank range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    if hi < lo:
        raise ValueError(f"empty rank range {text!r}")
    return range(lo, hi + 1)
