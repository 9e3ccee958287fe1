"""Exact scalars and the combinatorial functions built on them.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which keeps every value in lowest terms with a
positive denominator.  That canonical form is what makes ``==`` usable as the
comparison everywhere else in the package.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """``n choose k``, with the value 0 whenever k lies outside ``[0, n]``.

    The zero convention lets partition sums use ``binomial(m, i)`` with
    ``i > m`` without filtering.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """Return ``(sum parts)! / prod(parts_i!)``; the empty list gives 1."""
    total = 0
    result = 1
    for part in parts:
        if part < 0:
            raise ValueError(f"multinomial parts must be >= 0, got {part}")
        total += part
        result *= math.comb(total, part)
    return result


def format_rat(x: Rational) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the value is an integer."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer into a canonical Fraction.

    Decimal and exponent notations are rejected on purpose.
    """
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_rat_list(text: str) -> list[Fraction]:
    """Parse a comma separated list such as ``"2,-1/3,0"``."""
    if not text:
        raise ValueError("empty list")
    return [parse_rat(item) for item in text.split(",")]
