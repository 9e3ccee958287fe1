"""Coefficients of the n-th derivative of ``1/ln x``, computed two ways.

Both paths fill the same container: with

    (1/ln x)^(n) = ((-1)^n / x^n) * sum_{i=2..n+1} a[n,i] / (ln x)^i

:func:`fengqi_log_coefficients` builds ``a[n,i]`` from nested harmonic sums,
while :func:`partition_log_coefficients` bins the reciprocal-rule partition
sum by the number of parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from quotientrule.exactnum import Rational, binomial, format_rat, parse_rat
from quotientrule.partitions import count, enumerate_partitions, r_of, weights


@dataclass(frozen=True)
class LogReciprocalExpansion:
    n: int
    a: dict[int, Fraction]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if set(self.a) != set(range(2, self.n + 2)):
            raise ValueError(f"coefficient keys must be 2..{self.n + 1}, got {sorted(self.a)}")

    def to_json(self) -> dict:
        return {"n": self.n, "a": {str(i): format_rat(self.a[i]) for i in sorted(self.a)}}

    @classmethod
    def from_json(cls, obj: dict) -> LogReciprocalExpansion:
        return cls(int(obj["n"]), {int(k): parse_rat(v) for k, v in obj["a"].items()})


@lru_cache(maxsize=None)
def multiple_harmonic_sum(depth: int, upper: int) -> Fraction:
    """Nested sum ``sum_{l1<=upper} 1/l1 sum_{l2<l1} 1/l2 ...`` with ``depth`` levels.

    Indices strictly decrease, so the sum is 0 once ``upper < depth``.
    ``depth == 0`` is the empty product, 1.
    """
    if depth < 0 or upper < 0:
        raise ValueError(f"need depth >= 0 and upper >= 0, got ({depth}, {upper})")
    if depth == 0:
        return Fraction(1)
    if upper < depth:
        return Fraction(0)
    return sum(
        (Fraction(1, l) * multiple_harmonic_sum(depth - 1, l - 1) for l in range(depth, upper + 1)),
        Fraction(0),
    )


def fengqi_log_coefficients(n: int) -> LogReciprocalExpansion:
    """``a[n,2] = (n-1)!`` and ``a[n,i] = (i-1)!(n-1)! H(i-2, n-1)`` for ``i >= 3``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = {2: Fraction(factorial(n - 1))}
    for i in range(3, n + 2):
        a[i] = factorial(i - 1) * factorial(n - 1) * multiple_harmonic_sum(i - 2, n - 1)
    return LogReciprocalExpansion(n, a)


def partition_log_coefficients(n: int) -> LogReciprocalExpansion:
    # a[n, r+1] = n! * sum over partitions with r parts of c * r!
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = {i: Fraction(0) for i in range(2, n + 2)}
    for p in enumerate_partitions(n):
        r = r_of(p)
        a[r + 1] += factorial(n) * weights(p).c * factorial(r)
    return LogReciprocalExpansion(n, a)


def log_base_x_derivative(n: int, ln_a_scale: Rational) -> LogReciprocalExpansion:
    """Expansion of ``(ln a / ln x)^(n)`` with ``ln a`` given as an exact stand-in."""
    scale = Fraction(ln_a_scale)
    base = partition_log_coefficients(n)
    return LogReciprocalExpansion(n, {i: scale * c for i, c in base.a.items()})


def term_counts(n: int) -> dict[str, int]:
    """Number of summands each path evaluates for order ``n``.

    The partition path has one term per partition of ``n``; the harmonic path
    has one innermost term per strictly decreasing index tuple, plus the
    closed-form ``a[n,2]``.
    """
    return {
        "partition": count(n),
        "fengqi": 1 + sum(binomial(n - 1, i - 2) for i in range(3, n + 2)),
    }
