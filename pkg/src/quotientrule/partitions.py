"""Integer partitions in multiplicity form and their per-partition weights.

A partition of ``n`` is stored as the vector ``(y_1, ..., y_n)`` where
``y_i`` counts how many times the part ``i`` occurs, so that
``sum(i * y_i) == n``.  The vector always has length exactly ``n`` (trailing
zeros kept); the partition of 0 is the empty vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from quotientrule.exactnum import format_rat, multinomial


@dataclass(frozen=True)
class Partition:
    target: int
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        mult = tuple(int(y) for y in self.mult)
        object.__setattr__(self, "mult", mult)
        if self.target < 0:
            raise ValueError(f"partition target must be >= 0, got {self.target}")
        if len(mult) != self.target:
            raise ValueError(
                f"multiplicity vector of a partition of {self.target} must have "
                f"length {self.target}, got {len(mult)}"
            )
        if any(y < 0 or y > self.target for y in mult):
            raise ValueError(f"multiplicities out of range: {mult}")
        if sum(i * y for i, y in enumerate(mult, start=1)) != self.target:
            raise ValueError(f"{mult} is not a partition of {self.target}")

    @classmethod
    def from_parts(cls, parts: list[int] | tuple[int, ...]) -> Partition:
        """Build from a list of parts, e.g. ``[2, 1, 1]`` -> ``(2, 1, 0, 0)``."""
        n = sum(parts)
        mult = [0] * n
        for part in parts:
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            mult[part - 1] += 1
        return cls(n, tuple(mult))

    def parts(self) -> tuple[int, ...]:
        """The parts in non-increasing order."""
        out: list[int] = []
        for i in range(self.target, 0, -1):
            out.extend([i] * self.mult[i - 1])
        return tuple(out)

    def y(self, i: int) -> int:
        """Multiplicity of part ``i``; zero beyond the stored vector."""
        if i < 1:
            raise IndexError(f"part index must be >= 1, got {i}")
        return self.mult[i - 1] if i <= self.target else 0

    def to_json(self) -> dict:
        return {"n": self.target, "mult": list(self.mult)}

    @classmethod
    def from_json(cls, obj: dict) -> Partition:
        return cls(int(obj["n"]), tuple(obj["mult"]))

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts()) or "()"


@dataclass(frozen=True)
class PartitionWeights:
    """The six product weights of a partition.

    ``c = prod 1/(i^y_i y_i!)``, ``p = prod 1/(i!^y_i y_i!)`` and
    ``q = prod 1/i!^y_i``; each barred variant carries an extra ``(-1)^y_i``
    per factor, i.e. an overall ``(-1)^r``.
    """

    c: Fraction
    c_bar: Fraction
    p: Fraction
    p_bar: Fraction
    q: Fraction
    q_bar: Fraction

    def to_json(self) -> dict[str, str]:
        return {
            "c": format_rat(self.c),
            "c_bar": format_rat(self.c_bar),
            "p": format_rat(self.p),
            "p_bar": format_rat(self.p_bar),
            "q": format_rat(self.q),
            "q_bar": format_rat(self.q_bar),
        }


def _descending_parts(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for part in range(min(remaining, largest), 0, -1):
        for rest in _descending_parts(remaining - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition.from_parts(parts) if parts else Partition(0, ())
                 for parts in _descending_parts(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``.

    Generated by recursive descent over the largest part, which yields the
    multiplicity vectors in decreasing lexicographic order when read from
    ``y_n`` down to ``y_1``: for ``n = 4`` the order is 4, 3+1, 2+2, 2+1+1,
    1+1+1+1.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return list(_enumerate_cached(n))


def count(n: int) -> int:
    """Partition function p(n) from Euler's pentagonal-number recurrence.

    Kept independent of :func:`enumerate_partitions` so the two can check
    each other.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


def r_of(p: Partition) -> int:
    """Number of parts, ``sum y_i``."""
    return sum(p.mult)


def pi_of(p: Partition) -> int:
    """Weighted sum ``sum i*y_i``; must agree with ``p.target``."""
    total = sum(i * y for i, y in enumerate(p.mult, start=1))
    if total != p.target:
        raise ValueError(f"invariant violated: sum i*y_i = {total} != {p.target}")
    return total


def multiplicity_multinomial(p: Partition) -> int:
    """``r! / prod y_i!`` for the partition's multiplicities."""
    return multinomial(p.mult)


def weights(p: Partition) -> PartitionWeights:
    c = p_w = q = Fraction(1)
    for i, y in enumerate(p.mult, start=1):
        if y == 0:
            continue
        yf = math.factorial(y)
        ifact_pow = math.factorial(i) ** y
        c *= Fraction(1, i**y * yf)
        p_w *= Fraction(1, ifact_pow * yf)
        q *= Fraction(1, ifact_pow)
    sign = -1 if r_of(p) % 2 else 1
    return PartitionWeights(c, sign * c, p_w, sign * p_w, q, sign * q)


def increment(p: Partition, j: int, n: int | None = None) -> Partition:
    """Add one copy of part ``j`` to ``p``.

    The result is a partition of ``p.target + j``.  When ``n`` is given it
    bounds the result's target, mirroring the construction where a partition
    of ``m < n`` gains the part ``n - m``.
    """
    new_target = p.target + j
    if j < 1 or (n is not None and new_target > n):
        bound = "" if n is None else f" with target bound {n}"
        raise ValueError(f"part index {j} out of range for {p}{bound}")
    mult = list(p.mult) + [0] * j
    mult[j - 1] += 1
    return Partition(new_target, tuple(mult))


def decrement(p: Partition, j: int) -> Partition:
    """Remove one copy of part ``j``; the inverse of :func:`increment`."""
    if j < 1 or j > p.target or p.mult[j - 1] == 0:
        raise ValueError(f"part {j} does not occur in {p}")
    mult = list(p.mult)
    mult[j - 1] -= 1
    new_target = p.target - j
    return Partition(new_target, tuple(mult[:new_target]))
