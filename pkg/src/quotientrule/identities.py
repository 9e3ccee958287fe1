"""Instance checks of the partition identities that fall out of the reciprocal rule.

Each check returns an :class:`IdentityReport` holding both sides as exact
rationals.  The ``*_terms`` helpers expose the per-partition summands so that
restatements can be compared term by term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from quotientrule.exactnum import binomial, format_rat, multinomial, parse_rat
from quotientrule.partitions import (
    Partition,
    enumerate_partitions,
    multiplicity_multinomial,
    r_of,
    weights,
)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: dict[str, int]
    lhs: Fraction
    rhs: Fraction
    holds: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", Fraction(self.lhs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        object.__setattr__(self, "holds", self.lhs == self.rhs)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "lhs": format_rat(self.lhs),
            "rhs": format_rat(self.rhs),
            "holds": self.holds,
        }

    @classmethod
    def from_json(cls, obj: dict) -> IdentityReport:
        report = cls(obj["name"], {k: int(v) for k, v in obj["params"].items()},
                     parse_rat(obj["lhs"]), parse_rat(obj["rhs"]))
        if "holds" in obj and bool(obj["holds"]) != report.holds:
            raise ValueError("serialized 'holds' flag disagrees with lhs/rhs")
        return report


def _signed_multinomial_terms(n: int, factor: Callable[[int], Fraction | int]) -> list[Fraction]:
    # multinomial(r; y) (-1)^r prod factor(i)^y_i, one entry per partition of n
    terms = []
    for p in enumerate_partitions(n):
        term = Fraction(multiplicity_multinomial(p) * (-1) ** r_of(p))
        for i, y in enumerate(p.mult, start=1):
            if y:
                term *= Fraction(factor(i)) ** y
        terms.append(term)
    return terms


def exponential_terms(n: int) -> list[Fraction]:
    """Summands ``multinomial(r; y) * q_bar`` over the partitions of ``n``."""
    return [multiplicity_multinomial(p) * weights(p).q_bar for p in enumerate_partitions(n)]


def exponential_terms_factorial(n: int) -> list[Fraction]:
    """Same summands written as ``r! * p_bar``."""
    return [factorial(r_of(p)) * weights(p).p_bar for p in enumerate_partitions(n)]


def power_terms(n: int, m: int) -> list[Fraction]:
    return _signed_multinomial_terms(n, lambda i: binomial(m, i))


def inverse_power_terms(n: int, m: int) -> list[Fraction]:
    return _signed_multinomial_terms(n, lambda i: binomial(i + m - 1, m - 1))


def _check_n(n: int, low: int = 0) -> None:
    if n < low:
        raise ValueError(f"n must be >= {low}, got {n}")


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")


def prop_exponential(n: int) -> IdentityReport:
    """Sum of ``multinomial * q_bar`` over partitions of n equals ``(-1)^n / n!``."""
    _check_n(n)
    return IdentityReport("exp", {"n": n}, sum(exponential_terms(n), Fraction(0)),
                          Fraction((-1) ** n, factorial(n)))


def prop_power(n: int, m: int) -> IdentityReport:
    """Signed multinomial sum weighted by ``C(m, i)^y_i``; rhs ``(-1)^n C(n+m-1, m-1)``."""
    _check_n(n)
    _check_m(m)
    return IdentityReport("power", {"n": n, "m": m}, sum(power_terms(n, m), Fraction(0)),
                          (-1) ** n * binomial(n + m - 1, m - 1))


def corollary_central(n: int) -> IdentityReport:
    _check_n(n, 1)
    base = prop_power(n, n)
    return IdentityReport("central", {"n": n}, base.lhs, (-1) ** n * binomial(2 * n - 1, n - 1))


def prop_inverse_power(n: int, m: int) -> IdentityReport:
    """Weights ``C(i+m-1, m-1)^y_i``; rhs ``(-1)^n C(m, n)``."""
    _check_n(n)
    _check_m(m)
    return IdentityReport("inverse-power", {"n": n, "m": m},
                          sum(inverse_power_terms(n, m), Fraction(0)),
                          (-1) ** n * binomial(m, n))


def corollary_alternating(n: int) -> IdentityReport:
    """Plain alternating sum of multinomials: 1, -1, then 0 for n >= 2."""
    _check_n(n)
    base = prop_inverse_power(n, 1)
    return IdentityReport("alternating", {"n": n}, base.lhs, base.rhs)


def _partition_params(Y: Partition) -> dict[str, int]:
    params = {"n": Y.target}
    params.update({f"y{i}": y for i, y in enumerate(Y.mult, start=1) if y})
    return params


def _require_nonempty(Y: Partition) -> None:
    if sum(Y.mult) < 1:
        raise ValueError("identity needs a partition with at least one part")


def lemma_incremented_multinomials(Y: Partition) -> IdentityReport:
    """Sum over j of multinomials with ``Y_j`` lowered by one equals ``multinomial(Y)``.

    Indices with ``Y_j = 0`` contribute nothing.
    """
    _require_nonempty(Y)
    lhs = 0
    for j, y in enumerate(Y.mult):
        if y == 0:
            continue
        lowered = list(Y.mult)
        lowered[j] -= 1
        lhs += multinomial(lowered)
    return IdentityReport("lemma", _partition_params(Y), lhs, multinomial(Y.mult))


def bounded_compositions(bounds: tuple[int, ...], total: int):
    """Tuples ``phi`` with ``0 <= phi_i <= bounds_i`` and ``sum(phi) == total``."""
    for phi in itertools.product(*(range(b + 1) for b in bounds)):
        if sum(phi) == total:
            yield phi


def prop_bounded_composition_sum(Y: Partition) -> IdentityReport:
    _require_nonempty(Y)
    total = sum(Y.mult) - 1
    lhs = sum(multinomial(phi) for phi in bounded_compositions(Y.mult, total))
    return IdentityReport("composition", _partition_params(Y), lhs, multinomial(Y.mult))


IDENTITY_NAMES = ("exp", "power", "inverse-power", "central", "alternating", "lemma", "composition")


def sweep(name: str, max_n: int, max_m: int = 1) -> list[IdentityReport]:
    """All instances of one identity up to the given bounds, in a fixed order.

    ``power`` and ``inverse-power`` range over ``0 <= n <= max_n`` and
    ``1 <= m <= max_m``; ``lemma`` and ``composition`` cover every partition of
    every ``1 <= n <= max_n``.
    """
    if name == "exp":
        return [prop_exponential(n) for n in range(max_n + 1)]
    if name == "power":
        return [prop_power(n, m) for n in range(max_n + 1) for m in range(1, max_m + 1)]
    if name == "inverse-power":
        return [prop_inverse_power(n, m) for n in range(max_n + 1) for m in range(1, max_m + 1)]
    if name == "central":
        return [corollary_central(n) for n in range(1, max_n + 1)]
    if name == "alternating":
        return [corollary_alternating(n) for n in range(max_n + 1)]
    if name == "lemma":
        return [lemma_incremented_multinomials(p)
                for n in range(1, max_n + 1) for p in enumerate_partitions(n)]
    if name == "composition":
        return [prop_bounded_composition_sum(p)
                for n in range(1, max_n + 1) for p in enumerate_partitions(n)]
    raise KeyError(name)
