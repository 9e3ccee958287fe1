"""Derivative rules on jets of exact derivative values.

A jet ``[f(x0), f'(x0), ..., f^(n)(x0)]`` holds raw derivatives, not Taylor
coefficients; the ``i!`` normalizations live inside the formulas.  The
explicit partition-sum rules (:func:`reciprocal_jet`, :func:`quotient_jet`,
:func:`log_jet`) each have an independent recursive counterpart used to
check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from quotientrule.exactnum import Rational, binomial, format_rat, parse_rat
from quotientrule.partitions import Partition, enumerate_partitions, multiplicity_multinomial


class JetOrderError(ValueError):
    """Two jets that must share an order do not."""


class SingularPointError(ZeroDivisionError):
    """The divisor jet vanishes at the base point (v(x0) = 0)."""


@dataclass(frozen=True, init=False)
class DerivativeJet:
    d: tuple[Fraction, ...]

    def __init__(self, d: Iterable[Rational | str]) -> None:
        values = tuple(parse_rat(x) if isinstance(x, str) else Fraction(x) for x in d)
        if not values:
            raise ValueError("a jet needs at least the value f(x0)")
        object.__setattr__(self, "d", values)

    @property
    def order(self) -> int:
        return len(self.d) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.d[i]

    def __len__(self) -> int:
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def truncate(self, order: int) -> DerivativeJet:
        return DerivativeJet(self.d[: order + 1])

    def shift(self) -> DerivativeJet:
        """Jet of the derivative f', one order shorter."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        return DerivativeJet(self.d[1:])

    @classmethod
    def constant(cls, value: Rational, order: int) -> DerivativeJet:
        return cls([value] + [0] * order)

    def to_json(self) -> dict:
        return {"order": self.order, "d": [format_rat(x) for x in self.d]}

    @classmethod
    def from_json(cls, obj: dict) -> DerivativeJet:
        jet = cls(obj["d"])
        if "order" in obj and int(obj["order"]) != jet.order:
            raise ValueError(f"declared order {obj['order']} != {jet.order}")
        return jet


def _as_jet(x: DerivativeJet | Sequence[Rational]) -> DerivativeJet:
    return x if isinstance(x, DerivativeJet) else DerivativeJet(x)


def _check_same_order(u: DerivativeJet, v: DerivativeJet) -> None:
    if u.order != v.order:
        raise JetOrderError(f"jet orders differ: {u.order} vs {v.order}")


def _check_nonsingular(v: DerivativeJet) -> None:
    if v.d[0] == 0:
        raise SingularPointError("the rule holds only where v != 0, but v(x0) = 0")


def leibniz_product(u, v) -> DerivativeJet:
    """Jet of ``u*v``: ``(uv)^(m) = sum_k C(m,k) u^(k) v^(m-k)``."""
    u, v = _as_jet(u), _as_jet(v)
    _check_same_order(u, v)
    return DerivativeJet(
        sum((binomial(m, k) * u.d[k] * v.d[m - k] for k in range(m + 1)), Fraction(0))
        for m in range(u.order + 1)
    )


def _reciprocal_partition_term(p: Partition, v: DerivativeJet, scaled: Sequence[Fraction]) -> Fraction:
    # multinomial(r; y) (-1)^r / v^(r+1) * prod (v^(i)/i!)^y_i
    r = sum(p.mult)
    term = Fraction(multiplicity_multinomial(p) * (-1) ** r) / v.d[0] ** (r + 1)
    for i, y in enumerate(p.mult, start=1):
        if y:
            term *= scaled[i] ** y
    return term


def _scaled_derivatives(v: DerivativeJet) -> list[Fraction]:
    # v^(i)/i!, index 0 unused by the partition products
    return [x / factorial(i) for i, x in enumerate(v.d)]


def reciprocal_jet(v) -> DerivativeJet:
    """Jet of ``1/v`` from the explicit partition sum.

    ``(1/v)^(n) = n! * sum over partitions y of n of
    multinomial(r; y) * (-1)^r / v^(r+1) * prod (v^(i)/i!)^y_i``.
    """
    v = _as_jet(v)
    _check_nonsingular(v)
    scaled = _scaled_derivatives(v)
    out = []
    for n in range(v.order + 1):
        total = sum(
            (_reciprocal_partition_term(p, v, scaled) for p in enumerate_partitions(n)),
            Fraction(0),
        )
        out.append(factorial(n) * total)
    return DerivativeJet(out)


def oracle_reciprocal_jet(v) -> DerivativeJet:
    """Jet of ``1/v`` by the classical recursion.

    ``w^(n) = -(n!/v) * sum_{j<n} v^(n-j)/(n-j)! * w^(j)/j!`` with
    ``w^(0) = 1/v``.
    """
    v = _as_jet(v)
    _check_nonsingular(v)
    v0 = v.d[0]
    w = [1 / v0]
    for n in range(1, v.order + 1):
        acc = sum(
            (v.d[n - j] / factorial(n - j) * w[j] / factorial(j) for j in range(n)),
            Fraction(0),
        )
        w.append(-factorial(n) * acc / v0)
    return DerivativeJet(w)


def quotient_jet(u, v) -> DerivativeJet:
    """Jet of ``u/v`` from the explicit double sum.

    ``(u/v)^(n) = n! * sum_{l=0..n} u^(n-l)/(n-l)! * S_l`` where ``S_l`` is
    the partition sum over partitions of ``l`` from the reciprocal rule.
    """
    u, v = _as_jet(u), _as_jet(v)
    _check_same_order(u, v)
    _check_nonsingular(v)
    scaled = _scaled_derivatives(v)
    inner = [
        sum((_reciprocal_partition_term(p, v, scaled) for p in enumerate_partitions(l)), Fraction(0))
        for l in range(v.order + 1)
    ]
    out = []
    for n in range(u.order + 1):
        total = sum(
            (u.d[n - l] / factorial(n - l) * inner[l] for l in range(n + 1)),
            Fraction(0),
        )
        out.append(factorial(n) * total)
    return DerivativeJet(out)


def oracle_quotient_jet(u, v) -> DerivativeJet:
    """Solve ``u = v*w`` for ``w`` through the Leibniz convolution."""
    u, v = _as_jet(u), _as_jet(v)
    _check_same_order(u, v)
    _check_nonsingular(v)
    w: list[Fraction] = []
    for n in range(u.order + 1):
        rest = sum((binomial(n, k) * v.d[k] * w[n - k] for k in range(1, n + 1)), Fraction(0))
        w.append((u.d[n] - rest) / v.d[0])
    return DerivativeJet(w)


def log_jet(v) -> list[Fraction]:
    """Derivatives of ``ln v`` at orders ``1..n``.

    Order 0 is left out since ``ln v(x0)`` is not rational in general.
    Each order is ``n! * sum (r-1)! (-1)^(r-1) / v^r * prod (v^(i)/i!)^y_i / y_i!``.
    """
    v = _as_jet(v)
    _check_nonsingular(v)
    if v.order < 1:
        raise ValueError("log_jet needs a jet of order >= 1")
    scaled = _scaled_derivatives(v)
    out = []
    for n in range(1, v.order + 1):
        total = Fraction(0)
        for p in enumerate_partitions(n):
            r = sum(p.mult)
            term = Fraction(factorial(r - 1) * (-1) ** (r - 1)) / v.d[0] ** r
            for i, y in enumerate(p.mult, start=1):
                if y:
                    term *= scaled[i] ** y / factorial(y)
            total += term
        out.append(factorial(n) * total)
    return out


def eval_Ck(r: int, v0: Rational) -> Fraction:
    """``r``-th derivative of ``1/v`` with respect to ``v``: ``(-1)^r r! / v0^(r+1)``."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    v0 = Fraction(v0)
    if v0 == 0:
        raise SingularPointError("C_k is undefined at v = 0")
    return Fraction((-1) ** r * factorial(r)) / v0 ** (r + 1)
