"""End-to-end acceptance checks, shared by the ``verify`` command and the test suite.

Every comparison is exact rational equality.  Random jets come from a seeded
:class:`random.Random`, with numerators in ``[-9, 9]``, denominators in
``[1, 9]`` and a nonzero leading value.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from quotientrule import identities, special
from quotientrule.jets import (
    DerivativeJet,
    leibniz_product,
    log_jet,
    oracle_quotient_jet,
    oracle_reciprocal_jet,
    quotient_jet,
    reciprocal_jet,
)
from quotientrule.partitions import count, enumerate_partitions, pi_of

JETS_PER_ORDER = 50


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None = None

    def to_json(self, timings: bool = False) -> dict:
        doc = {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "budget_seconds": self.budget,
        }
        if timings:
            doc["seconds"] = round(self.seconds, 3)
        return doc


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if x or not nonzero:
            return x


def random_jet(rng: random.Random, order: int, nonzero_base: bool = True) -> DerivativeJet:
    return DerivativeJet(
        [random_rational(rng, nonzero=nonzero_base)]
        + [random_rational(rng) for _ in range(order)]
    )


def _reciprocal_equivalence(rng: random.Random) -> tuple[bool, str]:
    checked = 0
    for n in range(13):
        for _ in range(JETS_PER_ORDER):
            v = random_jet(rng, n)
            if reciprocal_jet(v) != oracle_reciprocal_jet(v):
                return False, f"mismatch at order {n} for v={v.to_json()['d']}"
            checked += 1
    return True, f"{checked} jets, orders 0..12"


def _quotient_agreement(rng: random.Random) -> tuple[bool, str]:
    checked = 0
    for n in range(11):
        for _ in range(JETS_PER_ORDER):
            u = random_jet(rng, n, nonzero_base=False)
            v = random_jet(rng, n)
            direct = quotient_jet(u, v)
            if direct != oracle_quotient_jet(u, v) or direct != leibniz_product(u, reciprocal_jet(v)):
                return False, f"mismatch at order {n}: u={u.to_json()['d']} v={v.to_json()['d']}"
            checked += 1
    return True, f"{checked} jet pairs, orders 0..10"


def _base_cases(rng: random.Random) -> tuple[bool, str]:
    for _ in range(JETS_PER_ORDER):
        v = random_jet(rng, 1)
        w = reciprocal_jet(v)
        if w[0] != 1 / v[0] or w[1] != -v[1] / v[0] ** 2:
            return False, f"base case fails for v={v.to_json()['d']}"
    return True, f"{JETS_PER_ORDER} jets: order 0 = 1/v, order 1 = -v'/v^2"


def _identity_sweeps(rng: random.Random) -> tuple[bool, str]:
    groups = {
        "exp": identities.sweep("exp", 25),
        "power": identities.sweep("power", 15, 10),
        "inverse-power": identities.sweep("inverse-power", 15, 10),
        "central": identities.sweep("central", 15),
        "alternating": identities.sweep("alternating", 25),
    }
    for name, reports in groups.items():
        bad = [r for r in reports if not r.holds]
        if bad:
            return False, f"{name} fails at {bad[0].params}"
    for r in groups["exp"]:
        n = r.params["n"]
        if r.lhs != Fraction((-1) ** n, factorial(n)):
            return False, f"exp value wrong at n={n}"
    expected_alt = [Fraction(1), Fraction(-1)] + [Fraction(0)] * 24
    if [r.lhs for r in groups["alternating"]] != expected_alt:
        return False, "alternating sequence is not (1, -1, 0, ...)"
    total = sum(len(v) for v in groups.values())
    return True, f"{total} identity instances hold"


def _lemma_composition(rng: random.Random) -> tuple[bool, str]:
    checked = 0
    for m in range(1, 13):
        for p in enumerate_partitions(m):
            lemma = identities.lemma_incremented_multinomials(p)
            comp = identities.prop_bounded_composition_sum(p)
            if not (lemma.holds and comp.holds and lemma.lhs == comp.lhs):
                return False, f"disagreement on partition {p} of {m}"
            checked += 1
    return True, f"{checked} partitions of m <= 12"


def _fengqi_crosscheck(rng: random.Random) -> tuple[bool, str]:
    for n in range(1, 11):
        feng = special.fengqi_log_coefficients(n)
        part = special.partition_log_coefficients(n)
        if feng != part:
            return False, f"coefficients differ at n={n}"
        for exp in (feng, part):
            if exp.a[2] != factorial(n - 1) or exp.a[n + 1] != factorial(n):
                return False, f"edge coefficient wrong at n={n}"
    return True, "a[n,i] agree for n = 1..10"


def _log_consistency(rng: random.Random) -> tuple[bool, str]:
    checked = 0
    for n in range(1, 11):
        for _ in range(JETS_PER_ORDER):
            v = random_jet(rng, n)
            if log_jet(v) != list(quotient_jet(v.shift(), v.truncate(n - 1))):
                return False, f"log jet mismatch at order {n} for v={v.to_json()['d']}"
            checked += 1
    return True, f"{checked} jets, orders 1..10"


def _partition_infrastructure(rng: random.Random) -> tuple[bool, str]:
    for n in range(31):
        parts = enumerate_partitions(n)
        if len(parts) != count(n):
            return False, f"enumeration has {len(parts)} partitions of {n}, recurrence says {count(n)}"
        if len({p.mult for p in parts}) != len(parts):
            return False, f"duplicate partitions of {n}"
        if any(pi_of(p) != n for p in parts):
            return False, f"weighted sum invariant broken for n={n}"
    return True, f"p(n) matches enumeration for n <= 30 (p(30) = {count(30)})"


CRITERIA: list[tuple[int, str, Callable[[random.Random], tuple[bool, str]], float | None]] = [
    (1, "reciprocal rule equals recursive oracle", _reciprocal_equivalence, 5.0),
    (2, "quotient rule three-way agreement", _quotient_agreement, 5.0),
    (3, "base cases n=0 and n=1", _base_cases, None),
    (4, "identity sweeps hold", _identity_sweeps, 30.0),
    (5, "lemma and composition sum agree", _lemma_composition, None),
    (6, "harmonic-sum and partition coefficients agree", _fengqi_crosscheck, 2.0),
    (7, "ln v derivatives match quotient of v' and v", _log_consistency, None),
    (8, "partition enumeration matches pentagonal recurrence", _partition_infrastructure, None),
]


def run_criterion(number: int, seed: int = 0) -> CriterionResult:
    for num, name, check, budget in CRITERIA:
        if num == number:
            rng = random.Random(seed * 1000 + num)
            start = time.perf_counter()
            ok, detail = check(rng)
            elapsed = time.perf_counter() - start
            if ok and budget is not None and elapsed > budget:
                ok = False
                detail += f"; took {elapsed:.2f}s, budget {budget:.0f}s"
            return CriterionResult(num, name, ok, detail, elapsed, budget)
    raise KeyError(number)


def run_all(seed: int = 0) -> list[CriterionResult]:
    return [run_criterion(num, seed) for num, *_ in CRITERIA]
