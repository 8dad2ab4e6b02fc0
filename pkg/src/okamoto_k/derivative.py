"""Classification of K's infinite derivatives and secant-slope machinery.

The classifier decides, from the eventually periodic ternary expansion of
x, whether the difference quotients of K tend to +inf, -inf, or neither:
the walk W(n) = n - 3*I1(n) tends to +-inf exactly when its per-period
drift has that sign.  The secant and decomposition tools expose the
quantitative content behind that criterion as runtime-checkable reports.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError
from .functions import big_phi_exact, k_exact
from .ternary import (
    DigitSeq,
    count_digit,
    digit_at,
    expand_rational,
    walk_value,
)


class DerivativeClass(enum.Enum):
    PLUS_INFINITY = "PLUS_INFINITY"
    MINUS_INFINITY = "MINUS_INFINITY"
    NO_INFINITE_DERIVATIVE = "NO_INFINITE_DERIVATIVE"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class WalkTrace:
    """The walk W(1..horizon) for one expansion, with its per-period drift."""

    x: DigitSeq
    horizon: int
    values: tuple[int, ...]
    period_drift: int

    def __post_init__(self):
        prev = 0
        for v in self.values:
            if v - prev not in (1, -2):
                raise DomainError("walk steps must be +1 or -2")
            prev = v


def period_drift(x: DigitSeq) -> int:
    """Change of W over one period: L - 3 * (ones in the period).

    The implicit all-0 tail of an empty period drifts +1 per step.
    """
    if not x.period:
        return 1
    ones = sum(1 for d in x.period if d == 1)
    return len(x.period) - 3 * ones


def walk_trace(x: DigitSeq, horizon: int) -> WalkTrace:
    if horizon < 1:
        raise RangeError("horizon must be >= 1")
    values = []
    w = 0
    for k in range(1, horizon + 1):
        w += 1 if digit_at(x, k) != 1 else -2
        values.append(w)
    return WalkTrace(x, horizon, tuple(values), period_drift(x))


def classify_point(x: DigitSeq) -> DerivativeClass:
    """Infinite-derivative verdict for an eventually periodic expansion.

    W(n) tends to +-inf iff the drift over one period is nonzero with
    that sign; zero drift keeps W bounded, so no infinite derivative
    (and, by nowhere-differentiability, no derivative at all).
    """
    drift = period_drift(x)
    if drift > 0:
        return DerivativeClass.PLUS_INFINITY
    if drift < 0:
        return DerivativeClass.MINUS_INFINITY
    return DerivativeClass.NO_INFINITE_DERIVATIVE


def classify_by_frequency(p1: "float | Fraction") -> DerivativeClass:
    """Verdict from the limiting frequency of the digit 1, when it exists.

    Below 1/3 the walk drifts up, above 1/3 down; exactly 1/3 is the
    boundary case the frequency alone cannot decide.
    """
    if not 0 <= p1 <= 1:
        raise DomainError(f"frequency {p1} outside [0, 1]")
    third = Fraction(1, 3)
    if p1 < third:
        return DerivativeClass.PLUS_INFINITY
    if p1 > third:
        return DerivativeClass.MINUS_INFINITY
    return DerivativeClass.INDETERMINATE


def secant_slope(x: DigitSeq, n: int) -> Fraction:
    """Exact slope of K over the level-n ternary interval containing x.

    With u = floor(3^n x)/3^n and v = u + 3^-n, returns
    (K(v) - K(u)) / (v - u), computed from the exact rational K.
    """
    if n < 1:
        raise RangeError("n must be >= 1")
    if x.value == 1:
        raise DomainError("x = 1 has no level-n interval to the right")
    scale = 3**n
    u = Fraction(math.floor(x.value * scale), scale)
    v = u + Fraction(1, scale)
    return (k_exact(v) - k_exact(u)) * scale


@dataclass(frozen=True)
class DivergenceWitness:
    """Partial secant slopes certifying non-Cauchy difference quotients."""

    x: DigitSeq
    partial_sums: tuple[Fraction, ...]
    differences: tuple[Fraction, ...]
    all_steps_valid: bool


def billingsley_divergence_witness(x: DigitSeq, n: int) -> DivergenceWitness:
    """Secant slopes at levels 1..n and their consecutive differences.

    Each difference must be 3 or -6 (the two slopes of the sawtooth), so
    the slope sequence cannot converge to a finite limit.
    """
    if n < 2:
        raise RangeError("need horizon >= 2")
    sums = tuple(secant_slope(x, k) for k in range(1, n + 1))
    diffs = tuple(b - a for a, b in zip(sums, sums[1:]))
    first_ok = sums[0] in (3, -6)
    valid = first_ok and all(d in (3, -6) for d in diffs)
    return DivergenceWitness(x, sums, diffs, valid)


# ---------------------------------------------------------------------------
# the four-part decomposition of a difference quotient of K


def _ternary_order(x: Fraction) -> int:
    """m such that 3**m * x is an integer; error if no such m exists."""
    q = x.denominator
    m = 0
    while q % 3 == 0:
        q //= 3
        m += 1
    if q != 1:
        raise DomainError(f"{x} is not a ternary rational")
    return m


def _f_weight_loose(x: DigitSeq, a: int, b: int) -> int:
    """f(a, b), with an empty range counting as 0."""
    if a > b:
        return 0
    return 3 * (b - a + 1) - 9 * count_digit(x, 1, a, b)


@dataclass(frozen=True)
class SigmaDecomposition:
    """Exact split of (K(x+h) - K(x)) / h into the four proof sums.

    ``sigma1`` collects the levels where x and x+h share digits,
    ``sigma2`` is the single crossing level, ``sigma3`` the forced-carry
    levels, and ``sigma4`` the fine-scale tail.  ``sandwich_low/high``
    bound the quotient in terms of the digit weight f(1, .) of x, with
    constants depending on the case.
    """

    x: Fraction
    h: Fraction
    p: int
    k0: int
    case_tag: str
    sigma1: Fraction
    sigma2: Fraction
    sigma3: Fraction
    sigma4: Fraction
    quotient: Fraction
    sandwich_low: Fraction
    sandwich_high: Fraction


def sigma_decompose(x: Fraction, h: Fraction) -> SigmaDecomposition:
    """Decompose the difference quotient of K at exact ternary rationals.

    Requires 0 <= x < x+h < 1 with both endpoints ternary rationals, so
    all sums are finite and exact.  Asserts the proof's bounds: sigma2 in
    [-6, 3], |sigma4| <= 9, and the case-appropriate sandwich around the
    digit weight of x.
    """
    x = Fraction(x)
    h = Fraction(h)
    if h <= 0:
        raise DomainError("h must be positive")
    if not (0 <= x and x + h < 1):
        raise DomainError("need 0 <= x < x + h < 1")
    order = max(_ternary_order(x), _ternary_order(x + h))

    p = 1
    while Fraction(1, 3**p) > h:
        p += 1

    dx = expand_rational(x)
    dy = expand_rational(x + h)
    k0 = 0
    while k0 < p and digit_at(dx, k0 + 1) == digit_at(dy, k0 + 1):
        k0 += 1
    if k0 > p - 1:
        raise DomainError("shared prefix exceeds p - 1; inconsistent inputs")

    def d_term(n: int) -> Fraction:
        num = big_phi_exact(3**n * (x + h)) - big_phi_exact(3**n * x)
        return num / (3**n * h)

    sigma1 = sum((d_term(n) for n in range(k0)), Fraction(0))
    sigma2 = d_term(k0)
    sigma3 = sum((d_term(n) for n in range(k0 + 1, p - 1)), Fraction(0))
    tail_start = max(p - 1, k0 + 1)
    sigma4 = sum((d_term(n) for n in range(tail_start, order)), Fraction(0))

    quotient = (k_exact(x + h) - k_exact(x)) / h
    assert sigma1 + sigma2 + sigma3 + sigma4 == quotient

    if k0 <= p - 3:
        case_tag = "k0<=p-3"
        ref = _f_weight_loose(dx, 1, p - 1)
        low, high = ref - 27, ref + 18
    elif k0 == p - 2:
        case_tag = "k0==p-2"
        ref = _f_weight_loose(dx, 1, p - 2)
        low, high = ref - 15, ref + 12
    else:
        case_tag = "k0==p-1"
        ref = _f_weight_loose(dx, 1, p - 1)
        low, high = ref - 15, ref + 12

    assert -6 <= sigma2 <= 3
    assert abs(sigma4) <= 9
    assert low <= quotient <= high

    return SigmaDecomposition(
        x=x,
        h=h,
        p=p,
        k0=k0,
        case_tag=case_tag,
        sigma1=sigma1,
        sigma2=sigma2,
        sigma3=sigma3,
        sigma4=sigma4,
        quotient=quotient,
        sandwich_low=Fraction(low),
        sandwich_high=Fraction(high),
    )


def random_ternary_pair(rng, max_order: int = 10) -> tuple[Fraction, Fraction]:
    """Random exact (x, h) with 0 <= x < x + h < 1, both ternary rationals."""
    m = int(rng.integers(2, max_order + 1))
    denom = 3**m
    i = int(rng.integers(0, denom - 1))
    j = int(rng.integers(1, denom - i))
    return Fraction(i, denom), Fraction(j, denom)


def sigma_fuzz(trials: int, seed: int, max_order: int = 10) -> dict:
    """Run the decomposition on random exact pairs; report bound violations."""
    import numpy as np

    rng = np.random.Generator(np.random.Philox(key=seed))
    violations = 0
    cases = {"k0<=p-3": 0, "k0==p-2": 0, "k0==p-1": 0}
    for _ in range(trials):
        xv, hv = random_ternary_pair(rng, max_order)
        try:
            dec = sigma_decompose(xv, hv)
        except AssertionError:
            violations += 1
            continue
        cases[dec.case_tag] += 1
    return {
        "trials": trials,
        "seed": seed,
        "max_order": max_order,
        "violations": violations,
        "cases": cases,
    }


def classification_report(x: Fraction, walk_prefix: int = 20) -> dict:
    """JSON-ready classification of a rational point."""
    seq = expand_rational(x)
    trace = walk_trace(seq, walk_prefix)
    return {
        "x": f"{x.numerator}/{x.denominator}",
        "expansion": seq.to_json(),
        "drift": period_drift(seq),
        "verdict": classify_point(seq).value,
        "walk_prefix": list(trace.values),
    }
