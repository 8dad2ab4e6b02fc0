"""Exact base-3 digit machinery.

Digit sequences are eventually periodic ternary expansions under the
canonical convention: when a number has two expansions we keep the one
ending in all 0's, except x = 1 which keeps the all-2's tail.  Digit
indices are 1-based throughout, so ``digit_at(x, 1)`` is the first digit
after the radix point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError

Rational = Fraction


def _reconstruct(preperiod: tuple[int, ...], period: tuple[int, ...]) -> Fraction:
    acc = Fraction(0)
    for i, d in enumerate(preperiod, start=1):
        acc += Fraction(d, 3**i)
    if period:
        block = 0
        for d in period:
            block = 3 * block + d
        length = len(period)
        acc += Fraction(block, (3**length - 1) * 3 ** len(preperiod))
    return acc


@dataclass(frozen=True)
class DigitSeq:
    """Eventually periodic ternary expansion of a rational in [0, 1].

    ``preperiod + period`` are the digits; the period repeats forever.
    Terminating expansions carry the explicit period ``(0,)`` so every
    digit position is defined.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    value: Fraction

    def __post_init__(self):
        for d in self.preperiod + self.period:
            if d not in (0, 1, 2):
                raise DomainError(f"digit {d} outside {{0,1,2}}")
        if not self.period and self.value != 0:
            raise DomainError("empty period is only allowed for x = 0")
        if _reconstruct(self.preperiod, self.period) != self.value:
            raise DomainError("digits do not reconstruct the stored value")

    def digit(self, k: int) -> int:
        return digit_at(self, k)

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}


@dataclass(frozen=True)
class DigitStats:
    """Occurrence counts of each digit over positions 1..n."""

    n: int
    counts: tuple[int, int, int]

    def __post_init__(self):
        if sum(self.counts) != self.n:
            raise DomainError("digit counts must sum to n")


def expand_rational(x: Fraction | int | str) -> DigitSeq:
    """Canonical eventually periodic ternary expansion of x in [0, 1].

    Terminating values end in the explicit period (0,); x = 1 is stored
    with the all-2's period.  The period is minimal and the preperiod has
    no removable suffix.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    if x == 1:
        return DigitSeq((), (2,), x)
    digits: list[int] = []
    seen: dict[Fraction, int] = {}
    state = x
    while state not in seen:
        seen[state] = len(digits)
        tripled = 3 * state
        d = int(tripled)  # floor; state < 1 keeps d in {0,1,2}
        digits.append(d)
        state = tripled - d
    start = seen[state]
    return DigitSeq(tuple(digits[:start]), tuple(digits[start:]), x)


def digit_at(x: DigitSeq, k: int) -> int:
    """Digit at 1-based position k of the canonical expansion."""
    if k < 1:
        raise RangeError("digit positions are 1-based")
    if k <= len(x.preperiod):
        return x.preperiod[k - 1]
    if not x.period:
        return 0
    return x.period[(k - len(x.preperiod) - 1) % len(x.period)]


def _prefix_count(x: DigitSeq, i: int, n: int) -> int:
    """Number of positions j <= n with digit i, using period cycle counts."""
    if n <= 0:
        return 0
    total = 0
    npre = len(x.preperiod)
    head = min(n, npre)
    total += sum(1 for d in x.preperiod[:head] if d == i)
    rest = n - npre
    if rest <= 0 or not x.period:
        return total
    length = len(x.period)
    per_cycle = sum(1 for d in x.period if d == i)
    cycles, partial = divmod(rest, length)
    total += cycles * per_cycle
    total += sum(1 for d in x.period[:partial] if d == i)
    return total


def count_digit(x: DigitSeq, i: int, a: int, b: int) -> int:
    """Exact count of positions j in [a, b] with digit i."""
    if i not in (0, 1, 2):
        raise DomainError(f"digit {i} outside {{0,1,2}}")
    if a < 1:
        raise RangeError("positions are 1-based")
    if a > b:
        raise RangeError(f"empty range: a={a} > b={b}")
    return _prefix_count(x, i, b) - _prefix_count(x, i, a - 1)


def digit_stats(x: DigitSeq, n: int) -> DigitStats:
    counts = tuple(_prefix_count(x, i, n) for i in (0, 1, 2))
    return DigitStats(n, counts)  # type: ignore[arg-type]


def walk_value(x: DigitSeq, n: int) -> int:
    """W(n) = n - 3 * (number of 1's among the first n digits)."""
    if n < 1:
        raise RangeError("n must be >= 1")
    return n - 3 * _prefix_count(x, 1, n)


def f_weight(x: DigitSeq, a: int, b: int) -> int:
    """3*I0(a,b) - 6*I1(a,b) + 3*I2(a,b)."""
    if a > b:
        raise RangeError(f"empty range: a={a} > b={b}")
    ones = count_digit(x, 1, a, b)
    return 3 * (b - a + 1) - 9 * ones


def digit_frequency(x: DigitSeq) -> tuple[Fraction, Fraction, Fraction]:
    """Limit frequencies (p0, p1, p2) of the digits, exact from the period."""
    if not x.period:
        return (Fraction(1), Fraction(0), Fraction(0))
    length = len(x.period)
    return tuple(
        Fraction(sum(1 for d in x.period if d == i), length) for i in (0, 1, 2)
    )  # type: ignore[return-value]
