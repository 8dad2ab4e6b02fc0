"""Evaluators for the self-affine function family and its companions.

Covers the tent map phi, the signed sawtooth Phi, the ternary shift psi,
the Takagi series T, the binary singular function L_a, the three-route
family evaluators F_a (exact subdivision, digit series, functional
equation), the parameter-derivative function K at a = 1/3 (four routes,
one of them exact rational), the generic contraction-series solver, and a
finite-difference probe of dF_a/da.

Every float evaluator carries an explicit truncation with a proven tail
bound; ``k_exact`` and ``okamoto_iterative`` are the exact-rational
oracles the float routes are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ContractionError, DomainError, ResourceLimitError
from .ternary import DigitSeq, digit_at, expand_rational

TERNARY_TERMS = 40  # tail <= 0.5 * 3**-40, below double-precision noise
BINARY_TERMS = 50

_S = (0, 1, -1)  # sign weight per digit
_ITERATIVE_CAP = 3**12 + 1


@dataclass(frozen=True)
class SeriesTruncation:
    """Number of retained terms plus a proven bound on the dropped tail."""

    terms: int
    tail_bound: float

    def __post_init__(self):
        if self.terms < 1:
            raise DomainError("truncation needs at least one term")
        if self.tail_bound < 0:
            raise DomainError("tail bound must be nonnegative")


def ternary_truncation(terms: int = TERNARY_TERMS) -> SeriesTruncation:
    """Truncation for sum 3^-n Phi(3^n x): |Phi| <= 1, tail <= 0.5 * 3^-N."""
    return SeriesTruncation(terms, 0.5 * 3.0 ** (-terms))

def binary_truncation(terms: int = BINARY_TERMS) -> SeriesTruncation:
    """Truncation for the Takagi series: phi <= 1/2, tail <= 2^-N."""
    return SeriesTruncation(terms, 2.0 ** (-terms))


def contraction_ratio(a: float) -> float:
    """Vertical contraction r(a) = max(a, |1 - 2a|) of the family."""
    return max(a, abs(1 - 2 * a))


def kobayashi_truncation(a: float, terms: int = TERNARY_TERMS) -> SeriesTruncation:
    """Truncation for the digit series of F_a.

    The n-th term is bounded by r(a)^(n-1) * max(a, 1-a), so the dropped
    tail is at most r^(N) * max(a, 1-a) / (1 - r) ... using the first
    omitted index n = N + 1 with product exponent n - 1 = N.
    """
    r = contraction_ratio(a)
    return SeriesTruncation(terms, r**terms * max(a, 1 - a) / (1 - r))


def kobayashi_terms_for(a: float, target: float) -> int:
    """Smallest term count whose tail bound is <= target."""
    r = contraction_ratio(a)
    n = TERNARY_TERMS
    while kobayashi_truncation(a, n).tail_bound > target:
        n += max(8, n // 4)
    return n


@dataclass(frozen=True)
class OkamotoParams:
    """Family parameter a with its derived contraction data."""

    a: float

    def __post_init__(self):
        if not 0 < self.a < 1:
            raise DomainError(f"parameter a={self.a} outside (0, 1)")

    @property
    def contraction(self) -> float:
        return contraction_ratio(self.a)

    @property
    def p(self) -> tuple[float, float, float]:
        return (self.a, 1 - 2 * self.a, self.a)

    @property
    def q(self) -> tuple[float, float, float]:
        return (0.0, self.a, 1 - self.a)


# ---------------------------------------------------------------------------
# elementary building blocks


def tent_phi(x: float) -> float:
    """Distance from x to the nearest integer; 1-periodic, range [0, 1/2]."""
    f = x - math.floor(x)
    return min(f, 1.0 - f)


def big_phi(x: float) -> float:
    """Signed sawtooth: 3x on [0,1/3], 3(1-2x) on [1/3,2/3], 3(x-1) on [2/3,1].

    Extended to all of R by period 1; range [-1, 1].
    """
    f = x - math.floor(x)
    if f <= 1 / 3:
        return 3 * f
    if f <= 2 / 3:
        return 3 * (1 - 2 * f)
    return 3 * (f - 1)


def big_phi_exact(x: Fraction) -> Fraction:
    """Exact rational value of the sawtooth at a rational point."""
    f = x - math.floor(x)
    if 3 * f <= 1:
        return 3 * f
    if 3 * f <= 2:
        return 3 * (1 - 2 * f)
    return 3 * (f - 1)


def shift_psi(x: float) -> float:
    """Ternary shift 3x mod 1, realized branchwise with first-match ties.

    At branch endpoints the leftmost matching branch wins, so
    shift_psi(1/3) = 1 and shift_psi(1) = 1.
    """
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    if x <= 1 / 3:
        return 3 * x
    if x <= 2 / 3:
        return 3 * x - 1
    return 3 * x - 2


# ---------------------------------------------------------------------------
# Takagi and the binary singular function


def takagi(x: float, trunc: SeriesTruncation | None = None) -> float:
    """Partial sum of sum_n 2^-n phi(2^n x); error <= trunc.tail_bound."""
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    trunc = trunc or binary_truncation()
    total = 0.0
    y = x
    w = 1.0
    for _ in range(trunc.terms):
        total += w * tent_phi(y)
        y = (2 * y) % 1.0
        w *= 0.5
    return total


def lebesgue_L(a: float, x: float, depth: int = 60) -> float:
    """Binary self-affine singular function via its two-branch recursion.

    Unrolls ``depth`` binary digits, tracking the accumulated affine map,
    and closes with the identity (exact for a = 1/2, where L is the
    identity).  Error <= max(a, 1-a)**depth.
    """
    if not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    shift = 0.0
    scale = 1.0
    t = x
    for _ in range(depth):
        if t <= 0.5:
            scale *= a
            t = 2 * t
        else:
            shift += scale * a
            scale *= 1 - a
            t = 2 * t - 1
        t = min(1.0, max(0.0, t))
    return shift + scale * t


# ---------------------------------------------------------------------------
# the one-parameter family F_a, three routes


@dataclass(frozen=True)
class PiecewiseLinear:
    """Level-n subdivision approximant with exact rational ordinates.

    ``ordinates[k]`` is the value at breakpoint k / 3**level.
    """

    level: int
    a: Fraction
    ordinates: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.ordinates) != 3**self.level + 1:
            raise DomainError("ordinate count must be 3**level + 1")

    def value_exact(self, x: Fraction) -> Fraction:
        """Exact interpolated value at rational x in [0, 1]."""
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise DomainError(f"{x} outside [0, 1]")
        scaled = x * 3**self.level
        k = math.floor(scaled)
        if k == 3**self.level:
            return self.ordinates[-1]
        frac = scaled - k
        return self.ordinates[k] + frac * (self.ordinates[k + 1] - self.ordinates[k])

    def __call__(self, x: float) -> float:
        return float(self.value_exact(Fraction(x).limit_denominator(3**18)))


def okamoto_iterative(
    a: Fraction, level: int, cap: int = _ITERATIVE_CAP
) -> PiecewiseLinear:
    """Exact subdivision construction f_level of the family member.

    Each refinement replaces a segment by three, placing the interior
    breakpoints at fractions a and 1-a of the segment's rise.
    """
    a = Fraction(a)
    if not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    if level < 0:
        raise DomainError("level must be >= 0")
    if 3**level + 1 > cap:
        raise ResourceLimitError(f"level {level} exceeds cap of {cap} breakpoints")
    ords: list[Fraction] = [Fraction(0), Fraction(1)]
    for _ in range(level):
        nxt: list[Fraction] = []
        for k in range(len(ords) - 1):
            lo, hi = ords[k], ords[k + 1]
            rise = hi - lo
            nxt.extend((lo, lo + a * rise, lo + (1 - a) * rise))
        nxt.append(ords[-1])
        ords = nxt
    return PiecewiseLinear(level, a, tuple(ords))


def _float_digits(x: float, n: int) -> list[int]:
    """First n ternary digits of a float in [0, 1]; x = 1.0 yields all 2's."""
    digits = []
    y = x
    for _ in range(n):
        y3 = 3 * y
        d = min(2, math.floor(y3))
        digits.append(d)
        y = y3 - d
    return digits


def okamoto_series(
    a: float,
    x: "float | DigitSeq",
    trunc: SeriesTruncation | None = None,
) -> float:
    """Digit-product series for F_a(x); error <= trunc.tail_bound."""
    if not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    trunc = trunc or kobayashi_truncation(a)
    p = (a, 1 - 2 * a, a)
    q = (0.0, a, 1 - a)
    if isinstance(x, DigitSeq):
        digits = [digit_at(x, k) for k in range(1, trunc.terms + 1)]
    else:
        if not 0 <= x <= 1:
            raise DomainError(f"{x} outside [0, 1]")
        digits = _float_digits(float(x), trunc.terms)
    total = 0.0
    prod = 1.0
    for d in digits:
        total += prod * q[d]
        prod *= p[d]
    return total


def okamoto_fe(a: float, x: float, depth: int = TERNARY_TERMS) -> float:
    """F_a via its three-branch functional equation, ``depth`` levels deep.

    Branch ties go to the leftmost branch; the base case closes with the
    level-0 interpolant f_0(x) = x pushed through the accumulated affine
    map, so the error is <= max(a, 1-a)**depth.
    """
    if not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    shift = 0.0
    scale = 1.0
    t = x
    for _ in range(depth):
        if t <= 1 / 3:
            scale *= a
            t = 3 * t
        elif t <= 2 / 3:
            shift += scale * a
            scale *= 1 - 2 * a
            t = 3 * t - 1
        else:
            shift += scale * (1 - a)
            scale *= a
            t = 3 * t - 2
        t = min(1.0, max(0.0, t))
    return shift + scale * t


# ---------------------------------------------------------------------------
# the parameter derivative K at a = 1/3, four routes


def k_series_phi(x: float, trunc: SeriesTruncation | None = None) -> float:
    """K via the sawtooth series sum_n 3^-n Phi(3^n x)."""
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    trunc = trunc or ternary_truncation()
    total = 0.0
    y = x - math.floor(x) if x != 1.0 else 1.0
    w = 1.0
    for _ in range(trunc.terms):
        total += w * big_phi(y)
        y = (3 * y) % 1.0
        w /= 3.0
    return total


def k_series_digits(x: DigitSeq, trunc: SeriesTruncation | None = None) -> float:
    """K via the digit series with weights s(d) + (n - 3*I1(1,n)) * d.

    s(0)=0, s(1)=1, s(2)=-1; I1(1,n) counts 1's among the first n digits.
    """
    trunc = trunc or ternary_truncation()
    total = 0.0
    ones = 0
    w = 1.0
    for n in range(trunc.terms):
        d = digit_at(x, n + 1)
        total += w * (_S[d] + (n - 3 * ones) * d)
        if d == 1:
            ones += 1
        w /= 3.0
    return total


def k_exact(x: Fraction) -> Fraction:
    """Exact rational K at a ternary rational k / 3**m.

    The sawtooth series terminates after m terms there, so the value is a
    finite exact sum; this is the oracle for every float route.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    q = x.denominator
    m = 0
    while q % 3 == 0:
        q //= 3
        m += 1
    if q != 1:
        raise DomainError(f"{x} is not a ternary rational")
    total = Fraction(0)
    y = x
    for n in range(m):
        total += Fraction(1, 3**n) * big_phi_exact(y)
        y = 3 * y
    return total


def k_fe(x: float, depth: int = TERNARY_TERMS) -> float:
    """K via its three-branch functional equation, recursing ``depth`` levels.

    Base case 0; since |K| <= 3/2 the error is <= 1.5 * 3**-depth.
    """
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    if depth == 0:
        return 0.0
    if x <= 1 / 3:
        return k_fe(min(1.0, 3 * x), depth - 1) / 3 + 3 * x
    if x <= 2 / 3:
        return k_fe(min(1.0, 3 * x - 1), depth - 1) / 3 + 3 * (1 - 2 * x)
    return k_fe(min(1.0, max(0.0, 3 * x - 2)), depth - 1) / 3 + 3 * (x - 1)


def yamaguti_hata_solve(
    t: float,
    g: Callable[[float], float],
    psi: Callable[[float], float],
    x: float,
    trunc: SeriesTruncation,
) -> float:
    """Unique bounded solution of F(x) - t*F(psi(x)) = g(x), as a series.

    Evaluates sum_{n<N} t**n g(psi^(n)(x)); with a bound M on |g| the
    dropped tail is at most M * |t|**N / (1 - |t|).
    """
    if abs(t) >= 1:
        raise ContractionError(f"|t|={abs(t)} >= 1: series does not converge")
    total = 0.0
    y = x
    w = 1.0
    for _ in range(trunc.terms):
        total += w * g(y)
        y = psi(y)
        w *= t
    return total


def dFa_da_fd(
    a: float,
    x: float,
    h: float = 1e-5,
    terms: int | None = None,
    richardson: bool = False,
) -> float:
    """Central finite difference of F_a(x) in the parameter a.

    At a = 1/3 this converges to K(x) as h -> 0.  ``richardson`` applies
    one step of extrapolation, upgrading the O(h^2) difference to O(h^4).
    """
    if not (0 < a - h and a + h < 1):
        raise DomainError("a +- h must stay inside (0, 1)")

    def central(step: float) -> float:
        n = terms or max(
            kobayashi_terms_for(a + step, 1e-14), kobayashi_terms_for(a - step, 1e-14)
        )
        hi = okamoto_series(a + step, x, kobayashi_truncation(a + step, n))
        lo = okamoto_series(a - step, x, kobayashi_truncation(a - step, n))
        return (hi - lo) / (2 * step)

    if richardson:
        return (4 * central(h / 2) - central(h)) / 3
    return central(h)


def hata_yamaguti_residual(grid: int = 100, h: float = 1e-6, depth: int = 60) -> float:
    """Max over a grid of |central dL_a/da at a=1/2 minus 2*T(x)|."""
    worst = 0.0
    trunc = binary_truncation()
    for i in range(grid + 1):
        x = i / grid
        fd = (lebesgue_L(0.5 + h, x, depth) - lebesgue_L(0.5 - h, x, depth)) / (2 * h)
        worst = max(worst, abs(fd - 2 * takagi(x, trunc)))
    return worst


def sample_grid(n: int) -> Sequence[float]:
    """n evenly spaced points covering [0, 1] inclusive."""
    if n < 2:
        raise DomainError("need at least 2 samples")
    return [i / (n - 1) for i in range(n)]
