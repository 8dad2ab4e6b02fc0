"""Dimension formulas and desk-scale experiments.

Closed-form and box-counted graph dimension of the family members, the
entropy formula for digit-frequency sets, the mean-zero walk Monte Carlo
behind the measure-zero result, and the cubic-root solve for the
differentiability trichotomy boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, RangeError
from .functions import okamoto_iterative

LN3 = math.log(3.0)


def box_dimension_formula(a: float) -> float:
    """Closed-form box dimension of the graph: 1 for a <= 1/2, else 1 + log3(4a-1)."""
    if not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    if a <= 0.5:
        return 1.0
    return 1.0 + math.log(4 * a - 1) / LN3


@dataclass(frozen=True)
class BoxCountResult:
    """Box counts per grid scale with the least-squares dimension fit."""

    scales: tuple[float, ...]
    counts: tuple[int, ...]
    fitted_dimension: float
    residual: float
    fit_levels: tuple[int, ...]


def box_dimension_estimate(
    a: Fraction,
    max_level: int,
    fit_min_level: int = 3,
    cap_level: int = 10,
) -> BoxCountResult:
    """Count 3^-j boxes meeting the exact level-max_level graph, j = 1..max_level.

    Columns align with the subdivision breakpoints, so the column extremes
    of the piecewise-linear graph are exact ordinate min/max; a box is
    counted whenever the closed box meets the graph.  The dimension is the
    slope of log N against log 3^j over levels >= fit_min_level (the
    coarsest scales are excluded as boundary-dominated).
    """
    if max_level < 2:
        raise DomainError("need max_level >= 2")
    if max_level > cap_level:
        raise RangeError(f"max_level {max_level} exceeds cap {cap_level}")
    pl = okamoto_iterative(Fraction(a), max_level, cap=3**cap_level + 1)
    ords = pl.ordinates
    counts = []
    for j in range(1, max_level + 1):
        step = 3 ** (max_level - j)
        scale = 3**j
        total = 0
        for i in range(scale):
            col = ords[i * step : (i + 1) * step + 1]
            lo = min(col) * scale
            hi = max(col) * scale
            total += math.floor(hi) - math.floor(lo) + 1
        counts.append(total)
    fit_levels = tuple(j for j in range(max(1, fit_min_level), max_level + 1))
    xs = np.array([j * LN3 for j in fit_levels])
    ys = np.array([math.log(counts[j - 1]) for j in fit_levels])
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = float(np.sqrt(np.mean((ys - (slope * xs + intercept)) ** 2)))
    return BoxCountResult(
        scales=tuple(3.0**-j for j in range(1, max_level + 1)),
        counts=tuple(counts),
        fitted_dimension=float(slope),
        residual=resid,
        fit_levels=fit_levels,
    )


@dataclass(frozen=True)
class FrequencyTriple:
    """Prescribed digit frequencies (p0, p1, p2), summing to 1."""

    p0: float
    p1: float
    p2: float

    def __post_init__(self):
        for p in (self.p0, self.p1, self.p2):
            if not 0 <= p <= 1:
                raise DomainError(f"frequency {p} outside [0, 1]")
        if abs(self.p0 + self.p1 + self.p2 - 1) > 1e-12:
            raise DomainError("frequencies must sum to 1")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p0, self.p1, self.p2)


def symmetric_triple(alpha: float) -> FrequencyTriple:
    """((1-alpha)/2, alpha, (1-alpha)/2)."""
    return FrequencyTriple((1 - alpha) / 2, alpha, (1 - alpha) / 2)


def hausdorff_frequency_dim(p: FrequencyTriple) -> float:
    """Entropy dimension (-sum p_i ln p_i) / ln 3 of a digit-frequency set.

    Uses the convention 0 * ln 0 = 0; equals 1 exactly at (1/3, 1/3, 1/3).
    """
    ent = 0.0
    for pi in p.as_tuple():
        if pi > 0:
            ent -= pi * math.log(pi)
    return ent / LN3


@dataclass(frozen=True)
class WalkExperiment:
    """Monte Carlo summary of the ternary-digit walk W(n) = n - 3*I1(n)."""

    sample_count: int
    horizon: int
    seed: int
    crossing_fraction: float
    mean_step_estimate: float


def _path_rng(seed: int, index: int) -> np.random.Generator:
    # counter-based substream per path: order-independent and reproducible
    return np.random.Generator(np.random.Philox(key=(seed << 64) + index))


def walk_monte_carlo(samples: int, horizon: int, seed: int) -> WalkExperiment:
    """Simulate walks with steps +1 (prob 2/3) and -2 (prob 1/3).

    A path counts as crossing when W touches or passes 0, i.e. when
    min W <= 0 <= max W over the horizon (W never starts at 0, so this
    captures a genuine change of sign or a touch of 0).
    """
    if samples < 1 or horizon < 1:
        raise DomainError("need samples >= 1 and horizon >= 1")
    crossed = 0
    step_total = 0.0
    for i in range(samples):
        rng = _path_rng(seed, i)
        u = rng.random(horizon)
        steps = np.where(u < 1.0 / 3.0, -2, 1)
        walk = np.cumsum(steps)
        if walk.min() <= 0 <= walk.max():
            crossed += 1
        step_total += float(steps.sum())
    return WalkExperiment(
        sample_count=samples,
        horizon=horizon,
        seed=seed,
        crossing_fraction=crossed / samples,
        mean_step_estimate=step_total / (samples * horizon),
    )


def crossing_probability_dp(horizon: int) -> float:
    """Exact probability that a walk touches or passes 0 within the horizon.

    Dynamic program over walk states, kept separate from the Monte Carlo
    path: survival means staying strictly positive (after an up first
    step) or strictly negative (after a down first step) for the whole
    horizon; the crossing probability is 1 minus both survivals.
    """
    if horizon < 1:
        raise DomainError("horizon must be >= 1")
    up, down = 2.0 / 3.0, 1.0 / 3.0
    # survive positive: state = W value >= 1
    pos = np.zeros(horizon + 3)
    pos[1] = up
    for _ in range(horizon - 1):
        nxt = np.zeros_like(pos)
        nxt[2:] += pos[1:-1] * up  # +1 step
        nxt[1:-2] += pos[3:] * down  # -2 step; landing <= 0 absorbs
        pos = nxt
    # survive negative: state = -W value >= 1 (W <= -1); +1 step moves toward 0
    neg = np.zeros(horizon * 2 + 4)
    neg[2] = down
    for _ in range(horizon - 1):
        nxt = np.zeros_like(neg)
        nxt[1:-1] += neg[2:] * up  # W +1: magnitude -1; reaching 0 absorbs
        nxt[3:] += neg[1:-2] * down  # W -2: magnitude +2
        nxt[0] = 0.0
        neg = nxt
    return 1.0 - float(pos.sum() + neg.sum())


def a0_root(residual_tol: float = 1e-13, max_iter: int = 200) -> float:
    """Root of 54 a^3 - 27 a^2 = 1 in (1/2, 1), by bisection."""

    def f(a: float) -> float:
        return 54 * a**3 - 27 * a**2 - 1

    lo, hi = 0.5, 1.0
    if not (f(lo) < 0 < f(hi)):
        raise DomainError("bracket does not straddle the root")
    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        val = f(mid)
        if abs(val) < residual_tol:
            break
        if val < 0:
            lo = mid
        else:
            hi = mid
    return mid


def frequency_set_members(
    p: FrequencyTriple, count: int, length: int, seed: int
) -> list[tuple[int, ...]]:
    """Digit-string samples whose empirical frequencies approach p."""
    if count < 1 or length < 1:
        raise DomainError("need count >= 1 and length >= 1")
    members = []
    c0 = p.p0
    c1 = p.p0 + p.p1
    for i in range(count):
        rng = _path_rng(seed, i)
        u = rng.random(length)
        digits = np.where(u < c0, 0, np.where(u < c1, 1, 2))
        members.append(tuple(int(d) for d in digits))
    return members
