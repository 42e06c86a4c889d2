"""Numeric kernel: exact Bernoulli numbers, log-gamma, generalized binomials
and double-exponential quadrature.

Every routine takes a ``prec`` argument in decimal digits and runs inside an
``mpmath`` working-precision context with a few guard digits.  Returned
values are ``mpmath.mpf`` numbers; exact rationals are
``fractions.Fraction``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath import mp, mpf

DEFAULT_DIGITS = 50
GUARD_DIGITS = 10


class DomainError(ValueError):
    """Argument outside the domain of a routine."""


class QuadratureWarning(UserWarning):
    """Quadrature stopped at ``max_levels`` before meeting its target."""


def workdps(prec: int):
    """Working-precision context for a computation targeting ``prec`` digits."""
    if prec < 15:
        raise DomainError(f"precision must be >= 15 digits, got {prec}")
    return mp.workdps(prec + GUARD_DIGITS)


# ---------------------------------------------------------------------------
# Bernoulli numbers


@lru_cache(maxsize=None)
def _bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    # B_0..B_n_max from  sum_{j=0}^{n} C(n+1, j) B_j = 0
    table = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        c = 1  # C(n+1, j)
        for j in range(n):
            acc += c * table[j]
            c = c * (n + 1 - j) // (j + 1)
        table.append(-acc / (n + 1))
    return tuple(table)


def bernoulli_even(n: int) -> Fraction:
    """Exact Bernoulli number ``B_{2n}``."""
    if n < 1:
        raise DomainError(f"bernoulli_even needs n >= 1, got {n}")
    size = 16
    while size < 2 * n:
        size *= 2
    return _bernoulli_table(size)[2 * n]


@lru_cache(maxsize=64)
def _bernoulli_mpf(count: int, dps: int) -> tuple:
    with mp.workdps(dps):
        return tuple(mpf(b.numerator) / b.denominator
                     for b in (bernoulli_even(j) for j in range(1, count + 1)))


def bernoulli_mpf(count: int) -> tuple:
    """``(B_2, B_4, ..., B_{2 count})`` as mpf at the current precision."""
    return _bernoulli_mpf(count, mp.dps)


# ---------------------------------------------------------------------------
# Gamma


def _stirling_tail(x, eps):
    """Stirling series sum_j B_2j / (2j (2j-1) x^(2j-1)); stops once a term < eps."""
    bern = bernoulli_mpf(max(8, int(mp.dps)))
    inv_x2 = 1 / (x * x)
    power = 1 / x
    total = mpf(0)
    for j, b in enumerate(bern, start=1):
        term = b / (2 * j * (2 * j - 1)) * power
        total += term
        if abs(term) < eps:
            return total
        power *= inv_x2
    raise ArithmeticError("Stirling series did not reach the requested accuracy")


def _ln_gamma_pos(x):
    eps = mpf(10) ** (-mp.dps)
    # the minimal Stirling term is ~exp(-2 pi x); shift until it is below eps
    threshold = max(10, int(0.4 * mp.dps) + 5)
    shift = mpf(1)
    while x < threshold:
        shift *= x
        x += 1
    base = (x - mpf(1) / 2) * mpmath.log(x) - x + mpmath.log(2 * mpmath.pi) / 2
    return base + _stirling_tail(x, eps) - mpmath.log(shift)


def ln_gamma(x, prec: int = DEFAULT_DIGITS):
    """``ln Gamma(x)`` for real ``x > 0``.

    Upward shift to ``x >= 0.4 D`` followed by the Stirling series; the first
    omitted Stirling term bounds the truncation error.
    """
    with workdps(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError(f"ln_gamma needs x > 0, got {x}")
        return _ln_gamma_pos(x)


def gamma_signed(x, prec: int = DEFAULT_DIGITS):
    """Real ``Gamma(x)`` for any non-pole real ``x`` (reflection below 1/2)."""
    with workdps(prec):
        x = mpf(x)
        if x > 0:
            return mpmath.exp(_ln_gamma_pos(x))
        if x == mpmath.floor(x):
            raise DomainError(f"Gamma has a pole at {x}")
        # Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return mpmath.pi / (mpmath.sinpi(x) * mpmath.exp(_ln_gamma_pos(1 - x)))


def binom_real(s, t, prec: int = DEFAULT_DIGITS):
    """Generalized binomial ``Gamma(s+1) / (Gamma(t+1) Gamma(s-t+1))``.

    Only the regime with all three Gamma arguments positive is supported.
    """
    with workdps(prec):
        s, t = mpf(s), mpf(t)
        args = (s + 1, t + 1, s - t + 1)
        if min(args) <= 0:
            raise DomainError(f"binom_real({s}, {t}) needs positive Gamma arguments")
        a, b, c = args
        return mpmath.exp(_ln_gamma_pos(a) - _ln_gamma_pos(b) - _ln_gamma_pos(c))


# ---------------------------------------------------------------------------
# Double-exponential quadrature


@dataclass(frozen=True)
class QuadratureConfig:
    target_abs_error: float = 1e-40
    max_levels: int = 12
    scheme: str = "double-exponential"

    def __post_init__(self):
        if not self.target_abs_error > 0:
            raise ValueError("target_abs_error must be positive")
        if self.max_levels < 1:
            raise ValueError("max_levels must be >= 1")
        if self.scheme != "double-exponential":
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")


@dataclass(frozen=True)
class QuadResult:
    value: mpf
    error: mpf
    levels: int
    converged: bool

    def __float__(self):
        return float(self.value)


def default_config(prec: int) -> QuadratureConfig:
    return QuadratureConfig(target_abs_error=10.0 ** (5 - prec))


@lru_cache(maxsize=256)
def _tanh_sinh_level(level: int, dps: int) -> tuple:
    """Nodes added at ``level`` (step 2^-level) for t >= 0.

    Each node is ``(delta, weight)`` with abscissae ``+-(1 - delta)`` on
    [-1, 1]; ``delta`` is kept separately so endpoint distances never cancel.
    The t = 0 node is returned with level 0 only, flagged by delta == 1.
    """
    with mp.workdps(dps):
        h = mpf(2) ** (-level)
        eps = mpf(10) ** (-dps)
        half_pi = mpmath.pi / 2
        nodes = []
        if level == 0:
            nodes.append((mpf(1), half_pi))
            start, step = 1, 1
        else:
            start, step = 1, 2
        k = start
        while True:
            t = k * h
            u = half_pi * mpmath.sinh(t)
            e2u = mpmath.exp(2 * u)
            delta = 2 / (1 + e2u)
            weight = half_pi * mpmath.cosh(t) * 4 * e2u / (1 + e2u) ** 2
            if delta < eps:
                break
            nodes.append((delta, weight))
            k += step
        return tuple(nodes)


def quad_de(f: Callable, a, b, cfg: QuadratureConfig | None = None,
            prec: int = DEFAULT_DIGITS) -> QuadResult:
    """Tanh-sinh quadrature of ``f`` over ``(a, b)``.

    ``f`` is never evaluated at the endpoints, so integrable endpoint
    singularities (logarithmic or algebraic) are fine.  The error estimate is
    the larger of the last two level sums' difference and the outermost
    weighted term, which catches mass lost where the nodes stop short of a
    strong algebraic singularity.
    """
    cfg = cfg or default_config(prec)
    with workdps(prec):
        a, b = mpf(a), mpf(b)
        if not a < b:
            raise DomainError("quad_de needs a < b")
        half = (b - a) / 2
        mid = (a + b) / 2
        dps = mp.dps
        raw = mpf(0)
        previous = None
        error = mpf("inf")
        edge, edge_delta = mpf(0), mpf(2)
        for level in range(cfg.max_levels + 1):
            for delta, w in _tanh_sinh_level(level, dps):
                if delta == 1:
                    raw += w * f(mid)
                    continue
                d = half * delta
                fa, fb = f(a + d), f(b - d)
                raw += w * (fa + fb)
                if delta < edge_delta:
                    edge, edge_delta = w * (abs(fa) + abs(fb)), delta
            estimate = raw * half * mpf(2) ** (-level)
            if previous is not None:
                # the outermost weighted term bounds the mass cut off at the ends
                error = max(abs(estimate - previous), edge * half)
                if level >= 3 and error <= cfg.target_abs_error:
                    return QuadResult(estimate, error, level, True)
            previous = estimate
        warnings.warn(
            f"quad_de: no convergence after {cfg.max_levels} levels "
            f"(estimated error {mpmath.nstr(error, 3)})",
            QuadratureWarning, stacklevel=2)
        return QuadResult(previous, error, cfg.max_levels, False)


@lru_cache(maxsize=256)
def _exp_sinh_level(level: int, dps: int, t_max: float) -> tuple:
    # nodes (x, weight) for x = exp(pi/2 sinh t), t in [-t_max, t_max]
    with mp.workdps(dps):
        h = mpf(2) ** (-level)
        half_pi = mpmath.pi / 2
        nodes = []
        n_max = int(t_max * 2 ** level)
        for k in range(-n_max, n_max + 1):
            if level > 0 and k % 2 == 0:
                continue
            t = k * h
            x = mpmath.exp(half_pi * mpmath.sinh(t))
            nodes.append((x, half_pi * mpmath.cosh(t) * x))
        return tuple(nodes)


def quad_de_halfline(f: Callable, cfg: QuadratureConfig | None = None,
                     prec: int = DEFAULT_DIGITS) -> QuadResult:
    """Exp-sinh quadrature of ``f`` over ``(0, inf)``.

    Suited to integrands with algebraic decay at infinity and at worst an
    integrable singularity at 0.
    """
    cfg = cfg or default_config(prec)
    with workdps(prec):
        dps = mp.dps
        # beyond |t| = t_max the weights fall under 10^-dps for algebraic decay
        t_max = math.asinh(2 / math.pi * dps * math.log(10)) + 0.5
        raw = mpf(0)
        previous = None
        error = mpf("inf")
        for level in range(cfg.max_levels + 1):
            for x, w in _exp_sinh_level(level, dps, t_max):
                raw += w * f(x)
            estimate = raw * mpf(2) ** (-level)
            if previous is not None:
                error = abs(estimate - previous)
                if level >= 3 and error <= cfg.target_abs_error:
                    return QuadResult(estimate, error, level, True)
            previous = estimate
        warnings.warn(
            f"quad_de_halfline: no convergence after {cfg.max_levels} levels "
            f"(estimated error {mpmath.nstr(error, 3)})",
            QuadratureWarning, stacklevel=2)
        return QuadResult(previous, error, cfg.max_levels, False)
