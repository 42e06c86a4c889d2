"""Euler's constant and the central-binomial generating function.

``genfun_f(t) = (1 - 1/binom(2t, t)) / t^2`` has the Taylor series
``sum (-1)^n I_n/n! t^n``, simple poles at the negative integers and
integrates to I_{-1} over the half-line.  The other routines compute gamma
by several independent routes: a double integral over the binomial kernel,
Ser's product, a triangle integral, and the harmonic limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .kernel import (
    DEFAULT_DIGITS,
    DomainError,
    QuadratureConfig,
    bernoulli_mpf,
    gamma_signed,
    ln_gamma,
    quad_de,
    workdps,
)
from .zeta import hurwitz_zeta, li, zeta_int


@dataclass(frozen=True)
class GenFunPoint:
    t: object
    value: object


def _inv_central_binomial(t):
    # Gamma(t+1)^2 / Gamma(2t+1) at the current working precision
    if t > -mpf(1) / 2:
        return mpmath.exp(2 * ln_gamma(t + 1, mp.dps - 10) - ln_gamma(2 * t + 1, mp.dps - 10))
    if t + 1 == mpmath.floor(t + 1):
        raise DomainError(f"genfun_f has a pole at t = {t}")
    if 2 * t + 1 == mpmath.floor(2 * t + 1):
        return mpf(0)  # 1/Gamma vanishes at the non-positive integers
    g = gamma_signed(t + 1, mp.dps - 10)
    return g * g / gamma_signed(2 * t + 1, mp.dps - 10)


def genfun_f(t, prec: int = DEFAULT_DIGITS):
    """``(1 - 1/binom(2t, t)) / t^2`` with its removable singularity at 0.

    Near zero the three-term Taylor polynomial ``zeta(2) - 2 zeta(3) t +
    9/4 zeta(4) t^2`` (coefficients (-1)^n I_n / n!) is used for ``|t| < 10^(-(prec+5)/3)``; elsewhere the
    Gamma ratio is evaluated with ``2 log10(1/|t|)`` extra digits to absorb
    the cancellation in ``1 - 1/binom``.  Positive integers use the exact
    central binomial coefficient.
    """
    with workdps(prec):
        t = mpf(t)
        if t < 0 and t == mpmath.floor(t):
            raise DomainError(f"genfun_f has a pole at t = {t}")
        if t > 0 and t == mpmath.floor(t) and t < 10 ** 4:
            n = int(t)
            exact = (1 - Fraction(1, math.comb(2 * n, n))) / (n * n)
            return mpf(exact.numerator) / exact.denominator
        tau = mpf(10) ** (-mpf(prec + 5) / 3)
        if abs(t) < tau:
            return (zeta_int(2, prec) - 2 * zeta_int(3, prec) * t
                    + mpf(9) / 4 * zeta_int(4, prec) * t * t)
        extra = 0 if abs(t) >= 1 else int(math.ceil(-2 * float(mpmath.log10(abs(t)))))
        with mp.workdps(mp.dps + extra):
            r = _inv_central_binomial(t)
            value = (1 - r) / (t * t)
        return +value


def genfun_series_check(t, N: int, prec: int = DEFAULT_DIGITS):
    """Partial Taylor sum to order ``N`` (from the exact I_n reductions)
    alongside ``genfun_f(t)``."""
    from .symbolic import i_n_reduce

    with workdps(prec):
        t = mpf(t)
        if not 0 < abs(t) <= mpf(1) / 2:
            raise DomainError("genfun_series_check needs 0 < |t| <= 1/2")
        partial = mpf(0)
        tn = mpf(1)
        for n in range(N + 1):
            partial += (-1) ** n * i_n_reduce(n).evaluate(prec) / math.factorial(n) * tn
            tn *= t
        return partial, genfun_f(t, prec)


def genfun_bbg(x, y, prec: int = DEFAULT_DIGITS):
    """Two evaluations of ``1 - Gamma(1-x) Gamma(1-y) / Gamma(1-x-y)``:
    directly, and as ``1 - exp(sum_{n>=2} (x^n + y^n - (x+y)^n) zeta(n)/n)``
    truncated once the geometric tail bound drops below the target."""
    with workdps(prec):
        x, y = mpf(x), mpf(y)
        r = max(abs(x), abs(y), abs(x + y))
        if r >= 1:
            raise DomainError("genfun_bbg needs |x|, |y|, |x+y| < 1")
        p = mp.dps - 10
        lhs = 1 - mpmath.exp(ln_gamma(1 - x, p) + ln_gamma(1 - y, p) - ln_gamma(1 - x - y, p))
        if x == 0 or y == 0:
            return mpf(0), mpf(0)   # the Gamma ratio is exactly 1
        eps = mpf(10) ** (-mp.dps)
        s = x + y
        total = mpf(0)
        xn, yn, sn = x * x, y * y, s * s
        n = 2
        while True:
            total += (xn + yn - sn) * zeta_int(n, p) / n
            # |x^k + y^k - s^k| zeta(k)/k <= 3 zeta(2) r^k / (n+1) for k > n
            if 3 * zeta_int(2, p) * r ** (n + 1) / ((n + 1) * (1 - r)) < eps:
                break
            xn, yn, sn = xn * x, yn * y, sn * s
            n += 1
        return lhs, 1 - mpmath.exp(total)


# ---------------------------------------------------------------------------
# Euler's constant


def gamma_harmonic_limit(prec: int = DEFAULT_DIGITS):
    """``H_N - ln N`` with the Euler-Maclaurin correction
    ``-1/(2N) + sum B_2j / (2j N^2j)``, N chosen from the precision."""
    with workdps(prec):
        eps = mpf(10) ** (-mp.dps)
        N = max(20, int(mp.dps))
        h = mpmath.fsum(mpf(1) / i for i in range(1, N + 1))
        value = h - mpmath.log(N) - mpf(1) / (2 * N)
        inv_n2 = mpf(1) / (N * N)
        power = inv_n2
        for j, b in enumerate(bernoulli_mpf(int(mp.dps)), start=1):
            term = b / (2 * j) * power
            value += term
            if abs(term) < eps:
                return value
            power *= inv_n2
        raise ArithmeticError("harmonic-limit correction did not converge")


def _binomial_kernel_sum(t, K: int):
    # sum_{k>=2} 1 / (k^2 binom(t+k, k)): direct to K, then the large-k
    # expansion Gamma(k+1)/Gamma(k+t+1) ~ k^-t (1 - t(t+1)/(2k)
    # + t(t+1)(t+2)(3t+1)/(24k^2)) summed with Hurwitz zeta
    p = mp.dps - 10
    inv_binom = 1 / (t + 1)
    total = mpf(0)
    for k in range(2, K + 1):
        inv_binom *= k / (t + k)
        total += inv_binom / (k * k)
    g = mpmath.exp(ln_gamma(t + 1, p))
    tail = (hurwitz_zeta(2 + t, K + 1, p)
            - t * (t + 1) / 2 * hurwitz_zeta(3 + t, K + 1, p)
            + t * (t + 1) * (t + 2) * (3 * t + 1) / 24 * hurwitz_zeta(4 + t, K + 1, p))
    return total + g * tail


def gamma_prop2(prec: int = 20, tail_T=10):
    """gamma = int_0^inf sum_{k>=2} dt / (k^2 binom(t+k, k)).

    The inner sum is summed directly with an asymptotic Hurwitz tail.  The
    outer integral is split at ``tail_T``: [0, T] by quadrature, and
    [T, inf) through the Beta form 1/binom(t+k, k) = k int_0^1 u^(k-1)
    (1-u)^t du, which sums and integrates in closed form to

        int_0^1 (1/u - 1/(-ln(1-u))) (1-u)^T du.
    """
    if tail_T < 10:
        raise DomainError("tail_T must be >= 10")
    K = 400
    with workdps(prec):
        T = mpf(tail_T)
        head = quad_de(lambda t: _binomial_kernel_sum(t, K), 0, T, prec=prec).value

        def tail_integrand(u):
            return (1 / u + 1 / mpmath.log1p(-u)) * (1 - u) ** T

        tail = quad_de(tail_integrand, 0, 1, prec=prec).value
        return head + tail


def ser_product_partial(K: int, prec: int = DEFAULT_DIGITS):
    """Partial Ser product for e^gamma up to the factor of index ``K``.

    log = sum_{k=2}^K (1/k) sum_{j=1}^k (-1)^j C(k-1, j-1) ln j.  The inner
    alternating sums cancel about 0.3 K digits, so ``prec`` must be at least
    0.4 K + 20.
    """
    if K < 2:
        raise DomainError("K must be >= 2")
    if prec < 0.4 * K + 20:
        raise DomainError(f"K = {K} needs at least {math.ceil(0.4 * K + 20)} digits")
    with workdps(prec):
        logs = [mpf(0)] + [mpmath.log(j) for j in range(1, K + 1)]
        total = mpf(0)
        for k in range(2, K + 1):
            inner = mpf(0)
            c = 1
            for j in range(1, k + 1):
                inner += (-1) ** j * c * logs[j]
                c = c * (k - j) // j
            total += inner / k
        return mpmath.exp(total)


def li_ratio_integral(prec: int = 30):
    """int_0^1 li(x - x^2) dx / x."""
    inner = QuadratureConfig(target_abs_error=10.0 ** (3 - prec), max_levels=10)
    with workdps(prec):
        return quad_de(lambda x: li(x * (1 - x), prec, inner) / x, 0, 1, prec=prec).value


def theorem4_verify(prec: int = 30):
    """Two evaluations of I_{-1}: the log-ratio integral, and

        int_0^1 genfun_f(t) dt + int_0^1 li(x - x^2) dx / x + 1.

    Returns ``(lhs, rhs, lhs - rhs)``.
    """
    from .polytope import I_minus1_numeric

    with workdps(prec):
        lhs = I_minus1_numeric("logratio", prec)
        f_integral = quad_de(lambda t: genfun_f(t, prec), 0, 1, prec=prec).value
        rhs = f_integral + li_ratio_integral(prec) + 1
        return lhs, rhs, lhs - rhs
