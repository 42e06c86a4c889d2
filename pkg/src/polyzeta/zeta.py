"""Series oracles for zeta values, polylogarithms at 1/2, the multiple
polylogarithms Li_{b,{1}_c}(z), the multiple zeta values zeta(m,{1}_k) and
the logarithmic integral.

The nested sums use the elementary-symmetric recurrence

    S_0(n) = 1,   S_c(n + 1) = S_c(n) + S_{c-1}(n) / n,

so that ``S_c(n)`` is the sum of 1/(n_1 ... n_c) over n > n_1 > ... > n_c > 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from .kernel import (
    DEFAULT_DIGITS,
    DomainError,
    QuadratureConfig,
    bernoulli_mpf,
    quad_de_halfline,
    workdps,
)


@dataclass(frozen=True)
class MZVIndex:
    """Index (m, {1}_k) of the multiple zeta value zeta(m, 1, ..., 1)."""

    leading: int
    ones: int = 0

    def __post_init__(self):
        if self.leading < 2:
            raise DomainError(f"zeta({self.leading}, ...) diverges: leading index must be >= 2")
        if self.ones < 0:
            raise DomainError("number of trailing ones must be >= 0")

    @property
    def weight(self) -> int:
        return self.leading + self.ones

    def dual(self) -> "MZVIndex":
        return MZVIndex(self.ones + 2, self.leading - 2)

    def __str__(self):
        return "zeta(" + ",".join(map(str, [self.leading] + [1] * self.ones)) + ")"


@dataclass(frozen=True)
class MPLIndex:
    """Multiple polylogarithm Li_{b,{1}_c}(z) with 0 < z < 1."""

    leading: int
    ones: int
    argument: object

    def __post_init__(self):
        if self.leading < 1 or self.ones < 0:
            raise DomainError("Li_{b,{1}_c} needs b >= 1 and c >= 0")
        if not 0 < self.argument < 1:
            raise DomainError("argument must lie in (0, 1)")


# ---------------------------------------------------------------------------
# Hurwitz and Riemann zeta


def _em_hurwitz(s, a, eps):
    # Euler-Maclaurin for zeta(s, a) with a large; None if the series stalls
    a_pow = a ** (1 - s)
    total = a_pow / (s - 1) + a_pow / (2 * a)
    inv_a2 = 1 / (a * a)
    poch = s                     # (s)_{2j-1}
    power = a_pow / (a * a)      # a^(-s-2j+1) for j = 1
    fact = mpf(2)                # (2j)!
    last = None
    for j, b in enumerate(bernoulli_mpf(max(8, int(mp.dps))), start=1):
        term = b / fact * poch * power
        total += term
        size = abs(term)
        if size < eps * abs(total):
            return total
        if last is not None and size > last:
            return None
        last = size
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        power *= inv_a2
        fact *= (2 * j + 1) * (2 * j + 2)
    return None


def hurwitz_zeta(s, a=1, prec: int = DEFAULT_DIGITS):
    """Hurwitz zeta ``sum_{i>=0} (a + i)^(-s)`` for real s > 1, a > 0."""
    with workdps(prec):
        s, a = mpf(s), mpf(a)
        if s <= 1 or a <= 0:
            raise DomainError("hurwitz_zeta needs s > 1 and a > 0")
        eps = mpf(10) ** (-mp.dps)
        shift = max(10, int(mp.dps / 2))
        while True:
            direct = mpf(0)
            x = a
            while x < shift:
                direct += x ** (-s)
                x += 1
            tail = _em_hurwitz(s, x, eps)
            if tail is not None:
                return direct + tail
            shift *= 2


@lru_cache(maxsize=1024)
def _zeta_int_cached(s: int, dps: int):
    with mp.workdps(dps):
        return hurwitz_zeta(s, 1, dps - 10)


def zeta_int(s: int, prec: int = DEFAULT_DIGITS):
    """Riemann zeta(s) at an integer s >= 2 (direct sum plus Euler-Maclaurin tail)."""
    if int(s) != s or s < 2:
        raise DomainError(f"zeta_int needs an integer s >= 2, got {s}")
    with workdps(prec):
        return +_zeta_int_cached(int(s), mp.dps)


def _psi_asym(x, eps):
    # digamma for large x: ln x - 1/(2x) - sum B_2j / (2j x^2j)
    total = mpmath.log(x) - 1 / (2 * x)
    inv_x2 = 1 / (x * x)
    power = inv_x2
    for j, b in enumerate(bernoulli_mpf(max(8, int(mp.dps))), start=1):
        term = b / (2 * j) * power
        total -= term
        if abs(term) < eps:
            return total
        power *= inv_x2
    raise ArithmeticError("digamma asymptotic series did not converge")


# ---------------------------------------------------------------------------
# Polylogarithms at 1/2 and multiple polylogarithms


def polylog_half(s: int, prec: int = DEFAULT_DIGITS):
    """Li_s(1/2) = sum 2^-r / r^s; the tail after N terms is below 2^-N."""
    if s < 1:
        raise DomainError("polylog_half needs s >= 1")
    with workdps(prec):
        n_terms = int(mp.dps * math.log2(10)) + 10
        total = mpf(0)
        p = mpf(1)
        for r in range(1, n_terms + 1):
            p /= 2
            total += p / mpf(r) ** s
        return total


def mpl_ones(b: int, c: int, z=mpf(1) / 2, prec: int = DEFAULT_DIGITS):
    """Li_{b,{1}_c}(z) = sum_N z^N S_c(N) / N^b for 0 < z <= 1/2."""
    if b < 1 or c < 0:
        raise DomainError("mpl_ones needs b >= 1 and c >= 0")
    with workdps(prec):
        z = mpf(z)
        if not 0 < z <= mpf(1) / 2:
            raise DomainError("mpl_ones only handles 0 < z <= 1/2; use mzv_ones at z = 1")
        eps = mpf(10) ** (-mp.dps)
        S = [mpf(1)] + [mpf(0)] * c      # S_j(n)
        total = mpf(0)
        zn = mpf(1)
        n = 1
        while True:
            zn *= z
            term = zn * S[c] / mpf(n) ** b
            total += term
            # S_c(n') <= (1 + ln n')^c grows slower than z^-n' shrinks
            bound = zn * (1 + math.log(n)) ** c / (1 - z)
            if n > c and bound < eps * max(abs(total), eps):
                return total
            for j in range(c, 0, -1):
                S[j] += S[j - 1] / n
            n += 1


# ---------------------------------------------------------------------------
# Multiple zeta values zeta(m, {1}_k)


def mzv_ones_partial(m: int, k: int, N: int, prec: int = DEFAULT_DIGITS):
    """Truncated nested sum over outer index n < N (all terms positive)."""
    with workdps(prec):
        S = [mpf(1)] + [mpf(0)] * k
        total = mpf(0)
        for n in range(1, N):
            total += S[k] / mpf(n) ** m
            for j in range(k, 0, -1):
                S[j] += S[j - 1] / n
        return total


def mzv_tail_estimate(m: int, k: int, N: int) -> float:
    """Crude bound for the omitted outer tail: twice the integral of
    (ln t + 1)^k / (k! t^m) over t >= N - 1, in closed form via t = L e^u:

        L^(1-m) / k! * sum_j C(k, j) (ln L + 1)^(k-j) j! / (m-1)^(j+1).
    """
    L = max(N - 1, 2)
    c = math.log(L) + 1
    total = sum(math.comb(k, j) * c ** (k - j) * math.factorial(j) / (m - 1) ** (j + 1)
                for j in range(k + 1))
    return 2 * total * L ** (1 - m) / math.factorial(k)


class _HarmonicInterpolant:
    """Smooth continuation g(t) of S_k(t) / t^m for real t >= N.

    Uses  sum_k S_k(t) x^k = Gamma(t + x) / (Gamma(t) Gamma(1 + x))
                           = exp(sum_j a_j(t) x^j),
    a_1(t) = psi(t) - psi(1),  a_j(t) = (-1)^(j+1) (zeta(j) - zeta(j, t)) / j.
    """

    def __init__(self, m: int, k: int, N: int):
        self.m, self.k, self.N = m, k, N
        self.eps = mpf(10) ** (-mp.dps)
        self.harmonic = sum(mpf(1) / i for i in range(1, N))   # psi(N) - psi(1)
        self.psi_N = _psi_asym(mpf(N), self.eps)
        self.zetas = {j: hurwitz_zeta(j, 1, mp.dps - 10) for j in range(2, k + 1)}
        self._table = None

    def _em_table(self) -> dict:
        # C[j][i-1] = B_2i / (2i)! * j (j+1) ... (j+2i-2), the Euler-Maclaurin
        # coefficients of zeta(j, t) in powers t^-(j+2i-1)
        bern = bernoulli_mpf(max(8, int(mp.dps)))
        table = {}
        for j in range(2, self.k + 1):
            row = []
            poch = mpf(j)
            fact = mpf(2)
            for i, b in enumerate(bern, start=1):
                row.append(b / fact * poch)
                poch *= (j + 2 * i - 1) * (j + 2 * i)
                fact *= (2 * i + 1) * (2 * i + 2)
            table[j] = row
        return table

    def _hurwitz_values(self, t) -> dict:
        # zeta(j, t) for j = 2..k to absolute accuracy eps; values below eps
        # are dropped, and None marks a j whose expansion did not settle
        if self._table is None:
            self._table = self._em_table()
        eps = self.eps
        inv = 1 / t
        inv2 = inv * inv
        out = {}
        pj = inv
        for j in range(2, self.k + 1):
            pj *= inv
            if pj * t < eps:
                out[j] = 0
                continue
            total = pj * t / (j - 1) + pj / 2
            power = pj * inv
            last = None
            value = None
            for c in self._table[j]:
                term = c * power
                total += term
                size = abs(term)
                if size < eps:
                    value = total
                    break
                if last is not None and size > last:
                    break
                last = size
                power *= inv2
            out[j] = value
        return out

    def _coefficients(self, t):
        eps = self.eps
        a = [None, self.harmonic + _psi_asym(t, eps) - self.psi_N]
        hz = self._hurwitz_values(t)
        for j in range(2, self.k + 1):
            value = hz[j]
            if value is None:
                value = hurwitz_zeta(j, t, mp.dps - 10)
            a.append((-1) ** (j + 1) * (self.zetas[j] - value) / j)
        return a

    def __call__(self, t):
        a = self._coefficients(t)
        e = [mpf(1)]
        for q in range(1, self.k + 1):
            e.append(sum(j * a[j] * e[q - j] for j in range(1, q + 1)) / q)
        return e[self.k] * t ** (-self.m)

    def taylor(self, order: int) -> list:
        """Taylor coefficients of g(N + h) in h up to h^order."""
        N, k, m = mpf(self.N), self.k, self.m
        R = order
        hz = {s: _hurwitz_large(s, N, self.eps) for s in range(2, k + R + 2)}
        a = [None]
        for j in range(1, k + 1):
            if j == 1:
                c0 = self.harmonic
            else:
                c0 = (-1) ** (j + 1) * (self.zetas[j] - hz[j]) / j
            coeffs = [c0]
            binom = 1
            for r in range(1, R + 1):
                binom = binom * (j + r - 1) // r       # C(j+r-1, r)
                coeffs.append(mpf((-1) ** (j + r)) * binom * hz[j + r] / j)
            a.append(coeffs)

        def mul(u, v):
            out = [mpf(0)] * (R + 1)
            for i, ui in enumerate(u):
                if ui == 0:
                    continue
                for jj in range(R + 1 - i):
                    out[i + jj] += ui * v[jj]
            return out

        e = [[mpf(1)] + [mpf(0)] * R]
        for q in range(1, k + 1):
            acc = [mpf(0)] * (R + 1)
            for j in range(1, q + 1):
                prod = mul(a[j], e[q - j])
                for r in range(R + 1):
                    acc[r] += j * prod[r]
            e.append([x / q for x in acc])
        # (N + h)^(-m) = N^-m sum_r C(-m, r) (h / N)^r
        inv = [N ** (-m)]
        for r in range(1, R + 1):
            inv.append(inv[-1] * (-(m + r - 1)) / (r * N))
        return mul(e[k], inv)


def _hurwitz_large(s: int, a, eps):
    value = _em_hurwitz(mpf(s), a, eps)
    if value is None:
        value = hurwitz_zeta(s, a, mp.dps - 10)
    return value


def _outer_tail(m: int, k: int, N: int):
    """sum_{n >= N} S_k(n) / n^m by Euler-Maclaurin on the interpolant."""
    g = _HarmonicInterpolant(m, k, N)
    eps = g.eps
    bern = bernoulli_mpf(max(8, int(mp.dps)))
    order = 7
    while True:
        coeffs = g.taylor(order)
        correction = coeffs[0] / 2
        converged = False
        for j in range(1, (order + 1) // 2 + 1):
            term = bern[j - 1] / (2 * j) * coeffs[2 * j - 1]
            correction -= term
            if abs(term) < eps * abs(coeffs[0]):
                converged = True
                break
        if converged:
            break
        order = 2 * order + 1
        if order > 4 * mp.dps:
            raise ArithmeticError("Euler-Maclaurin tail did not converge")
    cfg = QuadratureConfig(target_abs_error=10.0 ** (13 - mp.dps), max_levels=14)
    integral = quad_de_halfline(lambda u: g(N + u), cfg, prec=mp.dps - 10).value
    return integral + correction


def default_cutoff(prec: int) -> int:
    return max(40, 2 * prec)


def mzv_ones(m: int, k: int = 0, prec: int = DEFAULT_DIGITS, N: int | None = None):
    """zeta(m, {1}_k) = sum_n S_k(n) / n^m.

    Direct nested sum over n < N, then the outer tail by Euler-Maclaurin
    applied to the analytic continuation of S_k(t) / t^m.  This path never
    touches the symbolic reductions, so it serves as their independent check.
    """
    idx = MZVIndex(m, k)
    with workdps(prec):
        N = N or default_cutoff(prec)
        if idx.ones == 0:
            return hurwitz_zeta(m, 1, mp.dps - 10)
        return mzv_ones_partial(m, k, N, mp.dps - 10) + _outer_tail(m, k, N)


# ---------------------------------------------------------------------------
# Logarithmic integral


def li(x, prec: int = DEFAULT_DIGITS, cfg: QuadratureConfig | None = None):
    """li(x) = integral of 1/ln t over (0, x), for 0 < x < 1.

    With z = -ln x, li(x) = -E_1(z).  For z < 2 the convergent series
    li(x) = gamma + ln z + sum (-z)^n / (n n!) is used; otherwise
    E_1(z) = e^-z int_0^inf e^-u / (z + u) du by exp-sinh quadrature.
    """
    with workdps(prec):
        x = mpf(x)
        if not 0 < x < 1:
            raise DomainError("li is only provided on (0, 1)")
        z = -mpmath.log(x)
        if z < 2:
            eps = mpf(10) ** (-mp.dps)
            total = mpmath.euler + mpmath.log(z)
            term = mpf(1)
            n = 0
            while True:
                n += 1
                term *= -z / n
                total += term / n
                if abs(term) < eps:
                    return total
        integral = quad_de_halfline(lambda u: mpmath.exp(-u) / (z + u), cfg, prec).value
        return -mpmath.exp(-z) * integral
