"""Asymptotic expansions of Taylor coefficients from simple-pole data.

If ``g`` is meromorphic with simple poles ``z_j`` (residues ``r_j``) ordered
by modulus, its Taylor coefficients satisfy
``a_n ~ -sum_j r_j / z_j^(n+1)``, each truncation being accurate to the
order of the first omitted term.  Applied to ``genfun_f`` (poles at -k,
residues C(2k, k)/k) this gives the expansion of I_n / n! and of the weight
sums of zeta(m - k, {1}_k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .euler_gamma import genfun_f
from .kernel import DEFAULT_DIGITS, DomainError, workdps


@dataclass(frozen=True)
class PoleData:
    """Simple poles as ``(location, residue)`` pairs, sorted by |location|."""

    poles: tuple

    def __post_init__(self):
        mods = [abs(z) for z, _ in self.poles]
        if any(m == 0 for m in mods):
            raise ValueError("poles must be nonzero")
        if mods != sorted(mods):
            raise ValueError("poles must be ordered by modulus")

    def __len__(self):
        return len(self.poles)


@dataclass(frozen=True)
class AsymptoticApprox:
    n: int
    K: int
    value: object
    next_term_bound: object = None


def _term(z, r, n: int):
    return -Fraction(r) / Fraction(z) ** (n + 1)


def lemma2_approx(p: PoleData, n: int, K: int) -> AsymptoticApprox:
    """``-sum_{j<=K} r_j / z_j^(n+1)``, exact when the pole data are rational."""
    if not 0 <= K <= len(p):
        raise DomainError(f"K = {K} exceeds the {len(p)} available poles")
    value = sum((_term(z, r, n) for z, r in p.poles[:K]), Fraction(0))
    bound = abs(_term(*p.poles[K], n)) if K < len(p) else None
    return AsymptoticApprox(n, K, value, bound)


def theorem5_pole_data(K: int) -> PoleData:
    """Poles of ``genfun_f``: ``-k`` with residue ``C(2k, k)/k``, k = 1..K."""
    if K < 1:
        raise DomainError("K must be >= 1")
    return PoleData(tuple((Fraction(-k), Fraction(math.comb(2 * k, k), k))
                          for k in range(1, K + 1)))


def residue_numeric_check(k: int, prec: int = 30):
    """``lim_{t -> -k} (t + k) genfun_f(t)`` from the symmetric average at
    ``-k +- eps``, eps = 1e-2 .. 1e-5, Richardson-extrapolated in eps^2."""
    if k < 1:
        raise DomainError("k must be >= 1")
    with workdps(prec):
        rows = []
        for i in range(2, 6):
            eps = mpf(10) ** (-i)
            plus = eps * genfun_f(-k + eps, mp.dps)
            minus = -eps * genfun_f(-k - eps, mp.dps)
            rows.append((plus + minus) / 2)
        # Neville table on h = eps^2 with ratio 100 between rows
        for level in range(1, len(rows)):
            factor = mpf(100) ** level
            rows = [(factor * rows[i + 1] - rows[i]) / (factor - 1) for i in range(len(rows) - 1)]
        return rows[0]


def weight_sum_expansion(m: int, K: int) -> AsymptoticApprox:
    """``2 + sum_{k=2}^K C(2k, k) / k^m``; the bound is the (K+1)-st term."""
    if m < 2 or K < 1:
        raise DomainError("need m >= 2 and K >= 1")
    value = Fraction(2) + sum((Fraction(math.comb(2 * k, k), k ** m) for k in range(2, K + 1)),
                              Fraction(0))
    return AsymptoticApprox(m - 2, K, value, Fraction(math.comb(2 * K + 2, K + 1), (K + 1) ** m))


def i_n_over_factorial_approx(n: int, K: int) -> AsymptoticApprox:
    """K-term approximation of I_n / n!, i.e. ``sum_{k<=K} C(2k,k) / k^(n+2)``.

    The Taylor coefficient of ``genfun_f`` is (-1)^n I_n / n!, hence the sign.
    """
    a = lemma2_approx(theorem5_pole_data(K + 1), n, K)
    return AsymptoticApprox(n, K, (-1) ** n * a.value, a.next_term_bound)


def abel_limit_check(eps_list, prec: int = DEFAULT_DIGITS) -> list:
    """``genfun_f(1 - eps)`` for each eps; these tend to f(1) = 1/2."""
    out = []
    for eps in eps_list:
        if not 0 < eps < 1:
            raise DomainError("eps must lie in (0, 1)")
        with workdps(prec):
            out.append(genfun_f(1 - mpf(eps), prec))
    return out


def alternating_partial_sums(N: int, prec: int = 30) -> list:
    """Partial sums of ``sum (-1)^n I_n / n!`` for n <= N (a divergent series)."""
    from .symbolic import i_n_reduce

    with workdps(prec):
        total = mpf(0)
        out = []
        for n in range(N + 1):
            total += (-1) ** n * i_n_reduce(n).evaluate(prec) / math.factorial(n)
            out.append(+total)
        return out
