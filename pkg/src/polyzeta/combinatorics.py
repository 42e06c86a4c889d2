"""Weight coefficients and symbolic assemblies of the V_m and W_m integrals.

K_{m,n} over V_m is ``n! sum_p a_{m,p} zeta(p+m, {1}_{n-p})`` with

    a_{m,p} = sum_{k_2+...+k_m = p} (p+m-1)! / ((k_2+1)! ... (k_m+1)!),

obtained from the closed inner integrals and J_{k,l} = k! l! zeta(l+1, {1}_k).
M_{m,n} over W_m and L_m = M_{m,0} additionally involve ln 2 and
multiple polylogarithms at 1/2, which stay symbolic here.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpf

from .kernel import DomainError, workdps
from .symbolic import (
    ZetaPolynomial,
    li_half_atom,
    ln2_atom,
    mzv_reduce,
    zeta_atom,
)
from .zeta import MZVIndex, mpl_ones, mzv_ones

DEFAULT_WEIGHT_CAP = 10


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def a_weight_bruteforce(m: int, p: int) -> int:
    """a_{m,p} by enumerating every (k_2, ..., k_m)."""
    top = math.factorial(p + m - 1)
    return sum(top // math.prod(math.factorial(k + 1) for k in ks)
               for ks in _compositions(p, m - 1))


@lru_cache(maxsize=None)
def _shifted_exp_power(parts: int, order: int) -> tuple:
    # coefficients of ((e^x - 1)/x)^parts up to x^order
    base = [Fraction(1, math.factorial(k + 1)) for k in range(order + 1)]
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(parts):
        out = [sum(out[i] * base[j - i] for i in range(j + 1)) for j in range(order + 1)]
    return tuple(out)


def a_weight(m: int, p: int) -> int:
    """a_{m,p} = (p+m-1)! [x^p] ((e^x - 1)/x)^(m-1)."""
    if m < 2 or p < 0:
        raise DomainError("a_weight needs m >= 2 and p >= 0")
    value = _shifted_exp_power(m - 1, p)[p] * math.factorial(p + m - 1)
    assert value.denominator == 1
    return int(value)


def prop3_check(m: int, p: int) -> bool:
    """sum_{t=0}^{m-2} C(m-1, t) a_{m-t, p+t} == (m-1)^(m+p-1), exactly."""
    if m < 2 or p < 0:
        raise DomainError("prop3_check needs m >= 2 and p >= 0")
    lhs = sum(math.comb(m - 1, t) * a_weight(m - t, p + t) for t in range(m - 1))
    return lhs == (m - 1) ** (m + p - 1)


def A_coeff(ks) -> Fraction:
    """A(k_2, ..., k_m) = 1/(k_2! ... k_m!) divided by the partial-sum product
    (k_m + 1)(k_{m-1} + k_m + 2) ... (k_3 + ... + k_m + m - 2).

    For m = 2 the product is empty; for m = 3 it is the single factor k_3 + 1.
    """
    ks = tuple(int(k) for k in ks)
    if not ks or min(ks) < 0:
        raise DomainError("A_coeff needs a nonempty vector of non-negative integers")
    value = Fraction(1, math.prod(math.factorial(k) for k in ks))
    tail = 0
    for j, k in enumerate(reversed(ks[1:]), start=1):
        tail += k
        value /= tail + j
    return value


def _check_cap(weight: int, cap: int):
    if weight > cap:
        raise DomainError(f"weight {weight} exceeds the weight cap {cap}")


def K_mzv_combination(m: int, n: int) -> list:
    """K_{m,n} = sum of ``coeff * zeta(p+m, {1}_{n-p})`` as (coeff, index) pairs."""
    if m < 2 or n < 0:
        raise DomainError("need m >= 2 and n >= 0")
    f = math.factorial(n)
    return [(f * a_weight(m, p), MZVIndex(p + m, n - p)) for p in range(n + 1)]


def K_symbolic(m: int, n: int, weight_cap: int = DEFAULT_WEIGHT_CAP):
    """K_{m,n} as an exact zeta-polynomial, with its MZV combination."""
    _check_cap(m + n, weight_cap)
    combo = K_mzv_combination(m, n)
    poly = ZetaPolynomial()
    for coeff, idx in combo:
        poly = poly + mzv_reduce(idx) * coeff
    return poly, combo


def M_symbolic(m: int, n: int, weight_cap: int = DEFAULT_WEIGHT_CAP) -> ZetaPolynomial:
    """M_{m,n} over W_m: MZVs reduced to single zetas, ln 2 and
    Li_{b,{1}_c}(1/2) kept as atoms."""
    if m < 2 or n < 0:
        raise DomainError("need m >= 2 and n >= 0")
    _check_cap(m + n, weight_cap)
    w = m + n
    total = ZetaPolynomial()
    for ks in _compositions(n, m):
        k1, rest = ks[0], ks[1:]
        s = sum(rest) + m - 2
        bracket = mzv_reduce(s + 2, k1) * math.factorial(s)
        bracket = bracket - ln2_atom(w) * Fraction(1, math.factorial(k1 + 1) * w)
        polylogs = ZetaPolynomial()
        for p in range(s + 1):
            polylogs = polylogs + ln2_atom(p) * li_half_atom(s + 2 - p, k1) * Fraction(1, math.factorial(p))
        bracket = bracket - polylogs * math.factorial(s)
        total = total + bracket * A_coeff(rest)
    return total * (math.factorial(m) * math.factorial(n))


def L_symbolic(m: int) -> ZetaPolynomial:
    """m! zeta(m) - (m-1) ln^m 2 - m! sum_{p<=m-2} ln^p 2 / p! Li_{m-p}(1/2)."""
    if m < 2:
        raise DomainError("L_symbolic needs m >= 2")
    f = math.factorial(m)
    poly = zeta_atom(m) * f - ln2_atom(m) * (m - 1)
    for p in range(m - 1):
        poly = poly - ln2_atom(p) * li_half_atom(m - p) * Fraction(f, math.factorial(p))
    return poly


def corollary7_check(n: int, prec: int = 30):
    """Two numeric sides of

        sum_k sum_{p<=n-k} ln^p 2/p! Li_{n-k+2-p,{1}_k}(1/2)
            = (1 - 2^(n+1))/(n+2)! ln^(n+2) 2 + 1/2 sum_k zeta(n-k+2, {1}_k).
    """
    if not 0 <= n <= 6:
        raise DomainError("corollary7_check supports 0 <= n <= 6")
    with workdps(prec):
        ln2 = mpmath.ln2
        half = mpf(1) / 2
        lhs = mpf(0)
        for k in range(n + 1):
            for p in range(n - k + 1):
                lhs += ln2 ** p / math.factorial(p) * mpl_ones(n - k + 2 - p, k, half, prec)
        rhs = mpf(1 - 2 ** (n + 1)) / math.factorial(n + 2) * ln2 ** (n + 2)
        rhs += sum(mzv_ones(n - k + 2, k, prec) for k in range(n + 1)) / 2
        return lhs, rhs, lhs - rhs


def binomial_sum_identity_check(n: int) -> bool:
    """sum_k 1/((k+1)! (n-k)!) == (2^(n+1) - 1)/(n+1)!, exactly."""
    if n < 0:
        raise DomainError("n must be >= 0")
    lhs = sum(Fraction(1, math.factorial(k + 1) * math.factorial(n - k)) for k in range(n + 1))
    return lhs == Fraction(2 ** (n + 1) - 1, math.factorial(n + 1))


def ramanujan_check(prec: int = 30):
    """sum_r H_r / (r^2 2^r) = Li_{2,1}(1/2) + Li_3(1/2) against
    zeta(3) - pi^2 ln 2 / 12."""
    with workdps(prec):
        half = mpf(1) / 2
        lhs = mpl_ones(2, 1, half, prec) + mpl_ones(3, 0, half, prec)
        rhs = mzv_ones(3, 0, prec) - mpmath.pi ** 2 * mpmath.ln2 / 12
        return lhs, rhs, lhs - rhs


def ramanujan_bruteforce(R: int = 200, prec: int = 30):
    """Direct partial sum of H_r / (r^2 2^r) for r <= R."""
    with workdps(prec):
        total = mpf(0)
        h = mpf(0)
        for r in range(1, R + 1):
            h += mpf(1) / r
            total += h / (mpf(r) ** 2 * mpf(2) ** r)
        return total
