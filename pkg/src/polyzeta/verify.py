"""Named verification suites.  Each suite returns a list of :class:`Check`
records; a check either compares two numbers against a tolerance or records
an exact (symbolic / integer) equality."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import mpmath
from mpmath import mpf

from . import asymptotics, combinatorics, euler_gamma, polytope, symbolic
from .kernel import workdps
from .zeta import mpl_ones, mzv_ones


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    delta: object = None        # mpf for numeric checks, None for exact ones
    tolerance: float | None = None

    @property
    def exact(self) -> bool:
        return self.delta is None


def _numeric(suite, name, delta, tol, scale):
    tol = tol * scale
    delta = abs(delta)
    return Check(suite, name, bool(delta <= tol), delta, tol)


def _exact(suite, name, ok):
    return Check(suite, name, bool(ok))


def lemma1(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    out = []
    for total in range(1, 7):
        for l in range(1, total + 1):
            k = total - l
            with workdps(prec):
                j = polytope.J_numeric(k, l, prec)
                mzv = math.factorial(k) * math.factorial(l) * mzv_ones(l + 1, k, prec)
                kol = symbolic.kolbig_J(k, l).evaluate(prec)
            out.append(_numeric("lemma1", f"J({k},{l}) = {k}!{l}! zeta({l + 1},{{1}}_{k})", j - mzv, 1e-9, scale))
            out.append(_numeric("lemma1", f"J({k},{l}) koelbig vs quadrature", kol - j, 1e-10, scale))
    return out


def duality(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    out = []
    for total in range(0, 7):
        for k in range(total + 1):
            l = total - k
            if k > l:
                continue
            report = symbolic.duality_check(k, l, prec)
            out.append(_numeric("duality", f"zeta({k + 2},{{1}}_{l}) = zeta({l + 2},{{1}}_{k}) numeric",
                                report.numeric_delta, 1e-9, scale))
            out.append(_exact("duality", f"zeta({k + 2},{{1}}_{l}) = zeta({l + 2},{{1}}_{k}) canonical",
                              report.formal))
    return out


def theorem4(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    with workdps(prec):
        half = polytope.I_minus1_numeric("halfline", prec)
        lhs, rhs, delta = euler_gamma.theorem4_verify(prec)
        return [
            _numeric("theorem4", "I(-1) halfline = logratio", half - lhs, 1e-10, scale),
            _exact("theorem4", "I(-1) = 1.7330025... (first 7 decimals)",
                   mpmath.floor(half * 10 ** 7) == 17330025),
            _numeric("theorem4", "I(-1) = int f + int li(x-x^2)/x + 1", delta, 1e-8, scale),
        ]


def theorem5(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    out = []
    with workdps(prec):
        for t in ("0.1", "-0.1", "0.3", "-0.3", "0.5"):
            N = 20 if t != "0.5" else 30
            partial, value = euler_gamma.genfun_series_check(mpf(t), N, prec)
            r = abs(mpf(t))
            bound = 4 * r ** (N + 1) / (1 - r)
            out.append(_numeric("theorem5", f"Taylor series of f at t={t}, N={N}",
                                partial - value, float(bound), scale))
        grid = [mpf(v) / 10 for v in (-4, -2, 0, 2, 4)]
        worst = mpf(0)
        for x in grid:
            for y in grid:
                lhs, rhs = euler_gamma.genfun_bbg(x, y, prec)
                worst = max(worst, abs(lhs - rhs))
        out.append(_numeric("theorem5", "Gamma form = exp-zeta form on 5x5 grid",
                            worst, 10.0 ** (10 - prec), scale))
        t = mpf("0.4")
        lhs, _ = euler_gamma.genfun_bbg(-t, -t, prec)
        out.append(_numeric("theorem5", "x = y = -t reduces to t^2 f(t)",
                            lhs - t * t * euler_gamma.genfun_f(t, prec), 1e-10, scale))
        for k in (1, 2, 3):
            res = asymptotics.residue_numeric_check(k, prec)
            out.append(_numeric("theorem5", f"residue of f at -{k} = C({2 * k},{k})/{k}",
                                res - mpf(math.comb(2 * k, k)) / k, 1e-8, scale))
        out.append(_exact("theorem5", "f(1) = 1/2", euler_gamma.genfun_f(1, prec) == mpf(1) / 2))
        for eps in ("1e-2", "1e-3"):
            v = asymptotics.abel_limit_check([mpf(eps)], prec)[0]
            out.append(_numeric("theorem5", f"f(1-{eps}) -> 1/2", v - mpf(1) / 2, 10 * float(eps), scale))
    return out


def corollary7(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    out = []
    with workdps(prec):
        for n in range(7):
            _, _, delta = combinatorics.corollary7_check(n, prec)
            out.append(_numeric("corollary7", f"polylog-MZV relation n={n}", delta, 1e-20, scale))
        for n in range(11):
            out.append(_exact("corollary7", f"binomial sum identity n={n}",
                              combinatorics.binomial_sum_identity_check(n)))
        _, _, delta = combinatorics.ramanujan_check(prec)
        out.append(_numeric("corollary7", "Ramanujan harmonic sum", delta, 1e-20, scale))
        ln2 = mpmath.ln2
        li21 = mpl_ones(2, 1, mpf(1) / 2, prec)
        out.append(_numeric("corollary7", "Li_{2,1}(1/2) = zeta(3)/8 - ln^3 2/6",
                            li21 - (mzv_ones(3, 0, prec) / 8 - ln2 ** 3 / 6), 1e-20, scale))
        for n in range(6):
            m2 = combinatorics.M_symbolic(2, n).evaluate(prec)
            out.append(_numeric("corollary7", f"M(2,{n}) = I({n})",
                                m2 - symbolic.i_n_reduce(n).evaluate(prec), 1e-20, scale))
    return out


def prop3(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    out = []
    for m in range(2, 9):
        for p in range(11):
            out.append(_exact("prop3", f"recurrence m={m} p={p}", combinatorics.prop3_check(m, p)))
    for p in range(13):
        out.append(_exact("prop3", f"a(3,{p}) = 4*2^p - 2", combinatorics.a_weight(3, p) == 4 * 2 ** p - 2))
        out.append(_exact("prop3", f"a(4,{p}) = 27*3^p - 24*2^p + 3",
                          combinatorics.a_weight(4, p) == 27 * 3 ** p - 24 * 2 ** p + 3))
    for m in range(2, 7):
        poly, _ = combinatorics.K_symbolic(m, 0)
        out.append(_exact("prop3", f"K({m},0) = {m - 1}! zeta({m})",
                          poly == symbolic.zeta_atom(m) * math.factorial(m - 1)))
    with workdps(prec):
        poly, _ = combinatorics.K_symbolic(3, 1)
        out.append(_numeric("prop3", "K(3,1) symbolic = quadrature",
                            poly.evaluate(prec) - polytope.K_mn_numeric(3, 1, prec), 1e-8, scale))
    return out


def asymptotic(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    out = []
    with workdps(prec):
        for n in range(8, 17):
            exact = symbolic.i_n_reduce(n).evaluate(prec) / math.factorial(n)
            approx = asymptotics.i_n_over_factorial_approx(n, 3).value
            delta = exact - mpf(approx.numerator) / approx.denominator
            out.append(_numeric("asymptotics", f"I({n})/{n}! three-term expansion",
                                delta, 10 * 70 / 4 ** (n + 2), scale))
        for m in (10, 15, 20):
            total = sum(mzv_ones(m - k, k, prec) for k in range(m - 1))
            approx = asymptotics.weight_sum_expansion(m, 3).value
            delta = total - mpf(approx.numerator) / approx.denominator
            out.append(_numeric("asymptotics", f"weight-{m} sum of zeta(m-k,{{1}}_k)",
                                delta, 10 * 70 / 4 ** m, scale))
    return out


def gamma(prec: int, scale: float = 1.0, seed: int = 0) -> list:
    with workdps(prec):
        oracle = euler_gamma.gamma_harmonic_limit(prec)
        prop2 = euler_gamma.gamma_prop2(min(prec, 20))
        tri = polytope.gamma_T_numeric(prec)
        ser = euler_gamma.ser_product_partial(100, max(prec, 60))
        mc = polytope.mc_integrate(polytope.PolytopeSpec("T"), "gamma_T", 1_000_000, seed)
        return [
            _numeric("gamma", "binomial-kernel integral = harmonic limit", prop2 - oracle, 1e-5, scale),
            _numeric("gamma", "triangle integral = harmonic limit", tri - oracle, 1e-5, scale),
            _numeric("gamma", "binomial-kernel integral = triangle integral", prop2 - tri, 1e-5, scale),
            _numeric("gamma", "Ser product K=100 = e^gamma", ser - mpmath.exp(oracle), 1e-2, scale),
            _numeric("gamma", "Monte Carlo over T within 4 standard errors",
                     mpf(mc.mean) - oracle, 4 * mc.std_error, scale),
        ]


SUITES: dict[str, Callable] = {
    "lemma1": lemma1,
    "duality": duality,
    "theorem4": theorem4,
    "theorem5": theorem5,
    "corollary7": corollary7,
    "prop3": prop3,
    "asymptotics": asymptotic,
    "gamma": gamma,
}


def run_suite(name: str, prec: int, scale: float = 1.0, seed: int = 0) -> list:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(prec, scale, seed)]
    return SUITES[name](prec, scale, seed)
