"""Numeric oracles for the polytope integrals I_n, I_{k,l}, J_{k,l},
I_{-1}, K_{m,n}, L_m, M_{m,n} and the triangle integral for Euler's
constant, plus seeded Monte Carlo over the polytopes.

The quadrature oracles integrate the one-dimensional forms obtained by
doing the elementary inner integrations in closed form, e.g.

    int_{1-x}^1 (-ln y)^l / y dy = (-ln(1-x))^(l+1) / (l+1).

Monte Carlo is a sanity check only: the integrands of I_n are unbounded with
infinite variance near the axes, so it is restricted to bounded integrands
(or ones with finite variance, such as the gamma integrand over T).
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import mpmath
from mpmath import mp, mpf

from . import _accel, _fallback
from .kernel import (
    DEFAULT_DIGITS,
    DomainError,
    QuadratureConfig,
    quad_de,
    quad_de_halfline,
    workdps,
)


def _neg_log1m(x):
    return -mpmath.log1p(-x)


# ---------------------------------------------------------------------------
# one-dimensional quadrature oracles


def J_numeric(k: int, l: int, prec: int = DEFAULT_DIGITS):
    """J_{k,l} = int_0^1 (-ln(1-x))^k / (1-x) * (-ln x)^l dx."""
    if k < 0:
        raise DomainError("J_numeric needs k >= 0")
    if l < 1:
        raise DomainError("J_{k,0} diverges: l must be >= 1")

    def f(x):
        return _neg_log1m(x) ** k / (1 - x) * (-mpmath.log(x)) ** l

    with workdps(prec):
        return quad_de(f, 0, 1, prec=prec).value


def I_kl_numeric(k: int, l: int, prec: int = DEFAULT_DIGITS):
    """I_{k,l} over T, via I_{k,l} = J_{k,l+1} / (l + 1)."""
    if k < 0 or l < 0:
        raise DomainError("I_kl_numeric needs k, l >= 0")
    with workdps(prec):
        return J_numeric(k, l + 1, prec) / (l + 1)


def I_n_numeric(n: int, prec: int = DEFAULT_DIGITS):
    """I_n from the y-integrated form

        I_n = 1/(n+1) int_0^1 [(a + b)^(n+1) - a^(n+1)] / x dx,
        a = -ln x, b = -ln(1-x),

    with the difference expanded binomially so no cancellation occurs.
    """
    if n < 0:
        raise DomainError("I_n_numeric needs n >= 0")
    binoms = [math.comb(n + 1, j) for j in range(n + 2)]

    def f(x):
        a = -mpmath.log(x)
        b = _neg_log1m(x)
        return sum(binoms[j] * a ** (n + 1 - j) * b ** j for j in range(1, n + 2)) / x

    with workdps(prec):
        return quad_de(f, 0, 1, prec=prec).value / (n + 1)


def I_minus1_numeric(form: str = "halfline", prec: int = DEFAULT_DIGITS):
    """I_{-1} by either single-integral form.

    ``halfline``: int_0^inf (1 - 1/binom(2t, t)) dt / t^2
    ``logratio``: int_0^1 ln(1 + ln(1-x)/ln x) dx / x
    """
    if form == "halfline":
        from .euler_gamma import genfun_f

        with workdps(prec):
            return quad_de_halfline(lambda t: genfun_f(t, mp.dps - 10), prec=prec).value
    if form == "logratio":
        def f(x):
            return mpmath.log1p(mpmath.log1p(-x) / mpmath.log(x)) / x

        with workdps(prec):
            return quad_de(f, 0, 1, prec=prec).value
    raise ValueError(f"unknown form {form!r}; expected 'halfline' or 'logratio'")


def gamma_T_numeric(prec: int = DEFAULT_DIGITS):
    """Euler's constant from the triangle integral, x-integrated:

        gamma = int_0^1 (1 - y / (-ln(1-y))) / y dy.
    """
    def f(y):
        return (1 - y / _neg_log1m(y)) / y

    with workdps(prec):
        return quad_de(f, 0, 1, prec=prec).value


def L_m_numeric(m: int, prec: int = DEFAULT_DIGITS):
    """L_m over W_m via its reduction to [1/2, 1]:

        (m-1) * (-(ln 2)^m + m int_{1/2}^1 (-ln y)^(m-2) (-ln(1-y)) / y dy).
    """
    if m < 2:
        raise DomainError("L_m needs m >= 2")

    def f(y):
        return (-mpmath.log(y)) ** (m - 2) * _neg_log1m(y) / y

    with workdps(prec):
        integral = quad_de(f, mpf(1) / 2, 1, prec=prec).value
        return (m - 1) * (-mpmath.ln2 ** m + m * integral)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def K_mn_numeric(m: int, n: int, prec: int = DEFAULT_DIGITS):
    """K_{m,n} over V_m for m in {2, 3}, n <= 4.

    After the closed inner integrations over x_2..x_m,

        K_{m,n} = sum n! / (k_1! (k_2+1)! ... (k_m+1)!)
                  * int_0^1 (-ln x)^k_1 / x * (-ln(1-x))^(k_2+...+k_m+m-1) dx,

    with each outer integral done by quadrature.
    """
    if m not in (2, 3) or not 0 <= n <= 4:
        raise DomainError("K_mn_numeric supports m in {2, 3} and 0 <= n <= 4")
    if m == 2:
        return I_n_numeric(n, prec)
    with workdps(prec):
        total = mpf(0)
        for ks in _compositions(n, m):
            k1, rest = ks[0], ks[1:]
            weight = mpf(math.factorial(n)) / (
                math.factorial(k1) * math.prod(math.factorial(k + 1) for k in rest))
            power = sum(rest) + m - 1

            def f(x, k1=k1, power=power):
                return (-mpmath.log(x)) ** k1 / x * _neg_log1m(x) ** power

            total += weight * quad_de(f, 0, 1, prec=prec).value
        return total


def M_mn_numeric(m: int, n: int, prec: int = 20):
    """M_{m,n} over W_m for m in {2, 3}, n <= 4.

    m = 2 is I_n.  For m = 3 the symmetry of W_3 restricts to
    x_1 <= x_2 <= x_3; the x_3 integral is elementary and the remaining
    integral over H = {x <= y, x + y >= 1} is done as a 2-D iterated
    quadrature (y outer on [1/2, 1], x inner on [1-y, y]).
    """
    if m not in (2, 3) or not 0 <= n <= 4:
        raise DomainError("M_mn_numeric supports m in {2, 3} and 0 <= n <= 4")
    if m == 2:
        return I_n_numeric(n, prec)
    inner_cfg = QuadratureConfig(target_abs_error=10.0 ** (3 - prec), max_levels=10)
    with workdps(prec):
        # group (k1, k2, k3) by the exponents (k1, k2 + k3 + 1) of the H integrand
        weights: dict = {}
        for k1, k2, k3 in _compositions(n, 3):
            key = (k1, k2 + k3 + 1)
            w = mpf(1) / (math.factorial(k1) * math.factorial(k2) * math.factorial(k3) * (k3 + 1))
            weights[key] = weights.get(key, mpf(0)) + w

        def outer(y):
            # inner variable u = -ln x, so the x-integral runs over
            # [-ln y, -ln(1-y)] with the smooth integrand u^k1
            ly = -mpmath.log(y)
            upper = -mpmath.log1p(-y)
            inner = {}
            total = mpf(0)
            for (k1, ky), w in weights.items():
                if k1 not in inner:
                    inner[k1] = quad_de(lambda u: u ** k1, ly, upper, inner_cfg, prec).value
                total += w * inner[k1] * ly ** ky / y
            return total

        value = quad_de(outer, mpf(1) / 2, 1, prec=prec).value
        return 6 * math.factorial(n) * value


# ---------------------------------------------------------------------------
# Monte Carlo over polytopes

_KIND_CODES = {"S": 0, "T": 1, "H": 2, "V": 3, "W": 4}
NAMED_INTEGRANDS = {"one": 0, "gamma_T": 1, "inv_log_xy": 2, "xy": 3}


@dataclass(frozen=True)
class PolytopeSpec:
    """One of the unit-cube polytopes S, T, H, V(m), W(m)."""

    kind: str
    m: int = 2

    def __post_init__(self):
        if self.kind not in _KIND_CODES:
            raise ValueError(f"unknown polytope {self.kind!r}")
        if self.kind in "STH" and self.m != 2:
            raise ValueError(f"{self.kind} is two-dimensional")
        if self.m < 2:
            raise ValueError("dimension must be >= 2")

    @property
    def dimension(self) -> int:
        return self.m

    def contains(self, point) -> bool:
        x = list(point)
        if self.kind == "S":
            return all(0 <= v <= 1 for v in x)
        if self.kind == "T":
            return x[0] + x[1] >= 1
        if self.kind == "H":
            return x[0] <= x[1] and x[0] + x[1] >= 1
        if self.kind == "V":
            return all(x[0] + v >= 1 for v in x[1:])
        return all(x[i] + x[j] >= 1 for i in range(len(x)) for j in range(i + 1, len(x)))


@dataclass(frozen=True)
class MCResult:
    mean: float
    std_error: float
    samples: int
    seed: int
    blocks: list = field(default_factory=list, compare=False, repr=False)

    def within(self, target: float, n_sigma: float = 4.0) -> bool:
        return abs(self.mean - target) <= n_sigma * self.std_error


def _block_sums(kind, dim, f, count, seed, stream):
    if isinstance(f, int):
        return _accel.mc_polytope(kind, dim, f, count, seed, stream)
    key = _fallback.stream_key(seed, stream)
    x = _fallback.sample_points(kind, dim, key, 0, count)
    v = _fallback.per_draw(kind, x, f)
    return float(v.sum()), float((v * v).sum())


def mc_integrate(p: PolytopeSpec, f, samples: int, seed: int = 0, workers: int = 1,
                 block: int = 1 << 20) -> MCResult:
    """Monte Carlo estimate of the integral of ``f`` over ``p``.

    ``f`` is a name from :data:`NAMED_INTEGRANDS` (runs in the compiled
    kernel when available) or a vectorized callable on an ``(n, dim)``
    array.  Samples are split into blocks; block ``i`` draws from the
    counter-based stream ``(seed, i)`` and block results are merged in
    index order, so the result does not depend on ``workers``.
    T and H are sampled directly (fold / fold-and-sort); V and W use the
    box indicator, i.e. rejection with zero weight outside.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    if isinstance(f, str):
        if f not in NAMED_INTEGRANDS:
            raise ValueError(f"unknown integrand {f!r}")
        if NAMED_INTEGRANDS[f] in (1, 2) and p.dimension != 2:
            raise ValueError(f"{f} is a two-dimensional integrand")
        f = NAMED_INTEGRANDS[f]
    kind = _KIND_CODES[p.kind]
    seed &= (1 << 64) - 1
    counts = [block] * (samples // block)
    if samples % block:
        counts.append(samples % block)
    jobs = [(kind, p.dimension, f, c, seed, i) for i, c in enumerate(counts)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(lambda job: _block_sums(*job), jobs))
    else:
        sums = [_block_sums(*job) for job in jobs]
    s = math.fsum(a for a, _ in sums)
    s2 = math.fsum(b for _, b in sums)
    mean = s / samples
    var = max(s2 / samples - mean * mean, 0.0) * samples / (samples - 1)
    if s2 == 0.0 and kind >= 3:
        raise RuntimeError("no sample fell inside the polytope")
    return MCResult(mean, math.sqrt(var / samples), samples, seed, sums)


def volume_numeric(p: PolytopeSpec, prec: int = 20):
    """Volume by quadrature of the ordered-region reduction (V(m), W(m<=3))."""
    with workdps(prec):
        if p.kind == "S":
            return mpf(1)
        if p.kind == "T":
            return mpf(1) / 2
        if p.kind == "H":
            return mpf(1) / 4
        if p.kind == "V":
            # x_j ranges over [1 - x_1, 1]: volume = int_0^1 x^(m-1) dx
            return quad_de(lambda x: x ** (p.m - 1), 0, 1, prec=prec).value
        if p.m == 2:
            return mpf(1) / 2
        if p.m == 3:
            # 3! * int over H of (1 - y) for the x_3 in [y, 1]
            return 6 * quad_de(lambda y: (2 * y - 1) * (1 - y), mpf(1) / 2, 1, prec=prec).value
        raise DomainError("volume_numeric supports W(m) only for m <= 3")


def inv_log_xy_reference(prec: int = 20):
    """int int_T dx dy / ln(xy) = int_0^1 (li(x) - li(x - x^2)) / x dx."""
    from .zeta import li

    inner_cfg = QuadratureConfig(target_abs_error=10.0 ** (2 - prec), max_levels=10)
    with workdps(prec):
        return quad_de(lambda x: (li(x, prec, inner_cfg) - li(x - x * x, prec, inner_cfg)) / x,
                       0, 1, prec=prec).value
