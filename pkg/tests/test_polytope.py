import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from mpmath import mp, mpf

from polyzeta import _fallback
from polyzeta.kernel import DomainError
from polyzeta.polytope import (
    PolytopeSpec,
    I_kl_numeric,
    I_minus1_numeric,
    I_n_numeric,
    J_numeric,
    K_mn_numeric,
    L_m_numeric,
    M_mn_numeric,
    gamma_T_numeric,
    inv_log_xy_reference,
    mc_integrate,
    volume_numeric,
)
from polyzeta.zeta import mzv_ones

D = 30

try:
    from polyzeta import _kernels
except ImportError:  # extension not built
    _kernels = None


def over_triangle(g, dps=20):
    """Nested mpmath quadrature over T = {x + y >= 1} of the unit square."""
    with mp.workdps(dps):
        return mpmath.quad(lambda x: mpmath.quad(lambda y: g(x, y), [1 - x, 1]), [0, 1])


# ---------------------------------------------------------------------------
# one-dimensional oracles

def test_j_examples():
    assert abs(J_numeric(0, 1, D) - mpmath.zeta(2)) < 1e-25
    assert abs(J_numeric(1, 1, D) - mpmath.zeta(3)) < 1e-25
    assert abs(J_numeric(2, 1, D) - 2 * mpmath.zeta(4)) < 1e-25


@pytest.mark.parametrize("k, l", [(0, 2), (1, 3), (3, 1), (2, 4)])
def test_j_factorial_mzv(k, l):
    expected = math.factorial(k) * math.factorial(l) * mzv_ones(l + 1, k, D)
    assert abs(J_numeric(k, l, D) - expected) < 1e-20


def test_j_rejects_divergent():
    with pytest.raises(DomainError):
        J_numeric(2, 0, D)


def test_i_n_examples():
    z2, z3, z5 = mpmath.zeta(2), mpmath.zeta(3), mpmath.zeta(5)
    assert abs(I_n_numeric(0, D) - z2) < 1e-25
    assert abs(I_n_numeric(1, D) - 2 * z3) < 1e-25
    i3 = 36 * z5 - 12 * z2 * z3
    assert abs(I_n_numeric(3, D) - i3) < 1e-22
    assert abs(i3 - mpf("13.6017")) < 1e-4


@pytest.mark.parametrize("n", [0, 1, 3])
def test_i_n_against_two_dimensional_quadrature(n):
    brute = over_triangle(lambda x, y: (-mpmath.log(x * y)) ** n / (x * y))
    assert abs(I_n_numeric(n, 20) - brute) < 1e-15


def test_i_kl_examples():
    assert abs(I_kl_numeric(0, 0, D) - mpmath.zeta(2)) < 1e-25
    assert abs(I_kl_numeric(1, 0, D) - mpmath.zeta(3)) < 1e-25


@pytest.mark.parametrize("k, l", [(k, l) for k in range(6) for l in range(6) if k < l and k + l <= 5])
def test_i_kl_symmetry(k, l):
    assert abs(I_kl_numeric(k, l, D) - I_kl_numeric(l, k, D)) < 1e-20


def test_i_kl_against_two_dimensional_quadrature():
    brute = over_triangle(lambda x, y: (-mpmath.log(x)) ** 2 * (-mpmath.log(y)) / (x * y))
    assert abs(I_kl_numeric(2, 1, 20) - brute) < 1e-14


@pytest.mark.parametrize("n", range(6))
def test_i_n_binomial_j_decomposition(n):
    total = sum(math.comb(n, k) * J_numeric(k, n - k + 1, D) / (n - k + 1) for k in range(n + 1))
    assert abs(I_n_numeric(n, D) - total) < 1e-20


def test_i_minus1_forms():
    half = I_minus1_numeric("halfline", D)
    ratio = I_minus1_numeric("logratio", D)
    assert abs(half - ratio) < 1e-20
    assert mpmath.floor(half * 10 ** 7) == 17330025
    brute = over_triangle(lambda x, y: 1 / (x * y * (-mpmath.log(x * y))))
    assert abs(ratio - brute) < 1e-15


def test_i_minus1_logratio_integrand_vanishes_at_zero():
    with mp.workdps(30):
        x = mpf("1e-200")
        value = mpmath.log1p(mpmath.log1p(-x) / mpmath.log(x)) / x
    assert abs(value) < 1e-2


def test_i_minus1_unknown_form():
    with pytest.raises(ValueError):
        I_minus1_numeric("bogus", D)


def test_gamma_triangle():
    assert abs(gamma_T_numeric(D) - mpmath.euler) < 1e-25
    brute = over_triangle(lambda x, y: (1 - x) / (x * y * (-mpmath.log1p(-y))))
    assert abs(brute - mpmath.euler) < 1e-12


def test_gamma_integrand_limit_at_zero():
    with mp.workdps(40):
        y = mpf("1e-20")
        value = (1 - y / -mpmath.log1p(-y)) / y
    assert abs(value - mpf(1) / 2) < 1e-15


def test_l_m_values():
    z2, z3 = mpmath.zeta(2), mpmath.zeta(3)
    ln2, pi = +mpmath.ln2, +mpmath.pi
    assert abs(L_m_numeric(2, D) - z2) < 1e-25
    assert abs(L_m_numeric(3, D) - Fraction(3, 4) * z3) < 1e-25
    l4 = (4 * pi ** 4 / 15 - ln2 ** 4 + pi ** 2 * ln2 ** 2 - 21 * z3 * ln2
          - 24 * mpmath.polylog(4, mpf(1) / 2))
    assert abs(L_m_numeric(4, D) - l4) < 1e-25


def test_k_values():
    assert abs(K_mn_numeric(2, 2, D) - Fraction(9, 2) * mpmath.zeta(4)) < 1e-22
    assert abs(K_mn_numeric(3, 0, D) - 2 * mpmath.zeta(3)) < 1e-22
    assert abs(K_mn_numeric(3, 1, D) - Fraction(13, 2) * mpmath.zeta(4)) < 1e-20


def test_k_zero_index_is_factorial_zeta():
    assert abs(K_mn_numeric(2, 0, D) - mpmath.zeta(2)) < 1e-22


def test_m_values():
    assert abs(M_mn_numeric(2, 1, D) - 2 * mpmath.zeta(3)) < 1e-22
    assert abs(M_mn_numeric(3, 0, 20) - L_m_numeric(3, 20)) < 1e-15


def test_m31_matches_symbolic():
    from polyzeta.combinatorics import M_symbolic

    assert abs(M_mn_numeric(3, 1, 20) - M_symbolic(3, 1).evaluate(20)) < 1e-8


@pytest.mark.parametrize("call", [
    lambda: K_mn_numeric(4, 1), lambda: K_mn_numeric(3, 5),
    lambda: M_mn_numeric(4, 0), lambda: L_m_numeric(1), lambda: I_n_numeric(-1),
    lambda: I_kl_numeric(-1, 0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


# ---------------------------------------------------------------------------
# polytopes and Monte Carlo

def test_polytope_membership():
    assert PolytopeSpec("T").contains((0.6, 0.5))
    assert not PolytopeSpec("T").contains((0.2, 0.3))
    assert PolytopeSpec("H").contains((0.4, 0.7))
    assert not PolytopeSpec("H").contains((0.7, 0.4))
    assert PolytopeSpec("V", 3).contains((0.8, 0.3, 0.5))
    assert not PolytopeSpec("W", 3).contains((0.8, 0.3, 0.5))
    with pytest.raises(ValueError):
        PolytopeSpec("T", 3)
    with pytest.raises(ValueError):
        PolytopeSpec("Q")


def test_volume_of_triangle():
    r = mc_integrate(PolytopeSpec("T"), "one", 10_000, seed=1)
    assert r.mean == 0.5


@pytest.mark.parametrize("spec", [PolytopeSpec("V", 2), PolytopeSpec("V", 3), PolytopeSpec("V", 5),
                                  PolytopeSpec("W", 3), PolytopeSpec("H")])
def test_volumes_against_quadrature(spec):
    r = mc_integrate(spec, "one", 400_000, seed=7)
    assert r.within(float(volume_numeric(spec)))


def test_w3_volume_value():
    assert abs(volume_numeric(PolytopeSpec("W", 3)) - mpf(1) / 4) < 1e-15


def test_xy_over_triangle():
    r = mc_integrate(PolytopeSpec("T"), "xy", 400_000, seed=3)
    assert r.within(5 / 24)


def test_gamma_integrand_monte_carlo():
    r = mc_integrate(PolytopeSpec("T"), "gamma_T", 1_000_000, seed=11)
    assert r.within(float(mpmath.euler))


def test_inverse_log_integrand_monte_carlo():
    # variance of 1/ln(xy) diverges only logarithmically at (1, 1): use a
    # plain tolerance rather than the standard error
    ref = inv_log_xy_reference(15)
    assert abs(ref - mpf("-0.806244094")) < 1e-8
    r = mc_integrate(PolytopeSpec("T"), "inv_log_xy", 2_000_000, seed=5)
    assert abs(r.mean - float(ref)) < 5e-3


def test_callable_integrand_matches_named():
    named = mc_integrate(PolytopeSpec("T"), "xy", 50_000, seed=9)
    func = mc_integrate(PolytopeSpec("T"), lambda x: x[:, 0] * x[:, 1], 50_000, seed=9)
    assert func.mean == pytest.approx(named.mean, rel=1e-12)


def test_callable_over_w3():
    # int over W_3 of x1 x2 x3: by symmetry 6 * int over the ordered part,
    # checked against nested quadrature
    with mp.workdps(20):
        exact = 6 * mpmath.quad(
            lambda y: mpmath.quad(lambda x: x * y * (1 - y * y) / 2, [1 - y, y]), [0.5, 1])
    r = mc_integrate(PolytopeSpec("W", 3), lambda x: x.prod(axis=1), 400_000, seed=2)
    assert r.within(float(exact))


def test_determinism_and_worker_independence():
    spec = PolytopeSpec("V", 3)
    a = mc_integrate(spec, "xy", 300_000, seed=42, block=1 << 16)
    b = mc_integrate(spec, "xy", 300_000, seed=42, block=1 << 16)
    c = mc_integrate(spec, "xy", 300_000, seed=42, workers=4, block=1 << 16)
    assert (a.mean, a.std_error) == (b.mean, b.std_error) == (c.mean, c.std_error)
    d = mc_integrate(spec, "xy", 300_000, seed=43, block=1 << 16)
    assert d.mean != a.mean


def test_mc_argument_validation():
    with pytest.raises(ValueError):
        mc_integrate(PolytopeSpec("T"), "nope", 100)
    with pytest.raises(ValueError):
        mc_integrate(PolytopeSpec("V", 3), "gamma_T", 100)
    with pytest.raises(ValueError):
        mc_integrate(PolytopeSpec("T"), "one", 1)


def test_uniform_stream_statistics():
    u = _fallback.uniforms(_fallback.stream_key(0, 0), 0, 200_000)
    assert u.min() >= 0 and u.max() < 1
    assert abs(u.mean() - 0.5) < 4 * math.sqrt(1 / 12 / len(u))
    counts, _ = np.histogram(u, bins=20, range=(0, 1))
    chi2 = ((counts - len(u) / 20) ** 2 / (len(u) / 20)).sum()
    assert chi2 < 60   # 19 degrees of freedom


@pytest.mark.skipif(_kernels is None, reason="compiled extension not built")
@pytest.mark.parametrize("kind, dim, code", [(0, 2, 3), (1, 2, 1), (1, 2, 2), (2, 2, 0),
                                             (3, 4, 3), (4, 3, 0), (4, 5, 3)])
def test_compiled_and_fallback_kernels_agree(kind, dim, code):
    fast = _kernels.mc_polytope(kind, dim, code, 50_000, 123, 4)
    slow = _fallback.mc_polytope(kind, dim, code, 50_000, 123, 4)
    assert fast[0] == pytest.approx(slow[0], rel=1e-11)
    assert fast[1] == pytest.approx(slow[1], rel=1e-11)


@pytest.mark.skipif(_kernels is None, reason="compiled extension not built")
def test_compiled_and_fallback_stream_keys_agree():
    for seed, stream in [(0, 0), (1, 5), (2 ** 64 - 1, 3)]:
        assert _kernels.stream_key(seed, stream) == _fallback.stream_key(seed, stream)
