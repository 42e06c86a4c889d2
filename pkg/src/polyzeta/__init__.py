"""High-precision multiple zeta values zeta(m, {1}_k), exact reductions of
polytope integrals to zeta-polynomials, and formulas for Euler's constant."""
from ._accel import BACKEND
from .asymptotics import (
    AsymptoticApprox,
    PoleData,
    abel_limit_check,
    lemma2_approx,
    residue_numeric_check,
    theorem5_pole_data,
    weight_sum_expansion,
)
from .combinatorics import (
    A_coeff,
    K_symbolic,
    L_symbolic,
    M_symbolic,
    a_weight,
    binomial_sum_identity_check,
    corollary7_check,
    prop3_check,
    ramanujan_check,
)
from .euler_gamma import (
    gamma_harmonic_limit,
    gamma_prop2,
    genfun_bbg,
    genfun_f,
    genfun_series_check,
    ser_product_partial,
    theorem4_verify,
)
from .kernel import (
    DEFAULT_DIGITS,
    DomainError,
    QuadratureConfig,
    QuadratureWarning,
    QuadResult,
    bernoulli_even,
    binom_real,
    gamma_signed,
    ln_gamma,
    quad_de,
    quad_de_halfline,
)
from .polytope import (
    MCResult,
    PolytopeSpec,
    I_kl_numeric,
    I_minus1_numeric,
    I_n_numeric,
    J_numeric,
    K_mn_numeric,
    L_m_numeric,
    M_mn_numeric,
    gamma_T_numeric,
    mc_integrate,
)
from .symbolic import (
    ZetaAtom,
    ZetaPolynomial,
    canonicalize,
    coeff_of,
    duality_check,
    i_n_reduce,
    kolbig_J,
    mzv_reduce,
    zeta_normal_form,
)
from .zeta import (
    MPLIndex,
    MZVIndex,
    hurwitz_zeta,
    li,
    mpl_ones,
    mzv_ones,
    polylog_half,
    zeta_int,
)

__all__ = [
    "A_coeff",
    "a_weight",
    "abel_limit_check",
    "AsymptoticApprox",
    "BACKEND",
    "bernoulli_even",
    "binom_real",
    "binomial_sum_identity_check",
    "canonicalize",
    "coeff_of",
    "corollary7_check",
    "DEFAULT_DIGITS",
    "DomainError",
    "duality_check",
    "gamma_harmonic_limit",
    "gamma_prop2",
    "gamma_signed",
    "gamma_T_numeric",
    "genfun_bbg",
    "genfun_f",
    "genfun_series_check",
    "hurwitz_zeta",
    "I_kl_numeric",
    "I_minus1_numeric",
    "I_n_numeric",
    "i_n_reduce",
    "J_numeric",
    "K_mn_numeric",
    "K_symbolic",
    "kolbig_J",
    "L_m_numeric",
    "L_symbolic",
    "lemma2_approx",
    "li",
    "ln_gamma",
    "M_mn_numeric",
    "M_symbolic",
    "mc_integrate",
    "MCResult",
    "mpl_ones",
    "MPLIndex",
    "mzv_ones",
    "mzv_reduce",
    "MZVIndex",
    "PoleData",
    "polylog_half",
    "PolytopeSpec",
    "prop3_check",
    "quad_de",
    "quad_de_halfline",
    "QuadratureConfig",
    "QuadratureWarning",
    "QuadResult",
    "ramanujan_check",
    "residue_numeric_check",
    "ser_product_partial",
    "theorem4_verify",
    "theorem5_pole_data",
    "weight_sum_expansion",
    "zeta_int",
    "zeta_normal_form",
    "ZetaAtom",
    "ZetaPolynomial",
]

__version__ = "0.1.0"
