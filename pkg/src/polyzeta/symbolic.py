"""Exact zeta-polynomials and the reductions of zeta(m, {1}_k) and I_n to
polynomials in single zeta values.

A :class:`ZetaPolynomial` is a finite map from monomials to ``Fraction``
coefficients.  Atoms are pi, ln 2, zeta(s), Li_s(1/2) and
Li_{b,{1}_c}(1/2).  No floating point is used here; numeric evaluation
delegates to :mod:`polyzeta.zeta`.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import mpmath
from mpmath import mp, mpf

from .kernel import DEFAULT_DIGITS, DomainError, bernoulli_even, workdps
from .zeta import MZVIndex, mpl_ones, mzv_ones, polylog_half, zeta_int

_KIND_ORDER = {"pi": 0, "ln2": 1, "zeta": 2, "li": 3, "mpl": 4}


@dataclass(frozen=True, order=False)
class ZetaAtom:
    kind: str
    args: tuple = ()

    def __post_init__(self):
        kind, args = self.kind, self.args
        if kind not in _KIND_ORDER:
            raise ValueError(f"unknown atom kind {kind!r}")
        if kind in ("pi", "ln2") and args:
            raise ValueError(f"{kind} takes no arguments")
        if kind in ("zeta", "li") and (len(args) != 1 or args[0] < 2):
            raise ValueError(f"{kind} needs a single argument >= 2")
        if kind == "mpl" and (len(args) != 2 or args[0] < 2 or args[1] < 1):
            raise ValueError("mpl needs (b >= 2, c >= 1)")

    @property
    def weight(self) -> int:
        if self.kind in ("pi", "ln2"):
            return 1
        return sum(self.args)

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.args)

    def text(self) -> str:
        if self.kind in ("pi", "ln2"):
            return self.kind
        if self.kind == "zeta":
            return f"zeta({self.args[0]})"
        if self.kind == "li":
            return f"Li[{self.args[0]}](1/2)"
        b, c = self.args
        return "Li[" + ",".join(map(str, [b] + [1] * c)) + "](1/2)"

    def value(self, prec: int):
        return _atom_value(self, prec)


@lru_cache(maxsize=4096)
def _atom_value_cached(atom: ZetaAtom, dps: int):
    prec = dps - 10
    with mp.workdps(dps):
        if atom.kind == "pi":
            return +mpmath.pi
        if atom.kind == "ln2":
            return +mpmath.ln2
        if atom.kind == "zeta":
            return zeta_int(atom.args[0], prec)
        if atom.kind == "li":
            return polylog_half(atom.args[0], prec)
        b, c = atom.args
        return mpl_ones(b, c, mpf(1) / 2, prec)


def _atom_value(atom: ZetaAtom, prec: int):
    with workdps(prec):
        return _atom_value_cached(atom, mp.dps)


PI_ATOM = ZetaAtom("pi")
LN2_ATOM = ZetaAtom("ln2")

Monomial = tuple  # sorted tuple of (ZetaAtom, exponent)


def monomial_weight(mono: Monomial) -> int:
    return sum(atom.weight * e for atom, e in mono)


def _mono_key(mono: Monomial):
    return (sum(e for _, e in mono), tuple((a.sort_key(), -e) for a, e in mono))


def _mono_mul(u: Monomial, v: Monomial) -> Monomial:
    exps: dict = {}
    for atom, e in u + v:
        exps[atom] = exps.get(atom, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: item[0].sort_key()))


class ZetaPolynomial:
    """Polynomial with rational coefficients in zeta-type atoms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(sorted(((a, int(e)) for a, e in mono if e),
                                key=lambda item: item[0].sort_key()))
            clean[mono] = clean.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms = {m: c for m, c in clean.items() if c != 0}

    # construction ------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "ZetaPolynomial":
        return cls({(): c})

    @classmethod
    def atom(cls, atom: ZetaAtom, exponent: int = 1) -> "ZetaPolynomial":
        return cls({((atom, exponent),): 1})

    # container protocol ------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda item: _mono_key(item[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZetaPolynomial.constant(other)
        if not isinstance(other, ZetaPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZetaPolynomial.constant(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ZetaPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaPolynomial({m: c * other for m, c in self._terms.items()})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return ZetaPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, n: int):
        result = ZetaPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    # queries -----------------------------------------------------------

    def atoms(self) -> set:
        return {a for mono in self._terms for a, _ in mono}

    def weights(self) -> set:
        return {monomial_weight(m) for m in self._terms}

    def is_homogeneous(self, weight: int) -> bool:
        return all(monomial_weight(m) == weight for m in self._terms)

    def evaluate(self, prec: int = DEFAULT_DIGITS):
        with workdps(prec):
            total = mpf(0)
            for mono, coeff in self._terms.items():
                term = mpf(coeff.numerator) / coeff.denominator
                for atom, e in mono:
                    term *= _atom_value(atom, prec) ** e
                total += term
            return total

    # serialization -----------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, coeff) in enumerate(self.items()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            factors = []
            if mag != 1 or not mono:
                factors.append(str(mag))
            for atom, e in mono:
                factors.append(atom.text() + (f"^{e}" if e != 1 else ""))
            body = "*".join(factors)
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"ZetaPolynomial({self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": {"num": str(c.numerator), "den": str(c.denominator)},
                    "atoms": [{"kind": a.kind, "args": list(a.args), "exp": e} for a, e in mono],
                }
                for mono, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data) -> "ZetaPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        terms = []
        for term in data["terms"]:
            coeff = Fraction(int(term["coeff"]["num"]), int(term["coeff"]["den"]))
            mono = tuple((ZetaAtom(a["kind"], tuple(a["args"])), int(a["exp"])) for a in term["atoms"])
            terms.append((mono, coeff))
        return cls(terms)

    @classmethod
    def from_text(cls, text: str) -> "ZetaPolynomial":
        return _parse_text(text)


_ATOM_RE = re.compile(
    r"^(?:(?P<pi>pi)|(?P<ln2>ln2)|zeta\((?P<z>\d+)\)|Li\[(?P<li>[\d,]+)\]\(1/2\))(?:\^(?P<e>\d+))?$")
_RATIONAL_RE = re.compile(r"^\d+(?:/\d+)?$")


def _parse_text(text: str) -> ZetaPolynomial:
    text = text.strip()
    if text == "0":
        return ZetaPolynomial()
    # split on top-level " + " / " - "; a leading '-' belongs to the first term
    tokens = re.split(r" ([+-]) ", text)
    signed = [(-1 if tokens[0].startswith("-") else 1, tokens[0].lstrip("-"))]
    for op, body in zip(tokens[1::2], tokens[2::2]):
        signed.append((-1 if op == "-" else 1, body))
    terms = []
    for sign, body in signed:
        coeff = Fraction(sign)
        mono = []
        for factor in body.split("*"):
            if _RATIONAL_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _ATOM_RE.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r}")
            e = int(m.group("e") or 1)
            if m.group("pi"):
                atom = PI_ATOM
            elif m.group("ln2"):
                atom = LN2_ATOM
            elif m.group("z"):
                atom = ZetaAtom("zeta", (int(m.group("z")),))
            else:
                idx = [int(v) for v in m.group("li").split(",")]
                if len(idx) == 1:
                    atom = ZetaAtom("li", (idx[0],))
                else:
                    if any(v != 1 for v in idx[1:]):
                        raise ValueError(f"only Li[b,1,...,1] is supported: {factor!r}")
                    atom = ZetaAtom("mpl", (idx[0], len(idx) - 1))
            mono.append((atom, e))
        terms.append((tuple(mono), coeff))
    return ZetaPolynomial(terms)


# convenient constructors


def zeta_atom(s: int) -> ZetaPolynomial:
    return ZetaPolynomial.atom(ZetaAtom("zeta", (s,)))


def pi_atom(e: int = 1) -> ZetaPolynomial:
    return ZetaPolynomial.atom(PI_ATOM, e)


def ln2_atom(e: int = 1) -> ZetaPolynomial:
    return ZetaPolynomial.atom(LN2_ATOM, e) if e else ZetaPolynomial.constant(1)


def li_half_atom(b: int, c: int = 0) -> ZetaPolynomial:
    """Li_{b,{1}_c}(1/2) as an atom (Li_b(1/2) when c = 0)."""
    if c == 0:
        return ZetaPolynomial.atom(ZetaAtom("li", (b,)))
    return ZetaPolynomial.atom(ZetaAtom("mpl", (b, c)))


# ---------------------------------------------------------------------------
# The Koelbig-Mignaco-Remiddi evaluation of J_{k,l}


def _partitions(total: int, smallest: int = 2):
    """Partitions of ``total`` into parts >= smallest, parts non-decreasing."""
    if total == 0:
        yield ()
        return
    for first in range(smallest, total + 1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _poly_mul(u: list, v: list) -> list:
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] += a * b
    return out


@lru_cache(maxsize=None)
def _kolbig_table(weight: int) -> tuple:
    """Per partition {t_1..t_p} of ``weight`` into parts > 1: the summed
    weight over *ordered* tuples, (-1)^(p+1)/p! * p!/prod(mult!) / prod(t_i),
    and the polynomial prod_i ((1+y)^t_i - 1 - y^t_i) whose y^l coefficient is
    the sum over l_1 + ... + l_p = l, 0 < l_i < t_i of prod C(t_i, l_i)."""
    rows = []
    for parts in _partitions(weight):
        p = len(parts)
        mult = 1
        for value in set(parts):
            mult *= math.factorial(parts.count(value))
        prod_t = math.prod(parts)
        coeff = Fraction((-1) ** (p + 1), mult * prod_t)
        poly = [1]
        for t in parts:
            factor = [0] + [math.comb(t, j) for j in range(1, t)]
            poly = _poly_mul(poly, factor)
        mono = tuple(sorted(((ZetaAtom("zeta", (v,)), parts.count(v)) for v in set(parts)),
                            key=lambda item: item[0].sort_key()))
        rows.append((mono, coeff, tuple(poly)))
    return tuple(rows)


@lru_cache(maxsize=None)
def kolbig_J(k: int, l: int) -> ZetaPolynomial:
    """J_{k,l} = int_0^1 (-ln(1-x))^k / (1-x) (-ln x)^l dx as a zeta-polynomial.

    The t-sum runs over ordered tuples (t_1, ..., t_p): a multiset with
    multiplicities mult_v enters p!/prod(mult_v!) times, which cancels the
    1/p! prefactor down to 1/prod(mult_v!).
    """
    if k < 0:
        raise DomainError("kolbig_J needs k >= 0")
    if l < 1:
        raise DomainError("kolbig_J needs l >= 1 (the integral diverges for l = 0)")
    scale = math.factorial(k) * math.factorial(l)
    terms = {}
    for mono, coeff, poly in _kolbig_table(k + l + 1):
        if l < len(poly) and poly[l]:
            terms[mono] = scale * coeff * poly[l]
    return ZetaPolynomial(terms)


def _as_index(idx, k=None) -> MZVIndex:
    if isinstance(idx, MZVIndex):
        return idx
    if k is None:
        m, k = idx
    else:
        m = idx
    return MZVIndex(int(m), int(k))


@lru_cache(maxsize=None)
def _mzv_reduce(m: int, k: int) -> ZetaPolynomial:
    return zeta_normal_form(kolbig_J(k, m - 1) / (math.factorial(k) * math.factorial(m - 1)))


def mzv_reduce(idx, k: int | None = None) -> ZetaPolynomial:
    """zeta(m, {1}_k) as a polynomial in single zeta values.

    Accepts ``mzv_reduce(MZVIndex(m, k))``, ``mzv_reduce((m, k))`` or
    ``mzv_reduce(m, k)``.  Products of even zeta values are merged, so
    the result is in :func:`zeta_normal_form`.
    """
    idx = _as_index(idx, k)
    return _mzv_reduce(idx.leading, idx.ones)


def i_n_mzv_sum(n: int) -> list:
    """I_n = n! * sum_k zeta(n - k + 2, {1}_k) as (coefficient, index) pairs."""
    if n < 0:
        raise DomainError("n must be >= 0")
    c = math.factorial(n)
    return [(c, MZVIndex(n - k + 2, k)) for k in range(n + 1)]


@lru_cache(maxsize=None)
def i_n_reduce(n: int) -> ZetaPolynomial:
    """I_n = sum_k C(n, k) J_{k, n-k+1} / (n - k + 1), exactly, in
    :func:`zeta_normal_form`."""
    if n < 0:
        raise DomainError("n must be >= 0")
    total = ZetaPolynomial()
    for k in range(n + 1):
        total = total + kolbig_J(k, n - k + 1) * Fraction(math.comb(n, k), n - k + 1)
    return zeta_normal_form(total)


def i_n_from_mzvs(n: int) -> ZetaPolynomial:
    """Second route to I_n: sum of mzv_reduce over the MZV expansion."""
    total = ZetaPolynomial()
    for c, idx in i_n_mzv_sum(n):
        total = total + mzv_reduce(idx) * c
    return total


# ---------------------------------------------------------------------------
# canonical form and coefficient queries


def even_zeta_coefficient(s: int) -> Fraction:
    """Rational r with zeta(s) = r * pi^s for even s >= 2."""
    if s < 2 or s % 2:
        raise DomainError("even_zeta_coefficient needs an even s >= 2")
    j = s // 2
    return Fraction((-1) ** (j + 1)) * bernoulli_even(j) * 2 ** s / (2 * math.factorial(s))


def canonicalize(p: ZetaPolynomial) -> ZetaPolynomial:
    """Rewrite every zeta(even) as its rational multiple of a power of pi."""
    out = ZetaPolynomial()
    for mono, coeff in p.terms.items():
        factor = Fraction(coeff)
        rest = []
        pi_power = 0
        for atom, e in mono:
            if atom.kind == "zeta" and atom.args[0] % 2 == 0:
                s = atom.args[0]
                factor *= even_zeta_coefficient(s) ** e
                pi_power += s * e
            else:
                rest.append((atom, e))
        if pi_power:
            rest.append((PI_ATOM, pi_power))
        out = out + ZetaPolynomial({tuple(rest): factor})
    return out


def is_canonical(p: ZetaPolynomial) -> bool:
    return not any(a.kind == "zeta" and a.args[0] % 2 == 0 for a in p.atoms())


def as_monomial(m) -> Monomial:
    if isinstance(m, ZetaPolynomial):
        if len(m) != 1:
            raise ValueError("monomial must be a single term")
        (mono, coeff), = m.terms.items()
        if coeff != 1:
            raise ValueError("monomial must have coefficient 1")
        return mono
    return ZetaPolynomial({tuple(m): 1}).items()[0][0]


def coeff_of(p: ZetaPolynomial, m) -> Fraction:
    """Exact coefficient of monomial ``m`` in ``p`` (zero if absent)."""
    return p.terms.get(as_monomial(m), Fraction(0))


def zeta_normal_form(p: ZetaPolynomial) -> ZetaPolynomial:
    """Canonicalize, then write each pi^(2j) back as zeta(2j) / r_j.

    Odd powers of pi are left alone; the result has no pi atoms whenever
    the input came from even zeta values.
    """
    out = ZetaPolynomial()
    for mono, coeff in canonicalize(p).terms.items():
        rest = []
        factor = Fraction(coeff)
        for atom, e in mono:
            if atom.kind == "pi" and e % 2 == 0:
                factor /= even_zeta_coefficient(e)
                rest.append((ZetaAtom("zeta", (e,)), 1))
            else:
                rest.append((atom, e))
        out = out + ZetaPolynomial({tuple(rest): factor})
    return out


def substitute(p: ZetaPolynomial, mapping: Mapping) -> ZetaPolynomial:
    """Replace atoms by polynomials (``mapping``: ZetaAtom -> ZetaPolynomial)."""
    out = ZetaPolynomial()
    for mono, coeff in p.terms.items():
        term = ZetaPolynomial.constant(coeff)
        for atom, e in mono:
            base = mapping.get(atom)
            term = term * (base ** e if base is not None else ZetaPolynomial.atom(atom, e))
        out = out + term
    return out


def known_half_values() -> dict:
    """Classical closed forms for Li_2(1/2), Li_3(1/2) and Li_{2,1}(1/2)."""
    z2, z3, l = zeta_atom(2), zeta_atom(3), ln2_atom()
    return {
        ZetaAtom("li", (2,)): z2 / 2 - l ** 2 / 2,
        ZetaAtom("li", (3,)): z3 * Fraction(7, 8) - z2 * l / 2 + l ** 3 / 6,
        ZetaAtom("mpl", (2, 1)): z3 / 8 - l ** 3 / 6,
    }


# ---------------------------------------------------------------------------
# duality


@dataclass(frozen=True)
class DualityReport:
    k: int
    l: int
    formal: bool
    numeric_delta: object
    tolerance: float

    @property
    def numeric(self) -> bool:
        return self.numeric_delta <= self.tolerance

    def __bool__(self):
        return self.formal and self.numeric


def duality_check(k: int, l: int, prec: int = 30, tolerance: float = 1e-20) -> DualityReport:
    """zeta(k+2, {1}_l) = zeta(l+2, {1}_k), checked formally and numerically.

    ``formal`` compares the canonical polynomials; the numeric side evaluates
    both MZVs with the series oracle at ``prec`` digits.
    """
    if k < 0 or l < 0:
        raise DomainError("duality_check needs k, l >= 0")
    left = canonicalize(mzv_reduce(k + 2, l))
    right = canonicalize(mzv_reduce(l + 2, k))
    with workdps(prec):
        delta = abs(mzv_ones(k + 2, l, prec) - mzv_ones(l + 2, k, prec))
    return DualityReport(k, l, left == right, delta, tolerance)


def generating_function_mzv_sums(n_max: int) -> list:
    """sum_{k+l=n} zeta(l+2, {1}_k) for n <= n_max from the exponential
    generating function 1 - exp(sum_n (x^n + y^n - (x+y)^n) zeta(n) / n) at
    x = y, as exact polynomials (used to cross-check the Koelbig route)."""
    # series in x: E = sum_n c_n x^n with c_n = (2 - 2^n) zeta(n) / n, n >= 2
    order = n_max + 2
    c = [ZetaPolynomial() for _ in range(order + 1)]
    for n in range(2, order + 1):
        c[n] = zeta_atom(n) * Fraction(2 - 2 ** n, n)
    # exp via e_q = (1/q) sum_j j c_j e_{q-j}
    e = [ZetaPolynomial.constant(1)]
    for q in range(1, order + 1):
        acc = ZetaPolynomial()
        for j in range(1, q + 1):
            if c[j]:
                acc = acc + c[j] * e[q - j] * j
        e.append(acc / q)
    # 1 - exp(...) = sum_n x^{n+2} * (sum over k+l=n)
    return [-e[n + 2] for n in range(n_max + 1)]
