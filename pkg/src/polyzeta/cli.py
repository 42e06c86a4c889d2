"""Command-line interface: ``polyzeta compute | reduce | verify | asympt``.

Reports go to stdout as JSON (default), CSV or text; progress and timings
are logged to stderr so that reports are byte-identical across runs.
Exit codes: 0 success, 1 failed verification, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
import time
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from . import asymptotics, combinatorics, euler_gamma, polytope, symbolic, verify, zeta
from .kernel import DEFAULT_DIGITS, DomainError, workdps

SCHEMA = "polyzeta-report/1"
log = logging.getLogger("polyzeta")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    precision_digits: int = DEFAULT_DIGITS
    seed: int = 0
    weight_cap: int = 10
    output: str = "json"
    tolerance_scale: float = 1.0

    def __post_init__(self):
        if self.precision_digits < 15:
            raise UsageError("--digits must be at least 15")
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        if self.output not in ("json", "csv", "text"):
            raise UsageError(f"unknown output format {self.output!r}")
        if self.tolerance_scale <= 0:
            raise UsageError("--tolerance-scale must be positive")


def _num(x, digits: int) -> str:
    if isinstance(x, (int, str)):
        return str(x)
    with mpmath.mp.workdps(digits + 5):
        return mpmath.nstr(mpf(x), digits, min_fixed=-5, max_fixed=5)


# ---------------------------------------------------------------------------
# compute

_COMPUTE_ARITY = {"I": 1, "Iminus1": 0, "J": 2, "K": 2, "L": 1, "M": 2, "zeta": 1,
                  "mzv": 2, "liHalf": 1, "mpl": 2, "gamma": 0}


def _note(poly) -> str:
    return "= " + symbolic.zeta_normal_form(poly).to_text()


def _compute_values(target: str, args: list, cfg: RunConfig):
    """List of (method, value) pairs plus an optional exact-form note."""
    D = cfg.precision_digits
    note = None
    if target == "I":
        (n,) = args
        poly = symbolic.i_n_reduce(n)
        note = _note(poly)
        values = [("exact reduction", poly.evaluate(D)), ("quadrature", polytope.I_n_numeric(n, D))]
    elif target == "Iminus1":
        values = [("half-line integral", polytope.I_minus1_numeric("halfline", D)),
                  ("log-ratio integral", polytope.I_minus1_numeric("logratio", D))]
    elif target == "J":
        k, l = args
        poly = symbolic.kolbig_J(k, l)
        note = _note(poly)
        with workdps(D):
            mzv = math.factorial(k) * math.factorial(l) * zeta.mzv_ones(l + 1, k, D)
        values = [("exact reduction", poly.evaluate(D)), ("quadrature", polytope.J_numeric(k, l, D)),
                  ("nested series", mzv)]
    elif target == "K":
        m, n = args
        poly, _ = combinatorics.K_symbolic(m, n, cfg.weight_cap)
        note = _note(poly)
        values = [("exact reduction", poly.evaluate(D))]
        if m <= 3 and n <= 4:
            values.append(("quadrature", polytope.K_mn_numeric(m, n, D)))
    elif target == "L":
        (m,) = args
        poly = combinatorics.L_symbolic(m)
        note = "= " + poly.to_text()
        values = [("exact reduction", poly.evaluate(D)), ("quadrature", polytope.L_m_numeric(m, D))]
    elif target == "M":
        m, n = args
        poly = combinatorics.M_symbolic(m, n, cfg.weight_cap)
        note = _note(poly)
        values = [("exact reduction", poly.evaluate(D))]
        if m <= 3 and n <= 4:
            values.append(("quadrature", polytope.M_mn_numeric(m, n, D)))
    elif target == "zeta":
        (s,) = args
        values = [("Euler-Maclaurin", zeta.zeta_int(s, D))]
    elif target == "mzv":
        m, k = args
        poly = symbolic.mzv_reduce(m, k)
        note = _note(poly)
        values = [("nested series", zeta.mzv_ones(m, k, D)), ("exact reduction", poly.evaluate(D))]
    elif target == "liHalf":
        (s,) = args
        values = [("power series", zeta.polylog_half(s, D))]
    elif target == "mpl":
        b, c = args
        values = [("nested series", zeta.mpl_ones(b, c, mpf(1) / 2, D))]
    elif target == "gamma":
        values = [("harmonic limit", euler_gamma.gamma_harmonic_limit(D)),
                  ("triangle integral", polytope.gamma_T_numeric(D)),
                  ("binomial-kernel integral", euler_gamma.gamma_prop2(min(D, 20)))]
    else:
        raise UsageError(f"unknown compute target {target!r}")
    return values, note


def cmd_compute(target: str, args: list, cfg: RunConfig) -> dict:
    if target not in _COMPUTE_ARITY:
        raise UsageError(f"unknown compute target {target!r}; choose from {', '.join(_COMPUTE_ARITY)}")
    if len(args) != _COMPUTE_ARITY[target]:
        raise UsageError(f"{target} takes {_COMPUTE_ARITY[target]} integer argument(s)")
    values, note = _compute_values(target, args, cfg)
    D = cfg.precision_digits
    with workdps(D):
        spread = max((abs(a - b) for _, a in values for _, b in values), default=mpf(0))
    label = target + (f"({','.join(map(str, args))})" if args else "")
    record = {
        "target": label,
        "value": _num(values[0][1], D),
        "methods": [{"method": m, "value": _num(v, D)} for m, v in values],
        "error_estimate": _num(spread, 6) if len(values) > 1 else None,
    }
    if note:
        record["note"] = note
    return record


# ---------------------------------------------------------------------------
# reduce

_REDUCE_ARITY = {"I": 1, "mzv": 2, "K": 2, "L": 1, "M": 2}


def cmd_reduce(target: str, args: list, cfg: RunConfig, form: str = "zeta") -> dict:
    if target not in _REDUCE_ARITY:
        raise UsageError(f"unknown reduce target {target!r}; choose from {', '.join(_REDUCE_ARITY)}")
    if len(args) != _REDUCE_ARITY[target]:
        raise UsageError(f"{target} takes {_REDUCE_ARITY[target]} integer argument(s)")
    weight = {"I": lambda n: n + 2, "mzv": lambda m, k: m + k, "K": lambda m, n: m + n,
              "L": lambda m: m, "M": lambda m, n: m + n}[target](*args)
    if weight > cfg.weight_cap:
        raise DomainError(f"weight {weight} exceeds the weight cap {cfg.weight_cap}")
    if target == "I":
        poly = symbolic.i_n_reduce(*args)
    elif target == "mzv":
        poly = symbolic.mzv_reduce(*args)
    elif target == "K":
        poly, _ = combinatorics.K_symbolic(*args, weight_cap=cfg.weight_cap)
    elif target == "L":
        poly = combinatorics.L_symbolic(*args)
    else:
        poly = combinatorics.M_symbolic(*args, weight_cap=cfg.weight_cap)
    if form == "canonical":
        poly = symbolic.canonicalize(poly)
    elif form == "zeta":
        poly = symbolic.zeta_normal_form(poly)
    label = f"{target}({','.join(map(str, args))})"
    return {"target": label, "form": form, "weight": weight,
            "text": poly.to_text(), "polynomial": poly.to_json()}


# ---------------------------------------------------------------------------
# verify and asympt


def cmd_verify(suite: str, cfg: RunConfig) -> tuple[dict, bool]:
    if suite != "all" and suite not in verify.SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    names = list(verify.SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        start = time.perf_counter()
        checks += verify.run_suite(name, cfg.precision_digits, cfg.tolerance_scale, cfg.seed)
        log.info("suite %s finished in %.2f s", name, time.perf_counter() - start)
    rows = [{"suite": c.suite, "check": c.name, "pass": c.passed,
             "delta": None if c.exact else _num(c.delta, 6),
             "tolerance": None if c.exact else _num(c.tolerance, 6),
             "exact": c.exact} for c in checks]
    ok = all(c.passed for c in checks)
    return {"suite": suite, "passed": ok, "n_checks": len(rows),
            "n_failed": sum(not r["pass"] for r in rows), "checks": rows}, ok


def cmd_asympt(n_list: list, K: int, cfg: RunConfig) -> dict:
    D = cfg.precision_digits
    rows = []
    with workdps(D):
        for n in n_list:
            if n < 0:
                raise DomainError("n must be >= 0")
            exact = symbolic.i_n_reduce(n).evaluate(D) / math.factorial(n)
            approx = asymptotics.i_n_over_factorial_approx(n, K)
            a = mpf(approx.value.numerator) / approx.value.denominator
            b = approx.next_term_bound
            rows.append({"n": n, "I_n/n!": _num(exact, D), "approximation": _num(a, D),
                         "error": _num(abs(exact - a), 6),
                         "next_term_bound": _num(mpf(b.numerator) / b.denominator, 6)})
    return {"K": K, "rows": rows}


# ---------------------------------------------------------------------------
# output


def _envelope(command: str, cfg: RunConfig, body: dict) -> dict:
    return {"schema": SCHEMA, "command": command,
            "config": {"digits": cfg.precision_digits, "seed": cfg.seed,
                       "weight_cap": cfg.weight_cap, "tolerance_scale": repr(cfg.tolerance_scale)},
            **body}


def _table(report: dict) -> list[dict]:
    cmd = report["command"]
    if cmd == "compute":
        r = report["result"]
        return [{"target": r["target"], "method": m["method"], "value": m["value"]} for m in r["methods"]]
    if cmd == "reduce":
        r = report["result"]
        return [{"target": r["target"], "form": r["form"], "text": r["text"]}]
    if cmd == "verify":
        return [{k: c[k] for k in ("suite", "check", "pass", "delta", "tolerance")} for c in report["checks"]]
    return report["rows"]


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    rows = _table(report)
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    lines = []
    cmd = report["command"]
    if cmd == "compute":
        r = report["result"]
        lines.append(f"{r['target']} = {r['value']}" + (f"  ({r['note']})" if "note" in r else ""))
        for m in r["methods"]:
            lines.append(f"  {m['method']:<26} {m['value']}")
        if r["error_estimate"] is not None:
            lines.append(f"  spread between methods     {r['error_estimate']}")
    elif cmd == "reduce":
        lines.append(f"{report['result']['target']} = {report['result']['text']}")
    elif cmd == "verify":
        for c in report["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            detail = "exact" if c["exact"] else f"delta={c['delta']} tol={c['tolerance']}"
            lines.append(f"{status}  [{c['suite']}] {c['check']}  ({detail})")
        lines.append(f"{report['n_checks'] - report['n_failed']}/{report['n_checks']} checks passed")
    else:
        for r in rows:
            lines.append("  ".join(f"{k}={v}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


def _default_digits() -> int:
    raw = os.environ.get("POLYZETA_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"POLYZETA_DIGITS must be an integer, got {raw!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS,
                        help="working precision in decimal digits (default 50, or $POLYZETA_DIGITS)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="64-bit Monte Carlo seed")
    common.add_argument("--weight-cap", type=int, default=argparse.SUPPRESS,
                        help="largest weight for symbolic reductions (default 10)")
    common.add_argument("--output", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    common.add_argument("--tolerance-scale", type=float, default=argparse.SUPPRESS,
                        help="multiply every verification tolerance by this factor")

    parser = _Parser(prog="polyzeta", parents=[common],
                     description="Multiple zeta values, polytope integrals and Euler's constant.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="evaluate a constant by several methods")
    p.add_argument("target", help=", ".join(_COMPUTE_ARITY))
    p.add_argument("args", nargs="*", type=int)

    p = sub.add_parser("reduce", parents=[common], help="exact reduction to a zeta-polynomial")
    p.add_argument("target", help=", ".join(_REDUCE_ARITY))
    p.add_argument("args", nargs="*", type=int)
    form = p.add_mutually_exclusive_group()
    form.add_argument("--canonical", action="store_const", dest="form", const="canonical",
                      help="rewrite even zeta values as powers of pi")
    form.add_argument("--raw", action="store_const", dest="form", const="raw",
                      help="print the reduction as produced, without normalization")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(verify.SUITES) + ["all"])

    p = sub.add_parser("asympt", parents=[common], help="tabulate the expansion of I_n/n!")
    p.add_argument("n", nargs="*", type=int)
    p.add_argument("-K", type=int, default=4, help="number of poles used (default 4)")
    return parser


def main(argv: list | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="polyzeta: %(message)s")
    try:
        ns = build_parser().parse_args(argv)
        opts = vars(ns)
        log.setLevel(logging.INFO)
        cfg = RunConfig(
            precision_digits=opts.get("digits", None) or _default_digits(),
            seed=opts.get("seed", 0),
            weight_cap=opts.get("weight_cap", 10),
            output=opts.get("output", "json"),
            tolerance_scale=opts.get("tolerance_scale", 1.0),
        )
        start = time.perf_counter()
        code = 0
        if ns.command == "compute":
            report = _envelope("compute", cfg, {"result": cmd_compute(ns.target, ns.args, cfg)})
        elif ns.command == "reduce":
            body = cmd_reduce(ns.target, ns.args, cfg, ns.form or "zeta")
            report = _envelope("reduce", cfg, {"result": body})
        elif ns.command == "verify":
            body, ok = cmd_verify(ns.suite, cfg)
            report = _envelope("verify", cfg, body)
            code = 0 if ok else 1
        else:
            report = _envelope("asympt", cfg, cmd_asympt(ns.n, ns.K, cfg))
        log.info("%s finished in %.2f s", ns.command, time.perf_counter() - start)
    except (UsageError, DomainError) as exc:
        kind = "usage" if isinstance(exc, UsageError) else "domain"
        print(f"polyzeta: error: {exc}", file=sys.stderr)
        sys.stdout.write(json.dumps({"schema": SCHEMA, "error": {"kind": kind, "message": str(exc)}}) + "\n")
        return 2
    sys.stdout.write(render(report, cfg.output))
    return code


if __name__ == "__main__":
    sys.exit(main())
