"""Command-line front end.

Text mode prints one tab-separated record per line; ``--format json`` prints
the same records as one JSON object per line.  Exact values are always
strings.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .cigler import MAX_ORACLE_N, cigler_qstirling, qbell_poly, qstirling_oracle, qstirling_row, verify_cigler_identity
from .classical import MAX_ENUMERATION_N, bell, enumerate_set_partitions, stirling_row
from .dobinski import MIN_MC_SAMPLES, dobinski_bell, dobinski_qbell, poisson_mc
from .exact import QPolynomial, format_rational
from .series import egf_extract_bell

DEFAULT_MAX_N = 64
Q_DOBINSKI_POINTS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(-1, 2))
SUITES = ("cigler", "egf", "dobinski", "q-dobinski", "q0-shift", "oracle")
SUITE_CAPS = {"cigler": MAX_ORACLE_N, "oracle": MAX_ENUMERATION_N}


class UsageError(Exception):
    pass


class Record:
    """One output line: ordered text fields plus a JSON object."""

    def __init__(self, kind: str, text: Sequence[str], payload: dict, status: Optional[bool] = None):
        self.kind = kind
        self.text = text
        self.payload = payload
        self.status = status

    def render(self, fmt: str) -> str:
        if fmt == "json":
            obj = {"kind": self.kind, "payload": self.payload}
            if self.status is not None:
                obj["status"] = "pass" if self.status else "fail"
            return json.dumps(obj, separators=(",", ":"))
        return "\t".join(self.text)


def _scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else format_rational(x)


def _coeff_list(p: QPolynomial) -> list[str]:
    return [_scalar(c) for c in p.coeffs]


def _verdict(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return value


def _max_n() -> int:
    raw = os.environ.get("QBELL_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"QBELL_MAX_N must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError("QBELL_MAX_N must be nonnegative")
    return value


def _check_cap(name: str, n: int, cap: Optional[int] = None) -> None:
    limit = _max_n() if cap is None else min(cap, _max_n())
    if n > limit:
        raise UsageError(f"{name}={n} exceeds the limit {limit}")


# -- table commands ---------------------------------------------------------


def cmd_bell(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--max", args.max)

    def records():
        for n in range(args.max + 1):
            b = bell(n)
            yield Record("bell", [str(n), str(b)], {"n": str(n), "value": str(b)})

    return 0, records()


def cmd_stirling(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--n", args.n)

    def records():
        for k, s in enumerate(stirling_row(args.n)):
            yield Record("stirling", [str(k), str(s)], {"n": str(args.n), "k": str(k), "value": str(s)})

    return 0, records()


def cmd_qstirling(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--n", args.n)
    coeffs = _coeff_list(cigler_qstirling(args.n, args.k))
    payload = {"n": str(args.n), "k": str(args.k), "coeffs": coeffs}
    return 0, iter([Record("qstirling", [" ".join(coeffs)], payload)])


def cmd_qbell_poly(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--n", args.n)
    coeffs = _coeff_list(qbell_poly(args.n))
    return 0, iter([Record("qbell", [" ".join(coeffs)], {"n": str(args.n), "coeffs": coeffs})])


def cmd_qbell_eval(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--n", args.n)
    value = format_rational(qbell_poly(args.n)(args.q))
    payload = {"n": str(args.n), "q": format_rational(args.q), "value": value}
    return 0, iter([Record("qbell", [value], payload)])


# -- verification suites -----------------------------------------------------


def _suite_cigler(n_max: int) -> Iterator[tuple[list[str], dict, bool]]:
    for case in verify_cigler_identity(n_max).cases:
        yield [f"n={case.n}"], {"n": str(case.n)}, case.passed


def _suite_egf(n_max: int):
    for n, value in enumerate(egf_extract_bell(n_max)):
        ok = value == bell(n)
        yield [f"n={n}", f"egf={value}", f"bell={bell(n)}"], {"n": str(n), "egf": str(value)}, ok


def _suite_dobinski(n_max: int):
    for n in range(n_max + 1):
        res = dobinski_bell(n)
        ok = res.certified_value == bell(n)
        got = "none" if res.certified_value is None else _scalar(res.certified_value)
        yield [f"n={n}", f"certified={got}"], {"n": str(n), "certified": got}, ok


def _suite_q_dobinski(n_max: int):
    for n in range(n_max + 1):
        for q0 in Q_DOBINSKI_POINTS:
            res = dobinski_qbell(n, q0)
            q_text = format_rational(q0)
            yield [f"n={n}", f"q={q_text}"], {"n": str(n), "q": q_text}, res.certified


def _suite_q0_shift(n_max: int):
    for n in range(1, n_max + 1):
        at_zero = qbell_poly(n)(0)
        ok = at_zero == bell(n - 1)
        if ok:
            text = f"B_{n}(0) = B_{n - 1} = {bell(n - 1)}"
        else:
            text = f"B_{n}(0) = {_scalar(at_zero)} != B_{n - 1} = {bell(n - 1)}"
        yield [f"n={n}", text], {"n": str(n), "qbell_at_0": _scalar(at_zero), "bell_prev": str(bell(n - 1))}, ok


def _suite_oracle(n_max: int):
    for n in range(n_max + 1):
        bell_ok = bell(n) == enumerate_set_partitions(n)
        row_ok = tuple(qstirling_oracle(n).entries) == qstirling_row(n)
        payload = {"n": str(n), "bell": _verdict(bell_ok).lower(), "qstirling": _verdict(row_ok).lower()}
        yield [f"n={n}", f"bell={_verdict(bell_ok)}", f"qstirling={_verdict(row_ok)}"], payload, bell_ok and row_ok


SUITE_RUNNERS: dict[str, Callable[[int], Iterator[tuple[list[str], dict, bool]]]] = {
    "cigler": _suite_cigler,
    "egf": _suite_egf,
    "dobinski": _suite_dobinski,
    "q-dobinski": _suite_q_dobinski,
    "q0-shift": _suite_q0_shift,
    "oracle": _suite_oracle,
}


def cmd_verify(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--max", args.max, SUITE_CAPS.get(args.suite))
    records = []
    all_ok = True
    for text, payload, ok in SUITE_RUNNERS[args.suite](args.max):
        all_ok &= ok
        records.append(Record("verify", [*text, _verdict(ok)], {"suite": args.suite, **payload}, ok))
    return (0 if all_ok else 1), iter(records)


# -- numerics ----------------------------------------------------------------


def cmd_dobinski(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--n", args.n)
    if args.width is not None and args.width <= 0:
        raise UsageError("--width must be positive")
    if args.q is None:
        width = Fraction(1, 2) if args.width is None else min(args.width, Fraction(1, 2))
        res = dobinski_bell(args.n, width)
        ok = res.certified_value == bell(args.n)
        certified = "none" if res.certified_value is None else str(res.certified_value.numerator)
        q_text = None
    else:
        res = dobinski_qbell(args.n, args.q) if args.width is None else dobinski_qbell(args.n, args.q, args.width)
        ok = res.certified
        certified = "none" if res.certified_value is None else format_rational(res.certified_value)
        q_text = format_rational(args.q)
    lo, hi = format_rational(res.enclosure.lo), format_rational(res.enclosure.hi)
    text = [f"n={args.n}"]
    payload = {"n": str(args.n)}
    if q_text is not None:
        text.append(f"q={q_text}")
        payload["q"] = q_text
    text += [f"J={res.J}", f"K={res.K}", f"lo={lo}", f"hi={hi}", f"certified={certified}"]
    payload.update({"J": str(res.J), "K": str(res.K), "lo": lo, "hi": hi, "certified": certified})
    return (0 if ok else 1), iter([Record("dobinski", text, payload, ok)])


def cmd_mc(args) -> tuple[int, Iterator[Record]]:
    _check_cap("--n", args.n)
    if args.samples < MIN_MC_SAMPLES:
        raise UsageError(f"--samples must be at least {MIN_MC_SAMPLES}")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    est = poisson_mc(args.n, args.q, args.samples, args.seed)
    target = qbell_poly(args.n)(args.q)
    z = est.z_score(target)
    ok = z <= 5
    fields = {
        "n": str(args.n),
        "q": format_rational(args.q),
        "mean": repr(est.mean),
        "std_error": repr(est.std_error),
        "samples": str(est.samples),
        "seed": str(est.seed),
        "target": format_rational(target),
        "z": repr(z),
    }
    text = [f"{k}={v}" for k, v in fields.items()]
    return (0 if ok else 1), iter([Record("mc", text, fields, ok)])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbell", description="Bell, Stirling and Cigler q-Bell numbers with exact arithmetic.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bell", help="table of Bell numbers")
    p.add_argument("--max", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("stirling", help="row n of the Stirling triangle (second kind)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("qstirling", help="coefficients of Cigler's {n,k}_q")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_qstirling)

    p = sub.add_parser("qbell-poly", help="coefficients of B_n(q)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_qbell_poly)

    p = sub.add_parser("qbell-eval", help="B_n(q) at a rational q")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--q", type=_rational_arg, required=True)
    p.set_defaults(func=cmd_qbell_eval)

    p = sub.add_parser("verify", help="run an identity/consistency suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dobinski", help="certified Dobinski / q-Dobinski enclosure")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--q", type=_rational_arg)
    p.add_argument("--width", type=_rational_arg)
    p.set_defaults(func=cmd_dobinski)

    p = sub.add_parser("mc", help="seeded Monte Carlo Poisson average")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--q", type=_rational_arg, default=Fraction(1))
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, records = args.func(args)
        out = [r.render(args.format) for r in records]
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qbell: error: {exc}", file=sys.stderr)
        return 2
    for line in out:
        print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
