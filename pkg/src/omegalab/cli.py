"""``omegalab`` command line.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
(including exceeded caps).
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .config import CapExceeded, load_caps
from .exactmath import NotDivisible, QuadElem
from .number_theory import llm_is_mersenne_prime, psi_periodicity_tables
from .omega import omega_ratio, omega_table, omega_top
from .psi import psi, psi_mod_fast, psi_sum
from .report import FAIL, PASS, SKIPPED, all_ok
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# scalar / point syntax

_NUM = r"[+-]?\d+(?:/\d+)?"
_QUAD = re.compile(rf"^(?:(?P<u>{_NUM})(?=[+-]|$))?(?:(?P<v>[+-]?(?:\d+(?:/\d+)?)?)r)?$")


def _rational(text: str):
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None
    return q.numerator if q.denominator == 1 else q


def _radicand(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"bad radicand {text!r}") from None


def _quad_expr(text: str, d: int) -> QuadElem:
    """``u+vr`` with ``r = sqrt(d)``; either part may be omitted."""
    m = _QUAD.match(text.replace(" ", ""))
    if not m or not text.strip():
        raise UsageError(f"bad quadratic number {text!r}; expected e.g. 1/2+3r")
    u = Fraction(m.group("u") or 0)
    v_text = m.group("v")
    if v_text is None:
        v = Fraction(0)
    elif v_text in ("", "+", "-"):
        v = Fraction(-1 if v_text == "-" else 1)
    else:
        v = Fraction(v_text)
    try:
        return QuadElem(u, v, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_scalar(text: str):
    """Integer, fraction, or ``u+vr@sqrt:d``."""
    body, sep, tail = text.partition("@sqrt:")
    if not sep:
        return _rational(body)
    return _quad_expr(body, _radicand(tail))


def parse_point(text: str) -> tuple:
    """``a,b`` or ``u,v@sqrt:d`` for ``(u, v*sqrt(d))``.

    When a coordinate contains ``r`` both coordinates are read as ``u+vr``
    expressions instead, so ``1,-1/2+1/2r@sqrt:5`` is ``(1, (sqrt(5)-1)/2)``.
    """
    body, sep, tail = text.partition("@sqrt:")
    parts = body.split(",")
    if len(parts) != 2:
        raise UsageError(f"bad point {text!r}; expected a,b or u,v@sqrt:d")
    if not sep:
        return tuple(_rational(p) for p in parts)
    d = _radicand(tail)
    if any("r" in p for p in parts):
        return tuple(_quad_expr(p, d) for p in parts)
    u, v = (_rational(p) for p in parts)
    try:
        return (u, QuadElem(0, v, d))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def render(value) -> str:
    return str(value)


# ---------------------------------------------------------------------------
# commands


def cmd_omega(args, caps, out) -> int:
    point = parse_point(args.point)
    if args.table:
        table = omega_table(point, args.n, caps=caps)
        for r, k, value in sorted(table.entries()):
            print(f"{r} {k} {render(value)}", file=out)
    elif args.top:
        print(render(omega_top(point, args.n, caps=caps)), file=out)
    else:
        print(render(omega_ratio(point, args.n, caps=caps)), file=out)
    return EXIT_OK


def cmd_psi(args, caps, out) -> int:
    a, b = parse_scalar(args.a), parse_scalar(args.b)
    if args.n < 0:
        raise UsageError("n must be non-negative")
    if args.mod is not None:
        if args.mod < 1 or not all(isinstance(x, int) for x in (a, b)):
            raise UsageError("--mod needs integer a, b and a positive modulus")
        value = psi_mod_fast((a, b), args.n, args.mod)
    elif args.sum:
        value = psi_sum((a, b), args.n)
    else:
        value = psi((a, b), args.n)
    print(render(value), file=out)
    return EXIT_OK


def cmd_mersenne(args, caps, out) -> int:
    verdict = llm_is_mersenne_prime(args.p, args.method, caps=caps)
    line = str(verdict)
    if verdict.crosscheck is not None:
        line += f" crosscheck={'ok' if verdict.crosscheck else 'MISMATCH'}"
    print(line, file=out)
    return EXIT_FAIL if verdict.crosscheck is False else EXIT_OK


def _emit(verdicts, as_json: bool, out) -> int:
    for v in verdicts:
        print(v.to_json() if as_json else v.to_text(), file=out)
    if not as_json:
        counts = {s: sum(v.status == s for v in verdicts) for s in (PASS, FAIL, SKIPPED)}
        print(f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped", file=out)
    return EXIT_OK if all_ok(verdicts) else EXIT_FAIL


def cmd_verify(args, caps, out) -> int:
    verdicts = run_suite(args.suite, args.n_max, args.k_max, caps=caps)
    return _emit(verdicts, args.json, out)


_TABLE_COLUMNS = ("1,1", "1,0", "1,-1", "1,-2", "1,2", "1,sqrt(5)")


def cmd_tables(args, caps, out) -> int:
    verdicts = psi_periodicity_tables(args.n_max, caps=caps)
    if args.json:
        return _emit([v.with_suite("tables") for v in verdicts], True, out)
    cells = {(v.params["point"], v.params["n"]): v for v in verdicts}
    rows = [["n", *_TABLE_COLUMNS]]
    for n in range(1, args.n_max + 1):
        row = [str(n)]
        for col in _TABLE_COLUMNS:
            v = cells[col, n]
            row.append(v.witness["value"] + ("" if v.ok else " !"))
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip(), file=out)
    return EXIT_OK if all_ok(verdicts) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="omegalab", description="Exact Omega/Psi sequence computations and checks.")
    parser.add_argument("--caps", metavar="NAME=V,...", help="cap overrides, e.g. omega_half=512")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("omega", help="Omega table, apex, or apex ratio at a point")
    p.add_argument("--point", required=True, help="a,b or u,v@sqrt:d")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--table", action="store_true", help="print every entry as 'r k value'")
    mode.add_argument("--top", action="store_true", help="print the apex entry")
    mode.add_argument("--ratio", action="store_true", help="print apex / falling product (default)")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("psi", help="Psi(a, b, n)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("n", type=int)
    p.add_argument("--mod", type=int, help="reduce modulo m (fast matrix power)")
    p.add_argument("--sum", action="store_true", help="use the explicit binomial sum")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("mersenne", help="primality of 2^p - 1")
    p.add_argument("p", type=int)
    p.add_argument("--method", choices=("naive", "fast"), default="fast")
    p.set_defaults(func=cmd_mersenne)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--json", action="store_true", help="JSON-lines output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="value tables at the periodic points")
    p.add_argument("--n-max", type=int, default=24)
    p.add_argument("--json", action="store_true", help="JSON-lines output")
    p.set_defaults(func=cmd_tables)
    return parser


def _glue_point(argv: list) -> list:
    # "--point -2,-5" would otherwise be read as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--point":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--point={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_point(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        caps = load_caps(args.caps)
        return args.func(args, caps, out)
    except (UsageError, CapExceeded, NotDivisible, ValueError, IndexError) as exc:
        print(f"omegalab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
