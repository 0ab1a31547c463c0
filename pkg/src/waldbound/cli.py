"""Command-line front end.

Exit status: 0 on success (including "no real root" results), 1 when a
computation fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bound import waldschmidt_bound, lambda_poly
from .claims import all_claims
from .exact import DEFAULT_EPS, to_rat
from .monomial import (
    MonomialIdeal,
    alpha,
    delta_set,
    format_monomial,
    hf_quotient,
    hp_via_delta,
    verify_hf_leq_hp,
    waldschmidt_samples,
)
from .shape import (
    Configuration,
    SimplexShape,
    ahp_configuration,
    ahp_simplex,
    verify_star_formula,
)

COMMANDS = ("ahp", "lambda", "bound", "star-verify", "monomial", "samples", "examples")

C_HELP = ("derivative order override. It cannot be computed here; the usual "
          "choice is c = dimension of the components for disjoint flats, and "
          "c = 0 for points and for arithmetically Cohen-Macaulay curves such as crosses")


class InputError(Exception):
    """Raised for input that cannot be parsed or validated."""


def _load_input(raw: str | None, required: bool = True):
    if raw is None:
        if required:
            raise InputError("--input is required for this command")
        return {}
    text = raw
    source = "inline JSON"
    if not raw.lstrip().startswith(("{", "[")):
        path = Path(raw)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {raw}: {exc.strerror}") from None
        source = str(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {source} at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from None


def _parse(fn, data, what: str):
    try:
        return fn(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError) as exc:
        detail = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        raise InputError(f"invalid {what}: {detail}") from None


def _parse_eps(value: str | None):
    raw = value if value is not None else os.environ.get("WALD_EPS")
    if raw is None:
        return DEFAULT_EPS
    try:
        eps = to_rat(raw)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"invalid eps {raw!r}") from None
    if eps <= 0:
        raise InputError("eps must be positive")
    return eps


def _config_or_shape(data):
    if isinstance(data, dict) and "components" in data:
        return _parse(Configuration.from_json, data, "configuration")
    return _parse(SimplexShape.from_json, data, "shape")


def _emit_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# command handlers return (text to print, exit status)

def cmd_ahp(args):
    obj = _config_or_shape(_load_input(args.input))
    p = ahp_configuration(obj) if isinstance(obj, Configuration) else ahp_simplex(obj)
    if args.format == "json":
        return _dumps({"ahp": p.to_json(), "validity_threshold": str(obj.threshold)}), 0
    if args.format == "csv":
        return _emit_csv(["degree", "coefficient"], [[k, str(c)] for k, c in enumerate(p.coeffs)]), 0
    return str(p), 0


def cmd_lambda(args):
    cfg = _parse(Configuration.from_json, _load_input(args.input), "configuration")
    p = lambda_poly(cfg)
    if args.format == "json":
        return _dumps({"lambda": p.to_json()}), 0
    if args.format == "csv":
        return _emit_csv(["degree", "coefficient"], [[k, str(c)] for k, c in enumerate(p.coeffs)]), 0
    return str(p), 0


def cmd_bound(args):
    cfg = _parse(Configuration.from_json, _load_input(args.input), "configuration")
    if args.c is not None:
        cfg = _parse(lambda c: cfg.with_derivative_order(c), args.c, "derivative order")
    rep = waldschmidt_bound(cfg, args.eps)
    if args.format == "json":
        return _dumps(rep.to_json()), 0
    if args.format == "csv":
        root = rep.root
        row = [rep.derivative_order,
               "" if root is None else str(root.lo), "" if root is None else str(root.hi),
               rep.root_decimal() or "", str(rep.validity_threshold), "; ".join(rep.notes)]
        return _emit_csv(["c", "root_lo", "root_hi", "root_decimal", "validity_threshold", "notes"],
                         [row]), 0
    return rep.to_text(), 0


def cmd_star_verify(args):
    data = _load_input(args.input, required=False)
    n_max = int(data.get("n_max", args.n_max))
    s_max = int(data.get("s_max", args.s_max))
    rep = _parse(lambda _: verify_star_formula(n_max, s_max), None, "grid")
    if args.format == "json":
        return _dumps({"n_max": n_max, "s_max": s_max, "rows": [
            {"n": r.n, "c": r.c, "s": r.s, "equal": r.equal,
             "ratio": None if r.ratio is None else str(r.ratio),
             "integrated": r.integrated.to_json(), "formula": r.formula.to_json()}
            for r in rep.rows]}), 0
    if args.format == "csv":
        return _emit_csv(rep.CSV_COLUMNS, rep.csv_rows()), 0
    lines = []
    for r in rep.rows:
        tag = "equal" if r.equal else f"differs (formula/integral = {r.ratio})"
        lines.append(f"n={r.n} c={r.c} s={r.s}: {tag}")
    bad = len(rep.mismatches())
    lines.append(f"{len(rep.rows) - bad}/{len(rep.rows)} triples agree")
    return "\n".join(lines), 0


def cmd_monomial(args):
    data = _load_input(args.input)
    K = _parse(MonomialIdeal.from_json, data, "ideal")
    t_max = int(data.get("t_max", args.t_max)) if isinstance(data, dict) else args.t_max
    try:
        d = delta_set(K)
    except ValueError as exc:
        d, reason = None, str(exc)
    out = {"ideal": K.to_json(), "alpha": alpha(K) if not K.is_zero() else None,
           "hf": [hf_quotient(K, t) for t in range(t_max + 1)]}
    if d is not None:
        chk = verify_hf_leq_hp(K, t_max)
        out.update({
            "gcd": list(d.gcd), "delta": [list(e) for e in d.elements],
            "delta_degree_bound": d.degree_bound, "stabilized_at": d.stabilized_at,
            "hp": hp_via_delta(K, d).to_json(),
            "hf_leq_hp": chk.holds, "equality_from": chk.equality_from,
            "failures": list(chk.failures),
        })
    else:
        out["delta_error"] = reason
    if args.format == "json":
        return _dumps(out), 0
    if args.format == "csv":
        return _emit_csv(["t", "hf"], [[t, v] for t, v in enumerate(out["hf"])]), 0
    lines = [f"ideal   {K}", f"alpha   {out['alpha']}",
             f"HF(0..{t_max}) {' '.join(str(v) for v in out['hf'])}"]
    if d is None:
        lines.append(f"delta   {reason}")
    else:
        lines += [f"gcd     {format_monomial(d.gcd)}",
                  f"delta   {{{', '.join(format_monomial(e) for e in d.elements)}}} (#{d.size})",
                  f"HP(t)   {hp_via_delta(K, d)}",
                  f"HF <= HP on [alpha-1, {t_max}]: {'holds' if out['hf_leq_hp'] else 'FAILS'}"
                  f"; equality from t={out['equality_from']}"]
    return "\n".join(lines), 0 if d is None or out["hf_leq_hp"] else 1


def cmd_samples(args):
    data = _load_input(args.input)

    def parse(d):
        return d["primes"], (int(d["n"]) if "n" in d else None)

    primes, n = _parse(parse, data, "prime set")
    rows = _parse(lambda _: waldschmidt_samples(primes, args.m_max, n), None, "prime set")
    if args.format == "json":
        return _dumps({"samples": [{"m": m, "alpha": a, "ratio": str(r)} for m, a, r in rows]}), 0
    if args.format == "csv":
        return _emit_csv(["m", "alpha", "ratio"], [[m, a, str(r)] for m, a, r in rows]), 0
    lines = [f"m={m:<3d} alpha={a:<4d} alpha/m={r}" for m, a, r in rows]
    best = min(r for _, _, r in rows)
    lines.append(f"best ratio {best}")
    return "\n".join(lines), 0


def cmd_examples(args):
    rows = all_claims()
    status = 0 if all(r.passed for r in rows) else 1
    if args.format == "json":
        return _dumps([{"claim": r.claim, "expected": r.expected, "computed": r.computed,
                        "pass": r.passed} for r in rows]), status
    if args.format == "csv":
        return _emit_csv(["claim", "expected", "computed", "status"],
                         [[r.claim, r.expected, r.computed, "PASS" if r.passed else "FAIL"]
                          for r in rows]), status
    width = max(len(r.claim) for r in rows)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.claim:<{width}}  expected {r.expected}; "
             f"computed {r.computed}" for r in rows]
    lines.append(f"{sum(r.passed for r in rows)}/{len(rows)} claims pass")
    return "\n".join(lines), status


HANDLERS = {
    "ahp": cmd_ahp, "lambda": cmd_lambda, "bound": cmd_bound,
    "star-verify": cmd_star_verify, "monomial": cmd_monomial,
    "samples": cmd_samples, "examples": cmd_examples,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="path to a JSON file, or inline JSON")
    common.add_argument("--eps", help="root interval width, 'p/q' or decimal (env WALD_EPS)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(
        prog="waldbound",
        description="Asymptotic Hilbert polynomials and Waldschmidt constant bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ahp", parents=[common], help="aHP of a shape or configuration")
    sub.add_parser("lambda", parents=[common], help="Lambda(t) = t^n/n! - aHP(t)")
    p = sub.add_parser("bound", parents=[common], help="certified upper bound for the Waldschmidt constant")
    p.add_argument("--c", type=int, help=C_HELP)
    p = sub.add_parser("star-verify", parents=[common], help="closed star formula vs integration")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--s-max", type=int, default=8)
    p = sub.add_parser("monomial", parents=[common], help="Hilbert function and Delta set of a monomial ideal")
    p.add_argument("--t-max", type=int, default=20)
    p = sub.add_parser("samples", parents=[common], help="alpha(I^(m))/m for coordinate arrangements")
    p.add_argument("--m-max", type=int, default=5)
    sub.add_parser("examples", parents=[common], help="recompute every reproduced claim")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.eps = _parse_eps(args.eps)
        text, status = HANDLERS[args.command](args)
    except InputError as exc:
        print(f"waldbound {args.command}: input error: {exc}", file=stderr)
        return 2
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        print(f"waldbound {args.command}: computation error: {exc}", file=stderr)
        return 1
    print(text, file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
