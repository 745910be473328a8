"""Command-line front end: ``cpq <command> [options]``.

Exit status is 0 on success, 1 when a verification suite reports failures
and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from fractions import Fraction

from . import combinatorics, grassmann, qscalar, spectra, sphere, uqsl
from .qscalar import DomainError, QScalar, qbinom

SPECTRUM_FIELDS = ["degree", "level", "weight", "eigenvalue_sq", "eigenvalue", "multiplicity"]
SUITES = ("scalar", "combinatorics", "grassmann", "uqsl", "spectra", "sphere")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing


def parse_q(text: str):
    """``"symbolic"``, ``"1"`` or a rational/decimal in ``(0, 1]``."""
    if text == "symbolic":
        return "symbolic"
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid q {text!r}") from None
    if not 0 < q <= 1:
        raise argparse.ArgumentTypeError("q must lie in (0, 1]")
    return 1 if q == 1 else q


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid weight {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cpq", description="Spectra of Dolbeault-Dirac operators on quantum projective spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, levels=True, N=True, q=True):
        sp.add_argument("--ell", type=_positive, required=True, help="rank l (CP^l_q)")
        if N:
            sp.add_argument("--N", type=int, default=0, help="line bundle degree")
        if q:
            sp.add_argument("--q", type=parse_q, default="symbolic",
                            help="rational in (0,1], 1, or 'symbolic' (default)")
        if levels:
            sp.add_argument("--levels", type=_nonneg, default=5, help="highest level m")
        sp.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
        sp.add_argument("--output", help="write here (atomically) instead of stdout")

    s = sub.add_parser("spectrum", help="eigenvalues of D_N")
    common(s)
    s.add_argument("--convention", choices=("auto", "general", "cp1"), default="auto",
                   help="auto uses the CP^1 normalisation at l=1")
    common(sub.add_parser("classical", help="q=1 closed-form spectrum"), q=False)
    d = sub.add_parser("decompose", help="harmonic decomposition of Omega^k_N")
    common(d)
    d.add_argument("--k", type=_nonneg, help="single form degree (default: all)")
    common(sub.add_parser("qdim", help="quantum dimensions of W_k"), levels=False, N=False)
    c = sub.add_parser("casimir", help="Casimir eigenvalue on a highest weight")
    common(c, levels=False, N=False)
    c.add_argument("--weight", type=parse_weight, required=True, help="comma-separated n_1,...,n_l")
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--ell", type=_positive, default=3)
    v.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    v.add_argument("--output")
    return p


# ---------------------------------------------------------------------------
# values


def _num(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".15g")


def _value(v: QScalar, q) -> str:
    if q == "symbolic":
        return v.serialize()
    if q == 1:
        return _num(Fraction(v.at_one()))
    return _num(v.evaluate(q))


def _root(v: QScalar, q, sign: int) -> str:
    if q == "symbolic":
        return ("" if sign > 0 else "-") + f"sqrt({v.serialize()})"
    x = float(v.at_one()) if q == 1 else v.evaluate(q)
    return _num(sign * math.sqrt(x))


def _weight_str(n) -> str:
    return " ".join(str(x) for x in n)


def _r_of(values) -> int:
    r = 2
    for v in values:
        r = r * v.r // math.gcd(r, v.r)
    return r


def _q_str(q) -> str:
    return q if isinstance(q, str) else _num(Fraction(q))


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(a):
    sp = spectra.full_spectrum(a.ell, a.N, a.levels, convention=a.convention)
    rows = []
    for x in sp.kernel:
        rows.append({"degree": x.degree, "level": x.level, "weight": _weight_str(x.weight),
                     "eigenvalue_sq": "0", "eigenvalue": "0", "multiplicity": x.multiplicity})
    for x in sp.d_lines:
        rows.append({"degree": x.degree, "level": x.level, "weight": _weight_str(x.weight),
                     "eigenvalue_sq": _value(x.value, a.q), "eigenvalue": _root(x.value, a.q, x.sign),
                     "multiplicity": x.multiplicity})
    params = {"command": "spectrum", "ell": a.ell, "N": a.N, "q": _q_str(a.q),
              "r": _r_of(x.value for x in sp.d_lines), "levels": a.levels, "convention": sp.convention}
    return params, SPECTRUM_FIELDS, rows, 0


def cmd_classical(a):
    sp = spectra.classical_spectrum(a.ell, a.N, a.levels)
    rows = [{"degree": x.degree, "level": x.level, "weight": "", "eigenvalue_sq": "0",
             "eigenvalue": "0", "multiplicity": x.multiplicity} for x in sp.kernel]
    for x in sp.d_lines:
        rows.append({"degree": x.degree, "level": x.level, "weight": "",
                     "eigenvalue_sq": _num(x.value), "eigenvalue": _num(x.sign * math.sqrt(x.value)),
                     "multiplicity": x.multiplicity})
    params = {"command": "classical", "ell": a.ell, "N": a.N, "q": "1", "r": 1, "levels": a.levels}
    return params, SPECTRUM_FIELDS, rows, 0


def cmd_decompose(a):
    ks = [a.k] if a.k is not None else range(a.ell + 1)
    rows, vals = [], []
    for k in ks:
        for b in spectra.harmonic_decomposition(a.ell, a.N, k, a.levels).blocks:
            vals.append(b.casimir)
            rows.append({"degree": k, "level": b.level, "weight": _weight_str(b.weight), "dim": b.dim,
                         "case": b.case, "casimir": _value(b.casimir, a.q)})
    params = {"command": "decompose", "ell": a.ell, "N": a.N, "q": _q_str(a.q), "r": _r_of(vals),
              "levels": a.levels}
    return params, ["degree", "level", "weight", "dim", "case", "casimir"], rows, 0


def cmd_qdim(a):
    rows = []
    for k in range(a.ell + 1):
        v = grassmann.qdim_W(a.ell, k)
        rows.append({"degree": k, "dim": math.comb(a.ell, k), "qdim": _value(v, a.q),
                     "matches_qbinom": v == qbinom(a.ell, k)})
    params = {"command": "qdim", "ell": a.ell, "q": _q_str(a.q), "r": 2}
    return params, ["degree", "dim", "qdim", "matches_qbinom"], rows, 0


def cmd_casimir(a):
    if len(a.weight) != a.ell:
        raise UsageError(f"--weight needs {a.ell} entries")
    if any(x < 0 for x in a.weight):
        raise UsageError("weight entries must be >= 0")
    hw = spectra.casimir_highest_weight(a.ell, a.weight)
    closed = spectra.casimir_eigenvalue(a.ell, a.weight)
    rows = [{"weight": _weight_str(a.weight), "dim": spectra.weyl_dim(a.ell, a.weight),
             "casimir": _value(hw, a.q), "casimir_closed_form": _value(closed, a.q)}]
    params = {"command": "casimir", "ell": a.ell, "q": _q_str(a.q), "r": _r_of([hw, closed])}
    return params, ["weight", "dim", "casimir", "casimir_closed_form"], rows, 0


def run_verification(suite: str, ell: int) -> list[tuple[str, bool, int]]:
    if suite == "scalar":
        return qscalar.run_suite()
    if suite == "combinatorics":
        return combinatorics.run_suite(ell)
    if suite == "grassmann":
        return grassmann.run_suite(ell)
    if suite == "uqsl":
        return uqsl.run_suite(ell)
    if suite == "spectra":
        return spectra.run_suite(ell)
    if suite == "sphere":
        return sphere.run_suite(ell)
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(a):
    suites = SUITES if a.suite == "all" else (a.suite,)
    rows = []
    for s in suites:
        for name, ok, residual in run_verification(s, a.ell):
            rows.append({"suite": s, "check": name, "ok": bool(ok), "residual_nnz": residual})
    failures = [f"{r['suite']}: {r['check']}" for r in rows if not r["ok"]]
    params = {"command": "verify", "suite": a.suite, "ell": a.ell, "checks": len(rows),
              "failures": failures}
    return params, ["suite", "check", "ok", "residual_nnz"], rows, 1 if failures else 0


COMMANDS = {"spectrum": cmd_spectrum, "classical": cmd_classical, "decompose": cmd_decompose,
            "qdim": cmd_qdim, "casimir": cmd_casimir, "verify": cmd_verify}


# ---------------------------------------------------------------------------
# output


def render(fmt: str, params: dict, fields: list[str], rows: list[dict]) -> str:
    if fmt == "json":
        return json.dumps({"params": params, "rows": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    head = " ".join(f"{k}={v}" for k, v in params.items() if k != "failures")
    table = [fields] + [[str(r[f]) for f in fields] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(fields))]
    lines = [head] + ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    if params.get("failures"):
        lines += ["FAILED:"] + [f"  {x}" for x in params["failures"]]
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".cpq-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params, fields, rows, status = COMMANDS[args.command](args)
    except (UsageError, DomainError) as e:
        parser.print_usage(sys.stderr)
        print(f"cpq: error: {e}", file=sys.stderr)
        return 2
    text = render(args.format, params, fields, rows)
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
