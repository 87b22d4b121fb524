"""Command-line front end.

Exit codes: 0 success / verified, 1 verification mismatch, 2 invalid input,
3 internal identity violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__, catalog, closedform, oracle, trinomial
from .gf2ext import format_modulus, make_field, parse_element
from .powerfn import (
    PowerFunction,
    SpectrumIdentityError,
    ddt_row,
    default_threads,
    is_niho,
    locality_class,
    spectrum_of_row,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


class InvalidInput(ValueError):
    pass


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification mismatch")
        self.report = report


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict
    identities_ok: bool | None = None
    elapsed_ms: float = 0.0
    version: str = __version__
    warnings: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


# --- commands ------------------------------------------------------------------

def _resolve_power(args):
    if args.m is not None:
        if args.n is not None or args.d is not None:
            raise InvalidInput("--m cannot be combined with --n/--d")
        if args.m < 1:
            raise InvalidInput("--m must be >= 1")
        n, d, m = 2 * args.m, 3 * (1 << args.m) - 2, args.m
    elif args.n is not None and args.d is not None:
        n, d = args.n, args.d
        m = n // 2 if n % 2 == 0 else None
    else:
        raise InvalidInput("give either --m or both --n and --d")
    modulus = _parse_modulus(args.modulus)
    try:
        fs = make_field(n, modulus)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    return fs, d, m


def _parse_modulus(text):
    if text is None:
        return None
    try:
        return int(text, 0)
    except ValueError as exc:
        raise InvalidInput(f"malformed modulus {text!r}") from exc


def _threads(args):
    t = args.threads if args.threads is not None else default_threads()
    if t < 1:
        raise InvalidInput("--threads must be >= 1")
    return t


def cmd_spectrum(args):
    fs, d, m = _resolve_power(args)
    F = PowerFunction(fs, d)
    row = ddt_row(F, _threads(args))
    spec = spectrum_of_row(row, fs.order)
    local = int(row[2:].max()) if fs.order > 2 else 0
    warnings = []
    if args.m is not None and args.m % 2:
        warnings.append(trinomial.OUTSIDE_HYPOTHESIS)
    niho, j = is_niho(d, m) if m else (False, None)
    results = {
        "spectrum": spec.as_list(),
        "uniformity": spec.uniformity,
        "local_uniformity": local,
        "locality": locality_class(local),
        "niho": niho,
        "niho_j": j,
    }
    inputs = {"n": fs.n, "m": m, "d": F.d, "d_raw": d, "modulus": format_modulus(fs.modulus)}
    return RunReport("spectrum", inputs, results, spec.identities_hold(), warnings=warnings)


def _check_even_m(m):
    if m is None or m < 2 or m % 2:
        raise InvalidInput(f"--m must be an even integer >= 2, got {m}")


def cmd_predict(args):
    _check_even_m(args.m)
    m = args.m
    pred = closedform.predicted_spectrum(m)
    q = 1 << m
    entries = pred.entries()
    spec_list = [{"delta": i, "count": w} for i, w in sorted(entries.items())]
    results = {
        "spectrum": spec_list,
        "uniformity": max(entries),
        "tau": str(closedform.tau(m)),
        "n3": closedform.n3_closed(m),
        "n4": closedform.n4_closed(m),
        "N4": closedform.N4_closed(m),
    }
    ok = sum(entries.values()) == q * q and sum(i * w for i, w in entries.items()) == q * q
    inputs = {"n": 2 * m, "m": m, "d": 3 * q - 2, "modulus": None}
    return RunReport("predict", inputs, results, ok)


def _check(checks, name, expected, actual):
    checks.append({"name": name, "expected": expected, "actual": actual,
                   "ok": expected == actual})


def cmd_verify(args):
    _check_even_m(args.m)
    m = args.m
    q = 1 << m
    fs = make_field(2 * m, _parse_modulus(args.modulus))
    F = PowerFunction(fs, 3 * q - 2)
    row = ddt_row(F, _threads(args))
    spec = spectrum_of_row(row, fs.order)

    predicted = closedform.predicted_spectrum(m).entries()
    if args.inject_fault:
        predicted[0] += 1
    checks = []
    for i in sorted(set(predicted) | set(spec.entries)):
        _check(checks, f"omega_{i}", predicted.get(i, 0), spec.get(i))
    _check(checks, "delta(1,1)", q, int(row[1]))
    if m >= 4:
        _check(checks, "local_uniformity", 4, int(row[2:].max()))

    if args.deep:
        N4 = closedform.N4_closed(m)
        _check(checks, "moment_check", True, closedform.moment_check(spec, N4))
        _check(checks, "N4_from_spectrum", N4, oracle.N4_from_spectrum(spec))
        hist = trinomial.preimage_histogram(m)
        _check(checks, "trinomial_special", {"0": 3, "1": q + 1},
               {str(c): k for c, k in sorted(hist.special.items())})
        _check(checks, "trinomial_mass", q * q, hist.mass())
        if fs.order <= oracle.PAIR_MAX_ORDER:
            _check(checks, "brute_N4", N4, oracle.brute_N4(m))

    diff = [c for c in checks if not c["ok"]]
    results = {"spectrum": spec.as_list(), "checks": checks, "diff": diff,
               "verified": not diff}
    inputs = {"n": 2 * m, "m": m, "d": 3 * q - 2, "modulus": format_modulus(fs.modulus),
              "deep": bool(args.deep)}
    report = RunReport("verify", inputs, results, spec.identities_hold())
    if diff:
        raise VerificationFailed(report)
    return report


def cmd_trinomial(args):
    if args.m is None or args.m < 1:
        raise InvalidInput("--m must be >= 1")
    m = args.m
    warnings = [] if m % 2 == 0 else [trinomial.OUTSIDE_HYPOTHESIS]
    fs = make_field(2 * m)
    inputs = {"n": 2 * m, "m": m, "modulus": format_modulus(fs.modulus)}
    if args.histogram:
        hist = trinomial.preimage_histogram(m)
        results = {
            "histogram": [{"size": k, "count": v} for k, v in sorted(hist.sizes.items())],
            "special": [{"c": f"{c:#x}", "size": k} for c, k in sorted(hist.special.items())],
            "max_outside_f2": hist.max_other,
            "mass": hist.mass(),
        }
    else:
        if args.c is None:
            raise InvalidInput("give --c ELEMENT or --histogram")
        try:
            c = parse_element(fs, args.c)
        except ValueError as exc:
            raise InvalidInput(f"malformed element {args.c!r}: {exc}") from exc
        inputs["c"] = f"{c.bits:#x}"
        results = {"preimage_count": trinomial.preimage_count(c, m)}
    return RunReport("trinomial", inputs, results, warnings=warnings)


def cmd_tau(args):
    lo, hi = args.m_from, args.m_to
    if hi is None:
        hi = lo
    if lo < 1 or hi < lo:
        raise InvalidInput("need 1 <= --from <= --to")
    values = [{"m": m, "tau": str(closedform.tau(m)), "scaled": closedform.tau_scaled(m)}
              for m in range(lo, hi + 1)]
    return RunReport("tau", {"m_from": lo, "m_to": hi}, {"tau": values})


def cmd_catalog(args):
    if (args.n is None) != (args.d is None):
        raise InvalidInput("--n and --d go together")
    if args.n is None:
        results = {"entries": [e.to_dict() for e in catalog.entries()]}
    else:
        if args.n < 1:
            raise InvalidInput("--n must be >= 1")
        results = {"matches": [mt.to_dict() for mt in catalog.match(args.n, args.d)]}
    return RunReport("catalog", {"n": args.n, "d": args.d}, results)


# --- output --------------------------------------------------------------------

def _table(report):
    lines = [f"{report.command}  (ffspec {report.version}, {report.elapsed_ms:.1f} ms)"]
    for k, v in report.inputs.items():
        if v is not None:
            lines.append(f"  {k}: {v}")
    for w in report.warnings:
        lines.append(f"  warning: {w}")
    for k, v in report.results.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"  {k}:")
            for item in v:
                lines.append("    " + "  ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"  {k}: {v}")
    if report.identities_ok is not None:
        lines.append(f"  identities_ok: {report.identities_ok}")
    return "\n".join(lines) + "\n"


def _csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = None
    for key in ("checks", "spectrum", "histogram", "tau", "entries", "matches"):
        if isinstance(report.results.get(key), list) and report.results[key]:
            rows = report.results[key]
            break
    if rows is not None:
        cols = list(rows[0])
        writer.writerow(cols)
        for r in rows:
            writer.writerow([json.dumps(r[c]) if isinstance(r[c], (dict, list)) else r[c]
                             for c in cols])
    else:
        writer.writerow(["key", "value"])
        for k, v in report.results.items():
            writer.writerow([k, v])
    return buf.getvalue()


def render(report, fmt):
    if fmt == "json":
        return report.to_json() + "\n"
    if fmt == "csv":
        return _csv(report)
    return _table(report)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ffspec", description="Differential spectra of power functions over GF(2^n).")
    parser.add_argument("--version", action="version", version=f"ffspec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table", "csv"), default=None)

    p = sub.add_parser("spectrum", help="differential spectrum of x^d by exhaustive search")
    p.add_argument("--m", type=int, help="half degree; implies n = 2m, d = 3*2^m - 2")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--modulus", help="irreducible modulus as hex mask, e.g. 0x11d")
    p.add_argument("--threads", type=int)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("predict", help="closed-form spectrum of x^(3q-2)")
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="compare exhaustive and closed-form spectra")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--deep", action="store_true", help="also run moment and oracle checks")
    p.add_argument("--modulus")
    p.add_argument("--threads", type=int)
    p.add_argument("--inject-fault", action="store_true",
                   help="perturb the prediction (self-test of the mismatch path)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trinomial", help="preimages of x^2 + x^(1-q) + x^(2-q)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", help="field element as hex mask")
    p.add_argument("--histogram", action="store_true")
    common(p)
    p.set_defaults(func=cmd_trinomial)

    p = sub.add_parser("tau", help="exact values of tau_m")
    p.add_argument("--from", dest="m_from", type=int, default=1)
    p.add_argument("--to", dest="m_to", type=int)
    common(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("catalog", help="known-spectrum families")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    common(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    fmt = args.format or ("table" if stdout.isatty() else "json")
    start = time.perf_counter()
    code = EXIT_OK
    try:
        report = args.func(args)
    except InvalidInput as exc:
        print(f"ffspec: error: {exc}", file=stderr)
        return EXIT_INVALID
    except SpectrumIdentityError as exc:
        print(f"ffspec: internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except VerificationFailed as exc:
        report = exc.report
        code = EXIT_MISMATCH
    report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    for w in report.warnings:
        print(f"ffspec: warning: {w}", file=stderr)
    stdout.write(render(report, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
