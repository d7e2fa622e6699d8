"""Command-line front end: ``latmin {eval,phase,verify,energy,green}``.

Exit codes: 0 success, 1 failed verification checks, 2 unparsable input,
3 domain error, 4 unwritable output path, 5 overlapping discs.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import re
import sys

from .assembly import SpeciesParams, check_disjoint, mix_weight
from .errors import LatminError, NotDisjoint
from .green import LatticeBasis, green_value, half_period_values
from .minimizer import minimal_assembly, phase_diagram
from .modular import SeriesBudget, UhpPoint, canonicalize, default_budget
from .objective import f_b, grad_f_b
from .verifier import SEED, all_passed, run_suite

EXIT_OK, EXIT_CHECKS, EXIT_PARSE, EXIT_DOMAIN, EXIT_PATH, EXIT_OVERLAP = 0, 1, 2, 3, 4, 5
PHASE_HEADER = ("b", "re_zstar", "im_zstar", "class", "param", "f_value")
SCHEMA = 1


class InputError(ValueError):
    pass


class OutputPathError(OSError):
    pass


_LONE_I = re.compile(r"(^|[+-])i$")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi``, ``bi``, ``i`` or ``a`` with optional spaces; ``j`` also works."""
    s = text.replace(" ", "").lower()
    if not s:
        raise InputError("empty complex literal")
    s = _LONE_I.sub(r"\g<1>1i", s).replace("i", "j")
    try:
        z = complex(s)
    except ValueError:
        raise InputError(f"cannot parse complex literal {text!r}") from None
    if not cmath.isfinite(z):
        raise InputError(f"complex literal {text!r} is not finite")
    return z


def fmt(x) -> str:
    return repr(float(x))


def fmt17(x) -> str:
    return "%.17g" % x


def fmt_complex(z: complex) -> str:
    return f"{fmt(z.real)}{'+' if z.imag >= 0 or math.isnan(z.imag) else '-'}{fmt(abs(z.imag))}i"


def _budget(args) -> SeriesBudget:
    base = default_budget()
    rel = base.rel_tol if args.rel_tol is None else args.rel_tol
    terms = base.max_terms if args.max_terms is None else args.max_terms
    return SeriesBudget(rel, terms)


def _class_param(klass, fmt_value=fmt) -> str:
    return "" if klass.param is None else fmt_value(klass.param)


def _records_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _kv_text(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}".rstrip() + "\n" for k, v in pairs)


def _json(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, allow_nan=True) + "\n"


def _single_record(command, fields, fmt_name) -> str:
    # fields: list of (key, text value, json value)
    if fmt_name == "json":
        return _json({"command": command, **{k: jv for k, _, jv in fields}})
    if fmt_name == "csv":
        return _records_csv([k for k, _, _ in fields], [[tv for _, tv, _ in fields]])
    return _kv_text([(k, tv) for k, tv, _ in fields])


def cmd_eval(args, budget) -> tuple[str, int]:
    z = parse_complex(args.z)
    pt = UhpPoint.from_complex(z)
    value = f_b(args.b, pt, budget)
    X, Y = grad_f_b(args.b, pt, budget)
    w, word = canonicalize(pt)
    fields = [
        ("b", fmt(args.b), args.b),
        ("z", fmt_complex(z), [z.real, z.imag]),
        ("f_b", fmt(value), value),
        ("X_b", fmt(X), X),
        ("Y_b", fmt(Y), Y),
        ("canonical", fmt_complex(w.z), [w.x, w.y]),
        ("word", "[" + ",".join(g.value for g in word) + "]", [g.value for g in word]),
    ]
    return _single_record("eval", fields, args.format), EXIT_OK


def cmd_phase(args, budget) -> tuple[str, int]:
    rows = phase_diagram(args.b_min, args.b_max, args.step, budget, workers=args.workers)
    table = [
        [fmt17(r.b), fmt17(r.z_star.x), fmt17(r.z_star.y), r.klass.kind.value, _class_param(r.klass, fmt17),
         fmt17(r.f_value)]
        for r in rows
    ]
    if args.format == "json":
        recs = [
            {"b": r.b, "re_zstar": r.z_star.x, "im_zstar": r.z_star.y, "class": r.klass.kind.value,
             "param": r.klass.param, "f_value": r.f_value}
            for r in rows
        ]
        return _json({"command": "phase", "rows": recs}), EXIT_OK
    if args.format == "csv":
        return _records_csv(PHASE_HEADER, table), EXIT_OK
    widths = [max(len(h), *(len(row[i]) for row in table)) for i, h in enumerate(PHASE_HEADER)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(PHASE_HEADER, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(args, budget) -> tuple[str, int]:
    results = run_suite(args.suite, budget)
    code = EXIT_OK if all_passed(results) else EXIT_CHECKS
    if args.format == "json":
        return _json({"command": "verify", "suite": args.suite, "seed": SEED, "passed": code == EXIT_OK,
                      "checks": [r.to_dict() for r in results]}), code
    if args.format == "csv":
        header = ("name", "kind", "computed", "expected", "tolerance", "margin", "passed")
        rows = [[r.name, r.kind, fmt(r.computed), fmt(r.expected), fmt(r.tolerance), fmt(r.margin),
                 "true" if r.passed else "false"] for r in results]
        return _records_csv(header, rows), code
    lines = [f"# suite={args.suite} seed={SEED}"]
    for r in results:
        status = "INFO" if r.informational else ("PASS" if r.passed else "FAIL")
        lines.append(f"{status} {r.name} computed={fmt(r.computed)} expected={fmt(r.expected)} "
                     f"tol={fmt(r.tolerance)} margin={fmt(r.margin)}")
    failed = sum(1 for r in results if not r.passed and not r.informational)
    lines.append(f"# {len(results)} checks, {failed} failed")
    return "\n".join(lines) + "\n", code


def cmd_energy(args, budget) -> tuple[str, int]:
    p = SpeciesParams(args.omega1, args.omega2, args.g11, args.g12, args.g22)
    res = minimal_assembly(p, budget)
    a = res.assembly
    b = mix_weight(p).b
    basis = a.basis
    z = basis.tau
    fields = [
        ("b", fmt(b), b),
        ("z_star", fmt_complex(z), [z.real, z.imag]),
        ("class", res.klass.kind.value, res.klass.kind.value),
        ("param", _class_param(res.klass), res.klass.param),
        ("alpha1", fmt_complex(basis.a1), [basis.a1.real, basis.a1.imag]),
        ("alpha2", fmt_complex(basis.a2), [basis.a2.real, basis.a2.imag]),
        ("r1", fmt(a.r1), a.r1),
        ("r2", fmt(a.r2), a.r2),
        ("t_alpha", fmt(res.t_alpha), res.t_alpha),
        ("energy", fmt(res.energy), res.energy),
        ("disjoint", "true" if check_disjoint(a) else "false", check_disjoint(a)),
    ]
    return _single_record("energy", fields, args.format), EXIT_OK


def cmd_green(args, budget) -> tuple[str, int]:
    tau = UhpPoint.from_complex(parse_complex(args.tau)).z
    basis = LatticeBasis.from_tau(tau)
    t1, t2 = args.point
    zeta = basis.point(t1, t2)
    g = green_value(basis, zeta, budget)
    g_mid, g1, g2, h0 = half_period_values(basis, budget)
    g_minus = green_value(basis, (basis.a1 - basis.a2) / 2, budget)
    fields = [
        ("tau", fmt_complex(tau), [tau.real, tau.imag]),
        ("point", f"{fmt(t1)} {fmt(t2)}", [t1, t2]),
        ("G", fmt(g), g),
        ("H0", fmt(h0), h0),
        ("G_mid", fmt(g_mid), g_mid),
        ("G_mid_minus", fmt(g_minus), g_minus),
        ("G_half1", fmt(g1), g1),
        ("G_half2", fmt(g2), g2),
    ]
    return _single_record("green", fields, args.format), EXIT_OK


def _check_writable(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path)) or "."
    if os.path.isdir(path) or not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise OutputPathError(f"cannot write to {path}")
    if os.path.exists(path) and not os.access(path, os.W_OK):
        raise OutputPathError(f"cannot write to {path}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputPathError(f"cannot write to {out}: {exc.strerror}") from None


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--rel-tol", type=float, default=None, help="series truncation tolerance (default 1e-14)")
    common.add_argument("--max-terms", type=int, default=None,
                        help="series term cap (default 4096, or LATMIN_BUDGET_MAXTERMS)")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="latmin", description="Minimal two-species periodic disc assemblies.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="f_b, its gradient and the canonical point")
    p.add_argument("--b", type=_finite, required=True)
    p.add_argument("--z", required=True, help="complex literal such as 0.3+1.2i")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("phase", parents=[common], help="maximizer and lattice class over a range of b")
    p.add_argument("--b-min", type=_finite, default=0.0)
    p.add_argument("--b-max", type=_finite, default=1.0)
    p.add_argument("--step", type=_finite, default=0.005)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_phase)

    p = sub.add_parser("verify", parents=[common], help="run the numerical audit")
    p.add_argument("--suite", choices=("constants", "beta", "appendix", "lemmas", "all"), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("energy", parents=[common], help="minimal assembly for given species")
    for name in ("omega1", "omega2", "g11", "g12", "g22"):
        p.add_argument(f"--{name}", type=_finite, required=True)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("green", parents=[common], help="lattice Green's function values")
    p.add_argument("--tau", required=True)
    p.add_argument("--point", nargs=2, type=_finite, required=True, metavar=("T1", "T2"),
                   help="cell coordinates of the evaluation point")
    p.set_defaults(func=cmd_green)
    return parser


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"latmin: error: {message}\n")
    return code


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    args = build_parser().parse_args(argv)
    try:
        if args.out is not None:
            _check_writable(args.out)
        budget = _budget(args)
        text, code = args.func(args, budget)
        _emit(text, args.out)
        return code
    except InputError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except OutputPathError as exc:
        return _fail(EXIT_PATH, str(exc))
    except NotDisjoint as exc:
        return _fail(EXIT_OVERLAP, f"{exc} (max_omega_scale={fmt(exc.max_omega_scale)})")
    except (LatminError, ValueError) as exc:
        return _fail(EXIT_DOMAIN, str(exc))


if __name__ == "__main__":
    sys.exit(main())
