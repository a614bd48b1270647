"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 an Unknown
verdict was encountered. With ``--json`` the report is a single JSON object
with sorted keys; its shape is described by ``schema/report.schema.json``.
Every field is deterministic except ``elapsed_seconds``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import __version__
from .families import FamilyId, distinctness, enumerate_family, verify_tables
from .galois import ClassificationGap, Form, OcticInput, classify
from .monogenic import Analysis, Status, analyze
from .polyring.zassenhaus import is_irreducible_Q
from .sieve import ParseError, ValidationError, density, parse_factored, rho_table, scan

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3
SCHEMA_VERSION = 1

_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


class InputError(ValueError):
    pass


def parse_range(text: str) -> range:
    """``lo..hi`` inclusive, e.g. ``-5..5``."""
    m = _RANGE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def form(text: str) -> Form:
    return Form.parse(text)


def family(text: str) -> FamilyId:
    return FamilyId.parse(text)


def _join_negative_ranges(argv: list[str]) -> list[str]:
    # argparse reads "-5..5" as an option flag; glue it to the preceding option.
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _RANGE.match(tok) and tok.startswith("-"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="evenoctic",
        description="Galois groups and monogenicity of x^8+ax^4+b (form F) and x^8+ax^6+bx^4+ax^2+1 (form G).",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--verbose", action="store_true", help="include certificates and local data")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def form_args(sp):
        sp.add_argument("--form", required=True, type=form, help="F (x^8+ax^4+b) or G (reciprocal)")
        sp.add_argument("--a", required=True, type=int)
        sp.add_argument("--b", required=True, type=int)

    sp = sub.add_parser("classify", parents=[common], help="Galois group label 8TX")
    form_args(sp)
    sp = sub.add_parser("check", parents=[common], help="monogenicity verdict")
    form_args(sp)
    sp.add_argument("--no-fast-paths", action="store_true", help="always run the full Dedekind test (form G)")

    sp = sub.add_parser("enumerate", parents=[common], help="first members of an infinite family")
    sp.add_argument("--family", required=True, type=family, help=", ".join(f.value for f in FamilyId))
    sp.add_argument("--count", required=True, type=_positive)

    sp = sub.add_parser("density", parents=[common], help="local density C_G of a factored gate polynomial")
    sp.add_argument("--poly", required=True, help='e.g. "(4t+1)(4t+5)"')
    sp.add_argument("--cutoff", type=int, default=1000)
    sp.add_argument("--count-x", type=int, default=None, help="also count t <= X with G(t) squarefree")
    sp.add_argument("--mode", choices=("primes", "integers"), default="primes")
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--checkpoint", default=None)

    sp = sub.add_parser("scan", parents=[common], help="grid scan over (a, b)")
    sp.add_argument("--form", required=True, type=form)
    sp.add_argument("--a-range", required=True, type=parse_range, help="lo..hi inclusive")
    sp.add_argument("--b-range", required=True, type=parse_range, help="lo..hi inclusive")
    sp.add_argument("--out", default=None, help="JSONL output, one object per (a, b)")
    sp.add_argument("--workers", type=_positive, default=1)

    sp = sub.add_parser("verify-tables", parents=[common], help="re-verify the finite classification lists")
    sp.add_argument("--none-bound", type=_positive, default=60, help="search bound for rows listed as none")
    return p


def _make_input(args) -> OcticInput:
    try:
        return OcticInput(args.form, args.a, args.b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_classify(args) -> tuple[dict, int, list[str]]:
    inp = _make_input(args)
    poly = inp.poly()
    out = {"form": inp.form.value, "a": inp.a, "b": inp.b, "polynomial": poly.to_str()}
    if not is_irreducible_Q(poly):
        out.update(irreducible=False, label=None, group=None, order=None)
        return out, EXIT_OK, [f"{poly.to_str()} is reducible; no label"]
    label = classify(inp)
    out.update(irreducible=True, label=label.tag, group=label.familiar_name, order=label.order)
    return out, EXIT_OK, [f"{poly.to_str()}: {label.tag} ({label.familiar_name}, order {label.order})"]


def _analysis_lines(an: Analysis, verbose: bool) -> list[str]:
    v = an.verdict
    lines = [f"{an.input.poly().to_str()}: {v.status.value}" + (f", {an.label.tag}" if an.label else "")]
    lines.append(f"  discriminant {v.discriminant}")
    if v.fast_path:
        lines.append(f"  decided by {v.fast_path}")
    if v.failing_primes:
        lines.append(f"  index divisible by {', '.join(map(str, v.failing_primes))}")
    if v.unknown_reason:
        lines.append(f"  unknown: {v.unknown_reason}")
    if verbose:
        for q, cert in v.certificates:
            lines.append(f"  q={q}: {json.dumps(cert.to_dict(), sort_keys=True)}")
    return lines


def cmd_check(args):
    inp = _make_input(args)
    an = analyze(inp, fast_paths=not args.no_fast_paths)
    code = EXIT_UNKNOWN if an.verdict.status is Status.UNKNOWN else EXIT_OK
    return an.to_dict(args.verbose), code, _analysis_lines(an, args.verbose)


def cmd_enumerate(args):
    members = enumerate_family(args.family, args.count)
    rep = distinctness(members)
    spec = args.family.spec
    rows = []
    lines = [f"{spec.tag}: {spec.coefficient_map}, gate {spec.gate_text}"]
    for m, d in zip(members, rep.discriminants):
        row = {
            "parameter": m.parameter,
            "a": m.input.a,
            "b": m.input.b,
            "polynomial": m.input.poly().to_str(),
            "status": m.analysis.verdict.status.value,
            "label": m.analysis.label.tag if m.analysis.label else None,
            "discriminant": str(d),
            "verified": m.verified,
            "problems": list(m.problems),
        }
        if args.verbose:
            row["verdict"] = m.analysis.verdict.to_dict(True)
        rows.append(row)
        mark = "ok" if m.verified else "FAIL " + "; ".join(m.problems)
        lines.append(f"  {m.parameter:>6}  {row['polynomial']}  {row['label']}  {mark}")
    lines.append("discriminants pairwise distinct" if rep.distinct else f"collisions: {list(rep.collisions)}")
    ok = all(m.verified for m in members) and rep.distinct
    out = {
        "family": spec.tag,
        "form": spec.form.value,
        "coefficient_map": spec.coefficient_map,
        "gate": spec.gate_text,
        "label": f"8T{spec.label}",
        "count": args.count,
        "members": rows,
        "distinct": rep.distinct,
        "collisions": [list(c) for c in rep.collisions],
        "verified": ok,
    }
    return out, EXIT_OK if ok else EXIT_FAIL, lines


def cmd_density(args):
    if args.cutoff < 2:
        raise InputError("--cutoff must be at least 2")
    try:
        G = parse_factored(args.poly)
    except (ParseError, ValidationError) as exc:
        raise InputError(str(exc)) from exc
    d = density(G, args.cutoff)
    out = {
        "poly": G.to_str(),
        "degree": G.degree,
        "cutoff": args.cutoff,
        "density": f"{d.value.numerator}/{d.value.denominator}",
        "density_decimal": d.decimal(15),
        "obstruction": d.obstruction,
    }
    lines = [
        f"G = {G.to_str()}",
        f"C_G (primes <= {args.cutoff}) = {d.decimal(15)}",
        f"local obstruction: {d.obstruction if d.obstruction is not None else 'none'}",
    ]
    if args.verbose:
        out["rho"] = [[ell, r] for ell, r in rho_table(G, min(args.cutoff, 100)) if r]
    if args.count_x is not None:
        if args.count_x < 2:
            raise InputError("--count-x must be at least 2")
        n = scan(G, args.count_x, args.mode, checkpoint=args.checkpoint, workers=args.workers)
        out["count"] = {"X": args.count_x, "mode": args.mode, "squarefree": n}
        lines.append(f"#{{t <= {args.count_x} ({args.mode}) : G(t) squarefree}} = {n}")
    return out, EXIT_OK, lines


def _scan_row(job):
    form, a, b = job
    if form is Form.EVEN_TRINOMIAL and b == 0:
        # x^4 (x^4 + a): reducible, outside the domain of OcticInput
        return {"form": form.value, "a": a, "b": b, "irreducible": False, "status": "NotIrreducible", "label": None}
    inp = OcticInput(form, a, b)
    try:
        an = analyze(inp)
    except ClassificationGap as exc:
        return {"form": form.value, "a": a, "b": b, "irreducible": True, "status": "Gap", "label": None, "error": str(exc)}
    return {
        "form": form.value,
        "a": a,
        "b": b,
        "irreducible": an.irreducible,
        "status": an.verdict.status.value,
        "label": an.label.tag if an.label else None,
    }


def cmd_scan(args):
    form = args.form
    jobs = [(form, a, b) for a in args.a_range for b in args.b_range if not (form is Form.EVEN_RECIPROCAL and a == 0)]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_scan_row, jobs, chunksize=64))
    else:
        rows = [_scan_row(j) for j in jobs]
    if args.out:
        with open(args.out, "w") as fh:
            for r in rows:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    by_status: dict[str, int] = {}
    monogenic_by_label: dict[str, int] = {}
    for r in rows:
        by_status[r["status"]] = by_status.get(r["status"], 0) + 1
        if r["status"] == Status.MONOGENIC.value:
            monogenic_by_label[r["label"]] = monogenic_by_label.get(r["label"], 0) + 1
    gaps = [[r["a"], r["b"]] for r in rows if r["status"] == "Gap"]
    out = {
        "form": form.value,
        "a_range": [args.a_range.start, args.a_range.stop - 1],
        "b_range": [args.b_range.start, args.b_range.stop - 1],
        "total": len(rows),
        "by_status": by_status,
        "monogenic_by_label": monogenic_by_label,
        "classification_gaps": gaps,
        "out": args.out,
    }
    lines = [f"{len(rows)} inputs"] + [f"  {k}: {v}" for k, v in sorted(by_status.items())]
    lines += [f"  monogenic {k}: {v}" for k, v in sorted(monogenic_by_label.items(), key=lambda kv: int(kv[0][2:]))]
    code = EXIT_FAIL if gaps else EXIT_UNKNOWN if by_status.get(Status.UNKNOWN.value) else EXIT_OK
    return out, code, lines


def cmd_verify_tables(args):
    rep = verify_tables(args.none_bound)
    rows = []
    lines = []
    for r in rep.rows:
        row = r.row
        rows.append(
            {
                "form": row.form.value,
                "a": row.a,
                "b": row.b,
                "label": row.label.tag,
                "monogenic": row.monogenic,
                "pass": r.passed,
                "detail": r.detail,
                "found": [list(x) for x in r.found],
            }
        )
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {row.describe()}  [{r.detail}]")
    lines += [f"note: {n}" for n in rep.notes]
    out = {"rows": rows, "notes": list(rep.notes), "none_bound": args.none_bound, "pass": rep.passed}
    return out, EXIT_OK if rep.passed else EXIT_FAIL, lines


COMMANDS = {
    "classify": cmd_classify,
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "density": cmd_density,
    "scan": cmd_scan,
    "verify-tables": cmd_verify_tables,
}


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_ranges(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        result, code, lines = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"evenoctic {args.command}: error: {exc}", file=stderr)
        return EXIT_INPUT
    except ClassificationGap as exc:
        print(f"evenoctic {args.command}: classification gap: {exc}", file=stderr)
        return EXIT_FAIL
    if args.json:
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "argv": argv,
            "result": result,
            "exit_code": code,
            "elapsed_seconds": round(time.perf_counter() - t0, 6),
        }
        print(render(report), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return code


def schema() -> dict:
    return json.loads(resources.files("evenoctic").joinpath("schema/report.schema.json").read_text())


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
