"""Batch front door: validate, run AHP, rank, probe stability, serve.

Machine-readable results go to stdout; diagnostics and warnings go to
stderr and never interleave with the data stream.  Tables display at
4 decimals; exported files keep full precision.

Exit codes:
    0   success
    2   project failed validation / could not be parsed
    3   computation failed (non-convergence, inconsistent input, ...)
    64  usage error
    66  input file cannot be opened
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import pipeline, project, sensitivity
from .errors import (
    FuzzyHoqError,
    ParseError,
    SchemaVersionUnsupported,
    ValidationError,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_COMPUTE = 3
EXIT_USAGE = 64
EXIT_NOINPUT = 66


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _fmt_tfn(t) -> str:
    return f"({_fmt(t.a)}, {_fmt(t.b)}, {_fmt(t.c)})"


def _print_table(headers: list[str], rows: list[list[str]], out=None) -> None:
    out = out or sys.stdout
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(headers)]
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(), file=out)
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip(), file=out)


def _load(path) -> project.HoqProject:
    return project.load(path)


def cmd_validate(args) -> int:
    p = _load(args.project)
    n, m = len(p.crs), len(p.trs)
    print(f"OK: {p.name!r} ({n} CRs, {m} TRs, {len(p.respondents)} respondents)")
    return EXIT_OK


def cmd_ahp(args) -> int:
    p = _load(args.project)
    result = pipeline.compute_ahp(
        p, respondent=args.respondent, method=args.method, allow_inconsistent=True
    )
    for mr in result.matrices:
        report = mr.consistency
        print(
            f"== {mr.slot}: lambda_max={_fmt(report.lambda_max)} ci={_fmt(report.ci)} "
            f"cr={_fmt(report.cr)} acceptable={'yes' if report.acceptable else 'no'}"
        )
        _print_table(
            ["element", "weight"],
            [[eid, _fmt(w)] for eid, w in zip(mr.element_ids, mr.weights)],
        )
        if not report.acceptable:
            print(f"warning: {mr.slot}: CR={report.cr:.2f} exceeds 0.10", file=sys.stderr)
    print("== global CR weights")
    _print_table(
        ["code", "weight"],
        [[code, _fmt(w)] for code, w in zip(result.cr_codes, result.global_weights)],
    )
    return EXIT_OK


def cmd_rank(args) -> int:
    p = _load(args.project)
    report = pipeline.compute_rank(p, allow_inconsistent=args.allow_inconsistent)
    if report.degenerate_normalization:
        print("warning: normalization divisor had zero lower bound; scalar fallback used", file=sys.stderr)
    _print_table(
        ["rank", "code", "RI", "RI*", "NRI*", "crisp", "label"],
        [
            [str(r.rank), r.code, _fmt_tfn(r.ri), _fmt_tfn(r.ri_star), _fmt_tfn(r.nri_star), _fmt(r.crisp), r.label]
            for r in report.ranked()
        ],
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    if args.plot_data:
        with open(args.plot_data, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["code", "crisp"])
            for code, crisp in report.plot_series():
                writer.writerow([code, repr(crisp)])
    return EXIT_OK


def cmd_sensitivity(args) -> int:
    p = _load(args.project)
    spec = sensitivity.PerturbationSpec(
        trials=args.trials,
        seed=args.seed,
        judgment_step_prob=args.judgment_step_prob,
        cell_flip_prob=args.cell_flip_prob,
        perturb_roof=args.perturb_roof,
    )
    report = sensitivity.run_sensitivity(p, spec)
    print(
        f"trials={report.trials} completed={report.completed} discarded={report.discarded}"
    )
    if report.discard_codes:
        for code, count in sorted(report.discard_codes.items()):
            print(f"warning: {count} trial(s) discarded with {code}", file=sys.stderr)
    m = len(report.tr_codes)
    rows = []
    for j in range(m):
        hist = report.histogram[j]
        modal = max(range(m), key=lambda r: (hist[r], -r)) + 1
        rows.append(
            [
                report.tr_codes[j],
                str(report.baseline_ranks[j]),
                _fmt(report.top1_frequency[j]),
                str(modal),
            ]
        )
    _print_table(["TR", "baseline", "top1_freq", "modal_rank"], rows)
    pairs = [
        (report.reversal_rate[j][k], report.tr_codes[j], report.tr_codes[k])
        for j in range(m)
        for k in range(j + 1, m)
        if report.reversal_rate[j][k] > 0
    ]
    if pairs:
        pairs.sort(key=lambda t: (-t[0], t[1], t[2]))
        print("== most frequent reversals")
        _print_table(
            ["pair", "rate"],
            [[f"{a} <-> {b}", _fmt(rate)] for rate, a, b in pairs[:10]],
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    if args.csv_prefix:
        _export_sensitivity_csv(report, args.csv_prefix)
    return EXIT_OK


def _export_sensitivity_csv(report, prefix: str) -> None:
    m = len(report.tr_codes)
    with open(f"{prefix}summary.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["code", "baseline_rank", "top1_frequency"])
        for j in range(m):
            writer.writerow(
                [report.tr_codes[j], report.baseline_ranks[j], repr(report.top1_frequency[j])]
            )
    with open(f"{prefix}histogram.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["code"] + [f"rank_{r + 1}" for r in range(m)])
        for j in range(m):
            writer.writerow([report.tr_codes[j]] + list(report.histogram[j]))
    with open(f"{prefix}reversals.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["code"] + list(report.tr_codes))
        for j in range(m):
            writer.writerow([report.tr_codes[j]] + [repr(x) for x in report.reversal_rate[j]])


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    host, _, port = args.listen.rpartition(":")
    if not host or not port.isdigit():
        print(f"error: --listen expects host:port, got {args.listen!r}", file=sys.stderr)
        return EXIT_USAGE
    uvicorn.run(create_app(data_dir=args.data_dir), host=host, port=int(port))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="fuzzyhoq", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a project file, listing every violation")
    v.add_argument("project")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("ahp", help="derive CR weights and consistency reports")
    a.add_argument("project")
    group = a.add_mutually_exclusive_group()
    group.add_argument("--respondent", help="use a single respondent's matrices")
    group.add_argument("--group", action="store_true", help="aggregate all respondents (default)")
    a.add_argument("--method", choices=["eigenvector", "rowgeomean"], default="eigenvector")
    a.set_defaults(func=cmd_ahp)

    r = sub.add_parser("rank", help="run the fuzzy HOQ pipeline and rank TRs")
    r.add_argument("project")
    r.add_argument("--out", help="write the full report as JSON")
    r.add_argument("--plot-data", help="write a (code, crisp) CSV series, descending")
    r.add_argument("--allow-inconsistent", action="store_true", help="rank even when some cr > 0.10")
    r.set_defaults(func=cmd_rank)

    s = sub.add_parser("sensitivity", help="Monte-Carlo stability of the ranking")
    s.add_argument("project")
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--judgment-step-prob", type=float, default=0.0)
    s.add_argument("--cell-flip-prob", type=float, default=0.0)
    s.add_argument("--perturb-roof", action="store_true")
    s.add_argument("--out", help="write the full report as JSON")
    s.add_argument("--csv-prefix", help="write summary/histogram/reversals CSV tables")
    s.set_defaults(func=cmd_sensitivity)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--listen", default="127.0.0.1:8651", help="host:port to bind")
    serve.add_argument("--data-dir", help="directory for write-through project persistence")
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except OSError as e:
        print(f"error: cannot open: {e}", file=sys.stderr)
        return EXIT_NOINPUT
    except ValidationError as e:
        for problem in e.problems:
            print(f"error: {problem}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, SchemaVersionUnsupported) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except FuzzyHoqError as e:
        print(f"error: [{e.code}] {e}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    raise SystemExit(main())
