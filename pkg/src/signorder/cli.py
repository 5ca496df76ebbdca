"""Command-line surface: decide, witness, enumerate, verify, certify, report.

Thin adapters over the library — no domain logic lives here.  Structured
output goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 domain rejection (bad pattern/order text, incompatible couple), 2
internal error.  The witness archive path comes from --archive or the
SIGNORDER_ARCHIVE environment variable; budget defaults may be read from a
key=value config file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__, backend
from .certificates import lemma8_corner_suite, sample_region
from .decision import Status, decide, enumerate_couples
from .patterns import Couple, IncompatibleCoupleError, ParseError, parse_order, parse_pattern
from .report import ReportConfig, build_report
from .witness import (
    ExhaustedReport,
    SearchBudget,
    WitnessArchive,
    WitnessRecord,
    search,
    verify,
)

CSV_COLUMNS = ["degree", "pattern", "order", "status", "clause", "nu", "p1", "p2",
               "witness_ref"]


def _read_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _budget_from(args, config: dict[str, str]) -> SearchBudget:
    trials = args.budget or int(config.get("max_trials", 0)) or 100_000
    seed = args.seed if args.seed is not None else (
        int(config["seed"]) if "seed" in config else None
    )
    ratios = SearchBudget.__dataclass_fields__["ladder_ratios"].default
    if "ladder_ratios" in config:
        ratios = tuple(
            Fraction(r) for r in config["ladder_ratios"].split(",") if r
        )
    return SearchBudget(max_trials=trials, ladder_ratios=ratios, seed=seed)


def _archive_from(args) -> WitnessArchive | None:
    path = getattr(args, "archive", None) or os.environ.get("SIGNORDER_ARCHIVE")
    return WitnessArchive(path) if path else None


def _emit(data, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=1, sort_keys=False))
    else:
        print(data if isinstance(data, str) else json.dumps(data, indent=1))


def _parse_couple(pattern_text: str, order_text: str) -> Couple:
    return Couple(parse_pattern(pattern_text), parse_order(order_text))


def cmd_decide(args, config) -> int:
    couple = _parse_couple(args.pattern, args.order)
    verdict = decide(couple)
    data = {"schema": "signorder.verdict@1",
            "pattern": couple.pattern.block_text,
            "order": couple.order.word}
    data.update(verdict.to_json())
    pp = couple.order.p_positions()
    data["nu"] = couple.order.nu() if len(pp) == 2 else None
    data["p1"] = pp[0] if pp else None
    data["p2"] = pp[1] if len(pp) >= 2 else None
    _emit(data, "json")
    return 0


def cmd_enumerate(args, config) -> int:
    rows = []
    for d in args.degree:
        rows.extend(enumerate_couples(d, args.shape))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            record = row.to_json()
            record["witness_ref"] = ""
            writer.writerow(record)
        sys.stdout.write(buf.getvalue())
    elif args.format == "json":
        _emit({"schema": "signorder.enumeration@1",
               "rows": [row.to_json() for row in rows]}, "json")
    else:
        for row in rows:
            r = row.to_json()
            print(f"{r['degree']} {r['pattern']} {r['order']} {r['status']}"
                  f" {r['clause']}")
    counts = {s.value: 0 for s in Status}
    for row in rows:
        counts[row.verdict.status.value] += 1
    print(f"total {len(rows)} | " + " | ".join(f"{k} {v}" for k, v in counts.items()),
          file=sys.stderr)
    return 0


def cmd_witness(args, config) -> int:
    couple = _parse_couple(args.pattern, args.order)
    archive = _archive_from(args)
    budget = _budget_from(args, config)
    result = search(couple, budget, archive)
    if archive is not None:
        archive.save()
    if isinstance(result, ExhaustedReport):
        _emit({"schema": "signorder.exhausted@1",
               "pattern": couple.pattern.block_text,
               "order": couple.order.word,
               "trials": result.trials,
               "strategies": list(result.strategies),
               "note": result.note}, "json")
        verdict = decide(couple)
        if verdict.status is Status.NON_REALIZABLE:
            print("decision agrees: NonRealizable (absence of a witness is "
                  "evidence, not proof)", file=sys.stderr)
            return 0
        print("warning: couple is not decided NonRealizable yet no witness "
              "was found within budget", file=sys.stderr)
        return 1
    _emit(result.to_json(), "json")
    return 0


def cmd_verify(args, config) -> int:
    with open(args.file, encoding="utf-8") as fh:
        record = WitnessRecord.from_json(json.load(fh))
    ok, detail = verify(record)
    _emit({"schema": "signorder.verify@1", "verified": ok, "detail": detail}, "json")
    return 0 if ok else 1


def cmd_certify(args, config) -> int:
    report = sample_region(args.lemma, args.count, args.seed or 0,
                           args.n if args.lemma != 8 else None)
    data = report.to_json()
    if args.lemma == 8:
        data["corner"] = lemma8_corner_suite(seed=args.seed or 0).to_json()
    _emit(data, "json")
    return 0


def cmd_report(args, config) -> int:
    rconfig = ReportConfig(
        seed=args.seed or 0,
        max_degree=args.max_degree,
        witness_max_degree=args.witness_max_degree,
        witness_trials=args.budget or 100_000,
        cert_count=args.cert_count,
        archive_path=getattr(args, "archive", None)
        or os.environ.get("SIGNORDER_ARCHIVE"),
    )
    text = build_report(rconfig)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"report written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signorder",
        description="Sign-pattern / moduli-order realizability toolkit",
    )
    parser.add_argument("--version", action="version",
                        version=f"signorder {__version__} ({backend.BACKEND})")
    parser.add_argument("--config", help="key=value file with budget defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide realizability of one couple")
    p.add_argument("--pattern", required=True, help='e.g. "S(2,3,1)" or "++---+"')
    p.add_argument("--order", required=True, help='e.g. "PPNNN"')
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("enumerate", help="decide all couples of a degree")
    p.add_argument("--degree", type=int, nargs="+", required=True)
    p.add_argument("--shape", choices=["mn", "mn1", "all"], default="all")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witness", help="search an exact witness for a couple")
    p.add_argument("--pattern", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--budget", type=int, help="max trials (default 100000)")
    p.add_argument("--seed", type=int)
    p.add_argument("--archive", help="witness archive JSON path")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="re-verify a stored witness record")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="sample a certificate region")
    p.add_argument("--lemma", type=int, choices=[1, 6, 7, 8], required=True)
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--count", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("report", help="full deterministic reproduction report")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--witness-max-degree", type=int, default=6)
    p.add_argument("--budget", type=int, help="witness trials per couple")
    p.add_argument("--cert-count", type=int, default=2000)
    p.add_argument("--archive")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _read_config(args.config)
        return args.func(args, config)
    except (ParseError, IncompatibleCoupleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure surface
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
