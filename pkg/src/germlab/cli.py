"""Command line front end: analyze corpora and emit reports.

Exit codes: 0 every check passed, 1 at least one check failed, 2 bad
usage or nothing to analyze, 3 a computation hit a resource limit.
"""

from __future__ import annotations

import argparse
import sys

from .corpus import bundled_corpus, load_corpus
from .errors import ParseError
from .report import ALL_CHECKS, RunConfig, emit_report, run_corpus
from .standard_basis import INFINITE


def _parse_checks(text: str):
    if text == "all":
        return ALL_CHECKS
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = set(names) - set(ALL_CHECKS)
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown checks {sorted(unknown)}; pick from {', '.join(ALL_CHECKS)} or all"
        )
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germlab",
        description="Invariants of isolated complete intersection singularities.",
    )
    parser.add_argument(
        "corpus",
        nargs="*",
        help="corpus files to analyze (default: the bundled classical corpus)",
    )
    parser.add_argument(
        "--field",
        type=int,
        default=0,
        metavar="P",
        help="coefficient field characteristic: 0 for the rationals, or an odd prime",
    )
    parser.add_argument("--max-t", type=int, default=30, help="largest Samuel argument scanned")
    parser.add_argument("--window", type=int, default=3, help="stabilization window size")
    parser.add_argument("--seed", type=int, default=0, help="seed for the generic draws")
    parser.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    parser.add_argument(
        "--step-budget",
        type=int,
        default=None,
        metavar="N",
        help="abort any single reduction after N steps",
    )
    parser.add_argument(
        "--checks",
        type=_parse_checks,
        default=ALL_CHECKS,
        metavar="LIST",
        help="comma separated subset of bounds,inequality,jets (default: all)",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    return parser


def _summarize(reports, stream):
    for r in reports:
        if r.error is not None:
            line = f"{r.name}: error ({r.error})"
        else:
            parts = [f"icis={str(r.icis).lower()}"]
            if r.mu is not None:
                parts.append(f"mu={r.mu}")
            parts.append(f"tau={'infinite' if r.tau == INFINITE else r.tau}")
            if r.e_crit_samuel is not None:
                parts.append(f"e_crit={r.e_crit_samuel}")
            line = f"{r.name}: {r.verdict} ({', '.join(parts)})"
        print(line, file=stream)
    counts = {"ok": 0, "fail": 0, "error": 0}
    for r in reports:
        counts[r.verdict] += 1
    print(
        f"{len(reports)} entries: {counts['ok']} ok, "
        f"{counts['fail']} failed, {counts['error']} errors",
        file=stream,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            field_char=args.field,
            max_t=args.max_t,
            window=args.window,
            seed=args.seed,
            jobs=args.jobs,
            step_budget=args.step_budget,
            checks=tuple(args.checks),
        )
    except ValueError as exc:
        parser.error(str(exc))

    try:
        if args.corpus:
            entries = []
            for path in args.corpus:
                entries.extend(load_corpus(path))
        else:
            entries = bundled_corpus()
    except FileNotFoundError as exc:
        print(f"germlab: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"germlab: {exc}", file=sys.stderr)
        return 2

    reports, code = run_corpus(entries, config)
    if code == 2:
        print("germlab: the corpus is empty", file=sys.stderr)
        return 2

    payload = emit_report(reports, config, args.format)
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    _summarize(reports, sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
