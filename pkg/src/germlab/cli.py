"""Command-line front end: analyze, resolve, compare, verify, corpus.

Output is deterministic: JSON uses a fixed key order, corpus results are
sorted by entry id regardless of worker count, and every number is exact.
Exit codes: 0 success, 1 usage error, 2 domain error, 3 corpus mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .compare import not_smoother
from .errors import CorpusFormatError, GermError
from .invariants import (
    InvariantReport,
    LawCheck,
    germ_report,
    resolution_law_checks,
    theorem_verify,
)
from .polynomials import DEFAULT_DEGREE_CAP, parse_polynomial
from .resolution import characteristic_from_sequence, resolve_branch

_EXPECTED_KEYS = ("delta", "milnor", "monotone", "multiplicity", "tjurina")
_BUNDLED_CORPORA = ("paper_examples", "branches")


# -- rendering ---------------------------------------------------------------


def _report_payload(
    report: InvariantReport,
    law_checks: Optional[list[dict]] = None,
    theorem_chain: Optional[list[int]] = None,
) -> dict:
    char = report.characteristic
    return {
        "input": str(report.input),
        "multiplicity": report.multiplicity,
        "milnor": report.milnor,
        "tjurina": report.tjurina,
        "monotone": report.monotone,
        "differential_gap": str(report.differential_gap),
        "is_branch": report.is_branch,
        "delta": report.delta,
        "puiseux_characteristic": (
            {"m": char.m, "betas": list(char.betas)} if char is not None else None
        ),
        "multiplicity_sequence": (
            list(report.multiplicity_sequence)
            if report.multiplicity_sequence is not None
            else None
        ),
        "law_checks": law_checks,
        "theorem_chain": theorem_chain,
    }


def _law_check_payload(stage: int, check: LawCheck) -> dict:
    return {
        "stage": stage,
        "multiplicity": check.multiplicity,
        "mu_before": check.mu_before,
        "tau_before": check.tau_before,
        "mu_after": check.mu_after,
        "tau_after": check.tau_after,
        "dmin_bound": check.dmin_bound,
        "mu_drop_exact": check.mu_drop_exact,
        "tau_drop_bounded": check.tau_drop_bounded,
        "monotone_increased": check.monotone_increased,
        "all_ok": check.all_ok,
    }


def _emit_json(payload: object) -> None:
    print(json.dumps(payload, indent=2))


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


def _print_report_table(
    report: InvariantReport,
    law_checks: Optional[list[LawCheck]] = None,
    theorem_chain: Optional[list[int]] = None,
) -> None:
    char = report.characteristic
    rows = [
        ("input", str(report.input)),
        ("multiplicity", str(report.multiplicity)),
        ("milnor", str(report.milnor)),
        ("tjurina", str(report.tjurina)),
        ("monotone", str(report.monotone)),
        ("differential_gap", str(report.differential_gap)),
        ("is_branch", _bool_str(report.is_branch)),
        ("delta", "-" if report.delta is None else str(report.delta)),
        ("puiseux_characteristic", str(char) if char is not None else "-"),
        (
            "multiplicity_sequence",
            "-"
            if report.multiplicity_sequence is None
            else str(list(report.multiplicity_sequence)),
        ),
    ]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")
    if law_checks is not None:
        for stage, check in enumerate(law_checks):
            print(
                f"law check stage {stage}: m={check.multiplicity}"
                f" mu {check.mu_before}->{check.mu_after}"
                f" tau {check.tau_before}->{check.tau_after}"
                f" dmin_bound={check.dmin_bound}"
                f" mu_drop_exact={_bool_str(check.mu_drop_exact)}"
                f" tau_drop_bounded={_bool_str(check.tau_drop_bounded)}"
                f" monotone_increased={_bool_str(check.monotone_increased)}"
            )
    if theorem_chain is not None:
        print(f"theorem chain: {theorem_chain}")


# -- corpus handling ---------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    """One line of a corpus file, already parsed."""

    id: str
    polynomial: str
    expected: dict[str, int]
    line: int


def _read_corpus_text(path: str) -> str:
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    if path in _BUNDLED_CORPORA:
        return (
            resources.files("germlab.data").joinpath(f"{path}.corpus").read_text("utf-8")
        )
    raise FileNotFoundError(f"no such corpus file or bundled corpus: {path}")


def _parse_corpus(text: str) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = raw.split("\t")
        if len(parts) not in (2, 3):
            raise CorpusFormatError(
                f"line {lineno}: expected 'id<TAB>polynomial[<TAB>key=value,...]'"
            )
        entry_id = parts[0].strip()
        poly_text = parts[1].strip()
        if not entry_id or not poly_text:
            raise CorpusFormatError(f"line {lineno}: empty id or polynomial field")
        if entry_id in seen:
            raise CorpusFormatError(f"line {lineno}: duplicate id {entry_id!r}")
        seen.add(entry_id)
        expected: dict[str, int] = {}
        if len(parts) == 3 and parts[2].strip():
            for item in parts[2].split(","):
                key, sep, value = item.partition("=")
                key, value = key.strip(), value.strip()
                if not sep or not key or not value:
                    raise CorpusFormatError(
                        f"line {lineno}: malformed expectation {item.strip()!r}"
                    )
                if key not in _EXPECTED_KEYS:
                    raise CorpusFormatError(
                        f"line {lineno}: unknown invariant name {key!r}"
                    )
                try:
                    expected[key] = int(value)
                except ValueError:
                    raise CorpusFormatError(
                        f"line {lineno}: expected an integer for {key!r}, got {value!r}"
                    ) from None
        entries.append(CorpusEntry(entry_id, poly_text, expected, lineno))
    return entries


def _run_corpus_entry(entry: CorpusEntry, max_degree: int) -> dict:
    result = {
        "id": entry.id,
        "polynomial": entry.polynomial,
        "report": None,
        "error": None,
        "mismatches": [],
    }
    try:
        poly = parse_polynomial(entry.polynomial, max_degree=max_degree)
        report = germ_report(poly)
    except GermError as exc:
        result["error"] = f"line {entry.line}: {exc}"
        return result
    payload = _report_payload(report)
    result["report"] = payload
    for key in sorted(entry.expected):
        actual = payload[key]
        if actual != entry.expected[key]:
            shown = "null" if actual is None else str(actual)
            result["mismatches"].append(
                f"{key}: expected {entry.expected[key]}, got {shown}"
            )
    return result


# -- subcommands -------------------------------------------------------------


def _cmd_analyze(args: argparse.Namespace) -> int:
    poly = parse_polynomial(args.polynomial, max_degree=args.max_degree)
    report = germ_report(poly)
    if args.format == "json":
        _emit_json(_report_payload(report))
    else:
        _print_report_table(report)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    poly = parse_polynomial(args.polynomial, max_degree=args.max_degree)
    report = germ_report(poly)
    checks = resolution_law_checks(poly)
    chain = theorem_verify(poly)
    if args.format == "json":
        payload = _report_payload(
            report,
            law_checks=[_law_check_payload(i, c) for i, c in enumerate(checks)],
            theorem_chain=chain,
        )
        _emit_json(payload)
    else:
        _print_report_table(report, law_checks=checks, theorem_chain=chain)
    return 0


def _cmd_resolve(args: argparse.Namespace) -> int:
    poly = parse_polynomial(args.polynomial, max_degree=args.max_degree)
    sequence = resolve_branch(poly)
    char = characteristic_from_sequence(sequence)
    chain = theorem_verify(poly)
    if args.format == "json":
        payload = {
            "input": str(poly),
            "steps": [
                {
                    "chart": step.chart,
                    "direction": str(step.direction),
                    "multiplicity": step.multiplicity_before,
                    "strict_transform": str(step.strict_transform),
                }
                for step in sequence.steps
            ],
            "multiplicity_sequence": list(sequence.multiplicity_sequence),
            "puiseux_characteristic": {"m": char.m, "betas": list(char.betas)},
            "final_smooth": str(sequence.final_smooth),
            "theorem_chain": chain,
        }
        _emit_json(payload)
    else:
        print(f"input: {poly}")
        for number, step in enumerate(sequence.steps, 1):
            print(
                f"step {number}: chart={step.chart}"
                f" direction=\"{step.direction}\""
                f" multiplicity={step.multiplicity_before}"
                f" strict_transform=\"{step.strict_transform}\""
            )
        print(f"multiplicity sequence: {list(sequence.multiplicity_sequence)}")
        print(f"puiseux characteristic: {char}")
        print(f"final smooth germ: {sequence.final_smooth}")
        print(f"theorem chain: {chain}")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    left = parse_polynomial(args.left, max_degree=args.max_degree)
    right = parse_polynomial(args.right, max_degree=args.max_degree)
    verdict = not_smoother(left, right)
    if args.format == "json":
        payload = {
            "left": _report_payload(verdict.left),
            "right": _report_payload(verdict.right),
            "verdict": verdict.verdict,
            "reasons": list(verdict.reasons),
        }
        _emit_json(payload)
    else:
        print(f"verdict: {verdict.verdict}")
        for reason in verdict.reasons:
            print(f"reason: {reason}")
        print(
            f"left:  {verdict.left.input}"
            f" (milnor={verdict.left.milnor}, tjurina={verdict.left.tjurina},"
            f" monotone={verdict.left.monotone})"
        )
        print(
            f"right: {verdict.right.input}"
            f" (milnor={verdict.right.milnor}, tjurina={verdict.right.tjurina},"
            f" monotone={verdict.right.monotone})"
        )
    return 0


def _cmd_corpus(args: argparse.Namespace) -> int:
    entries = _parse_corpus(_read_corpus_text(args.path))
    jobs = max(1, args.jobs)
    if jobs == 1 or len(entries) <= 1:
        results = [_run_corpus_entry(entry, args.max_degree) for entry in entries]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(lambda e: _run_corpus_entry(e, args.max_degree), entries)
            )
    results.sort(key=lambda r: r["id"])
    errors = [r for r in results if r["error"] is not None]
    mismatched = [r for r in results if r["mismatches"]]
    if args.format == "json":
        payload = {
            "entries": results,
            "summary": {
                "total": len(results),
                "errors": len(errors),
                "mismatched": len(mismatched),
            },
        }
        _emit_json(payload)
    else:
        if results:
            width = max(len(r["id"]) for r in results)
            for r in results:
                if r["error"] is not None:
                    status, notes = "ERROR", r["error"]
                elif r["mismatches"]:
                    status, notes = "MISMATCH", "; ".join(r["mismatches"])
                else:
                    status, notes = "ok", ""
                line = f"{r['id']:<{width}}  {status}"
                print(f"{line}  {notes}" if notes else line)
        print(
            f"summary: {len(results)} entries,"
            f" {len(errors)} errors, {len(mismatched)} mismatches"
        )
    if errors:
        return 2
    if mismatched:
        return 3
    return 0


# -- argument parsing --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2 (2 is for domain errors)
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="germlab",
        description="Exact invariants and blowup resolutions of plane curve germs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "table"), default="table", help="output format"
    )
    common.add_argument(
        "--max-degree",
        type=int,
        default=DEFAULT_DEGREE_CAP,
        metavar="D",
        help="reject inputs of total degree above D",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_analyze = sub.add_parser(
        "analyze", parents=[common], help="invariants of one germ"
    )
    p_analyze.add_argument("polynomial")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_resolve = sub.add_parser(
        "resolve", parents=[common], help="blow up a branch until smooth"
    )
    p_resolve.add_argument("polynomial")
    p_resolve.set_defaults(func=_cmd_resolve)

    p_compare = sub.add_parser(
        "compare",
        parents=[common],
        help="try to refute 'left is smoother than right'",
    )
    p_compare.add_argument("left")
    p_compare.add_argument("right")
    p_compare.set_defaults(func=_cmd_compare)

    p_verify = sub.add_parser(
        "verify",
        parents=[common],
        help="analyze plus per-blowup law checks and the monotone chain",
    )
    p_verify.add_argument("polynomial")
    p_verify.set_defaults(func=_cmd_verify)

    p_corpus = sub.add_parser(
        "corpus", parents=[common], help="run a corpus file and check expectations"
    )
    p_corpus.add_argument("path", help="corpus file path or bundled corpus name")
    p_corpus.add_argument(
        "--jobs", type=int, default=1, metavar="N", help="worker threads"
    )
    p_corpus.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GermError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
