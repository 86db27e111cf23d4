"""Command-line interface: compute, certify, replay and scan.

Exit codes are part of the contract so the tool can drive scripted
verification runs:

    0  success (compute: a result was established; certify: AGREE)
    2  bad arguments (parse errors, violated preconditions)
    3  resource limit hit (node budget exceeded)
    4  certify found a formula/search disagreement
    5  replay failed (bad step or terminal mismatch)

Every command supports --format json; the reports validate against
docs/cli_schema.json.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import __version__
from .cache import (
    RunRecord,
    append_record,
    cache_path,
    lookup,
    result_to_dict,
    utc_now_iso,
)
from .certificates import (
    Report,
    certify,
    closed_form,
    find_periodic_certificate,
    formula_for_pair,
)
from .coloring import Color
from .equations import EquationSyntaxError, LinearEquation, c_equation, parse_equation, q_equation
from .proofchain import (
    EventKind,
    ReplaySuccess,
    StepFailure,
    TerminalMismatch,
    chain_by_id,
    load_chain_fixtures,
    replay_chain,
)
from .solver import (
    ALGORITHM_VERSION,
    DEFAULT_NODE_BUDGET,
    Finite,
    ResourceLimitError,
    Unknown,
    compute_rado,
    default_bound,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_DISAGREE = 4
EXIT_REPLAY_FAILED = 5


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _formula_payload(e_red: LinearEquation, e_blue: LinearEquation) -> dict:
    value, reason = formula_for_pair(e_red, e_blue)
    if value is None:
        return {"applicable": False, "value": None, "infinite": False, "reason": reason}
    return {
        "applicable": True,
        "value": value.value,
        "infinite": not value.is_finite,
        "reason": None,
    }


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        e_red = parse_equation(args.red)
        e_blue = parse_equation(args.blue)
    except EquationSyntaxError as exc:
        return _fail(str(exc))
    formula = _formula_payload(e_red, e_blue)
    bound = args.bound
    if bound is None:
        bound = default_bound(formula["value"] if formula["applicable"] else None)
    if bound < 1:
        return _fail(f"bound must be >= 1, got {bound}")
    started = time.perf_counter()
    try:
        result = compute_rado(e_red, e_blue, bound, args.node_budget)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    payload = {
        "command": "compute",
        "tool_version": __version__,
        "red": e_red.text(),
        "blue": e_blue.text(),
        "bound": bound,
        "result": result_to_dict(result),
        "formula": formula,
        "elapsed_ms": elapsed_ms,
    }
    lines = [f"red: {e_red.text()}", f"blue: {e_blue.text()}", f"bound: {bound}"]
    if isinstance(result, Finite):
        lines.append(f"R2 = {result.value}")
        lines.append(f"witness[1..{result.value - 1}] = {result.witness.chars}")
    else:
        lines.append(f"no refutation up to {bound}: R2 > {bound} (UNKNOWN)")
        lines.append(f"witness[1..{bound}] = {result.witness.chars}")
    lines.append(f"nodes = {result.nodes_explored}")
    if formula["applicable"]:
        predicted = "INF" if formula["infinite"] else str(formula["value"])
        lines.append(f"formula = {predicted}")
    else:
        lines.append(f"formula not applicable: {formula['reason']}")
    _emit(payload, args.format, lines)
    return EXIT_OK


def _report_payload(report: Report, elapsed_ms: int) -> dict:
    construction = None
    if report.construction_valid is not None:
        construction = {
            "valid": report.construction_valid,
            "domain_top": report.construction_domain_top,
        }
    certificate = None
    if report.certificate is not None:
        certificate = {
            "period": report.certificate.period,
            "residues": report.certificate.as_string(),
            "restriction_valid_to": report.certificate_valid_to,
        }
    return {
        "command": "certify",
        "tool_version": __version__,
        "c": report.c,
        "q": report.q,
        "red": report.red.text(),
        "blue": report.blue.text(),
        "formula": {
            "infinite": not report.formula.is_finite,
            "value": report.formula.value,
        },
        "search": result_to_dict(report.search),
        "construction": construction,
        "certificate": certificate,
        "conclusion": result_to_dict(report.conclusion()),
        "agree": report.agree,
        "notes": list(report.notes),
        "elapsed_ms": elapsed_ms,
    }


def cmd_certify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        report = certify(args.c, args.q, args.bound, args.node_budget)
    except ValueError as exc:
        return _fail(str(exc))
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    payload = _report_payload(report, elapsed_ms)
    verdict = "AGREE" if report.agree else "DISAGREE"
    lines = [f"(c={report.c}, q={report.q}): formula = {report.formula}"]
    if isinstance(report.search, Finite):
        lines.append(
            f"search: R2 = {report.search.value}, "
            f"witness[1..{report.search.value - 1}] = {report.search.witness.chars}"
        )
    else:
        lines.append(f"search: UNKNOWN up to {report.search.bound}")
    if payload["construction"] is not None:
        ok = "valid" if report.construction_valid else "INVALID"
        lines.append(
            f"extremal coloring on [1, {report.construction_domain_top}]: {ok}"
        )
    if report.certificate is not None:
        lines.append(
            f"periodic certificate: {report.certificate} "
            f"(restriction valid to {report.certificate_valid_to})"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(verdict)
    _emit(payload, args.format, lines)
    return EXIT_OK if report.agree else EXIT_DISAGREE


def _event_dict(event) -> dict:
    return {
        "step": event.step_index,
        "triple": list(event.triple) if event.triple else None,
        "tag": event.tag,
        "position": event.position,
        "color": event.color.value,
        "kind": event.kind.value,
        "normalized": event.normalized,
    }


def cmd_replay(args: argparse.Namespace) -> int:
    try:
        chain = chain_by_id(args.case)
    except KeyError as exc:
        return _fail(exc.args[0])
    result = replay_chain(chain, args.c, args.q, args.n, strict=args.strict)
    payload: dict = {
        "command": "replay",
        "tool_version": __version__,
        "case_id": chain.case_id,
        "c": args.c,
        "q": args.q,
    }
    if isinstance(result, ReplaySuccess):
        payload.update(
            {
                "status": "success",
                "n": result.n,
                "events": [_event_dict(e) for e in result.events],
                "conflict_steps": [e.step_index for e in result.conflicts],
                "normalized_steps": list(result.normalized_steps),
                "terminal": {
                    "triple": list(result.terminal_triple),
                    "tag": result.terminal_tag,
                    "color": result.terminal_color.value,
                },
            }
        )
        lines = [f"chain {chain.case_id} at c={args.c}, q={args.q} on [1, {result.n}]"]
        for e in result.events:
            if e.step_index == 0:
                lines.append(f"root   : 1 is {e.color}")
                continue
            x, y, z = e.triple
            mark = ""
            if e.kind is EventKind.CONFLICT:
                mark = "  ** conflict: position already carried the opposite color"
            elif e.kind is EventKind.REASSERTED:
                mark = "  (re-asserted)"
            if e.normalized:
                mark += "  [normalized step]"
            lines.append(
                f"step {e.step_index:2d}: ({x},{y},{z})_{e.tag} forces "
                f"{e.position} {e.color}{mark}"
            )
        tx, ty, tz = result.terminal_triple
        lines.append(
            f"terminal: ({tx},{ty},{tz})_{result.terminal_tag} is monochromatic "
            f"{result.terminal_color}: contradiction established"
        )
        if result.normalized_steps:
            lines.append(f"normalized steps: {list(result.normalized_steps)}")
        _emit(payload, args.format, lines)
        return EXIT_OK
    if isinstance(result, StepFailure):
        payload.update(
            {
                "status": "step-failure",
                "failure": {
                    "step": result.step_index,
                    "reason": result.reason.value,
                    "detail": result.detail,
                },
            }
        )
        _emit(
            payload,
            args.format,
            [f"chain {chain.case_id} failed at step {result.step_index}: "
             f"{result.reason.value}: {result.detail}"],
        )
        return EXIT_REPLAY_FAILED
    assert isinstance(result, TerminalMismatch)
    payload.update({"status": "terminal-mismatch", "failure": {"detail": result.detail}})
    _emit(payload, args.format, [f"chain {chain.case_id}: {result.detail}"])
    return EXIT_REPLAY_FAILED


def _parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _scan_cell(
    c: int, q: int, bound: int | None, node_budget: int, use_cache: bool
) -> tuple[dict, bool]:
    """Compute one scan row, via the cache when possible; returns (row, hit)."""
    e_red, e_blue = c_equation(c), q_equation(q)
    formula = closed_form(c, q)
    cell_bound = bound if bound is not None else default_bound(formula.value)
    red_text, blue_text = e_red.text(), e_blue.text()
    rec = lookup(red_text, blue_text, cell_bound, ALGORITHM_VERSION) if use_cache else None
    hit = rec is not None
    if rec is None:
        started = time.perf_counter()
        result = compute_rado(e_red, e_blue, cell_bound, node_budget)
        millis = int((time.perf_counter() - started) * 1000)
        rec = RunRecord(
            red=red_text,
            blue=blue_text,
            bound=cell_bound,
            algorithm_version=ALGORITHM_VERSION,
            result=result_to_dict(result),
            formula=str(formula),
            created_at=utc_now_iso(),
            millis=millis,
            nodes=result.nodes_explored,
            tool_version=__version__,
        )
        if use_cache:
            append_record(rec)
    if rec.result["kind"] == "finite":
        search_text = str(rec.result["value"])
        agree = formula.is_finite and formula.value == rec.result["value"]
    else:
        search_text = f"UNKNOWN({rec.result['bound']})"
        agree = (
            not formula.is_finite
            and find_periodic_certificate(e_red, e_blue, max_period=2) is not None
        )
    row = {
        "c": c,
        "q": q,
        "formula": str(formula),
        "search": search_text,
        "agree": agree,
        "nodes": rec.nodes,
        "millis": rec.millis,
    }
    return row, hit


CSV_COLUMNS = ("c", "q", "formula", "search", "agree", "nodes", "millis")


def _write_csv(rows: list[dict], destination: str) -> None:
    def dump(fh) -> None:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [row["c"], row["q"], row["formula"], row["search"],
                 "true" if row["agree"] else "false", row["nodes"], row["millis"]]
            )

    if destination == "-":
        dump(sys.stdout)
    else:
        path = Path(destination)
        path.parent.mkdir(parents=True, exist_ok=True)
        buffer = io.StringIO()
        dump(buffer)
        path.write_text(buffer.getvalue())


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        c_lo, c_hi = _parse_range(args.c_range)
        q_lo, q_hi = _parse_range(args.q_range)
    except ValueError:
        return _fail("ranges must look like LO:HI or a single integer")
    if c_lo < 1 or q_lo < 1 or c_hi < c_lo or q_hi < q_lo:
        return _fail("ranges must be non-empty and start at 1 or above")
    rows: list[dict] = []
    hits = 0
    aborted: str | None = None
    for c in range(c_lo, c_hi + 1):
        for q in range(q_lo, q_hi + 1):
            try:
                row, hit = _scan_cell(c, q, args.bound, args.node_budget, not args.no_cache)
            except ResourceLimitError as exc:
                aborted = str(exc)
                break
            rows.append(row)
            hits += hit
        if aborted:
            break
    rows.sort(key=lambda r: (r["c"], r["q"]))
    _write_csv(rows, args.output)
    if args.output != "-":
        payload = {
            "command": "scan",
            "tool_version": __version__,
            "rows": rows,
            "output": args.output,
            "cache_hits": hits,
            "cache_path": str(cache_path()) if not args.no_cache else None,
            "aborted": aborted,
        }
        lines = [
            f"{len(rows)} rows -> {args.output} ({hits} from cache)",
            f"all agree: {all(r['agree'] for r in rows)}",
        ]
        if aborted:
            lines.append(f"aborted early: {aborted}")
        _emit(payload, args.format, lines)
    if aborted:
        print(f"resource limit: {aborted}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="offrado",
        description=(
            "Two-color off-diagonal Rado numbers for x+y+c=z (red) and "
            "x+q*y=z (blue): exhaustive search, certificates, and "
            "forcing-chain replay."
        ),
    )
    parser.add_argument("--version", action="version", version=f"offrado {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="search R2 for an arbitrary equation pair")
    p.add_argument("--red", required=True, help='red equation, e.g. "x+y+2=z"')
    p.add_argument("--blue", required=True, help='blue equation, e.g. "x+3*y=z"')
    p.add_argument("--bound", type=int, default=None,
                   help="search ceiling (default: 4x the formula value, else 64)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", help="cross-check the closed form at one (c, q)")
    p.add_argument("-c", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--bound", type=int, default=None,
                   help="scan ceiling for infinite predictions (default 64)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("replay", help="replay a bundled forcing chain")
    p.add_argument("--case", required=True,
                   help="chain label: 2.1, 2.2, 3.1.1, 3.1.2, 3.2.1 or 3.2.2")
    p.add_argument("-c", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, default=None,
                   help="domain top (default: the case's closed-form value)")
    p.add_argument("--strict", action="store_true",
                   help="fail on mid-chain color contradictions instead of "
                        "recording them")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("scan", help="grid of certify-style runs, written as CSV")
    p.add_argument("--c", dest="c_range", required=True, help="range LO:HI (or one value)")
    p.add_argument("--q", dest="q_range", required=True, help="range LO:HI (or one value)")
    p.add_argument("--bound", type=int, default=None,
                   help="per-cell search ceiling (default: auto per cell)")
    p.add_argument("--output", default="-", help="CSV destination path ('-' = stdout)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
