"""Command-line front end.

Commands: ``run <file>``, ``demo <name>``, ``classify <state>``, and
``verify-paper``; flags ``--json`` and ``--trace``.  Output is fully
deterministic (there is no randomness anywhere in the tool).  Exit codes:
0 success, 1 usage or parse error, 2 when verify-paper finds any MISMATCH
(the expected outcome, since the catalog contains known divergences).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .builders import bell_chain, class_change_circuit, ghz_circuit, teleport_circuit
from .circuit import MATCH, MATCH_UP_TO_SCALAR, MISMATCH, RunResult, instruction_text, run
from .claims import verify_claims
from .classify import (COSET_CHAIN, SUSY_PHRASE, EntanglementReport,
                       SymbolicStateError, TransitionReport, classify,
                       transition_report)
from .dsl import DslError, parse_circuit, parse_ket

_DEMOS = {
    "bell": bell_chain,
    "teleport": teleport_circuit,
    "ghz": ghz_circuit,
    "class-change": class_change_circuit,
}
_DEMO_SECTIONS = {
    "bell": "bell",
    "teleport": "teleport",
    "ghz": "ghz",
    "class-change": "interchange",
}


def _print_json(obj: object) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _claim_json(record, with_states: bool = False) -> dict:
    out = {"id": record.claim_id, "location": record.location, "verdict": record.verdict}
    if record.verdict == MATCH_UP_TO_SCALAR:
        out["scalar"] = str(record.scalar)
    if with_states:
        out["expected"] = str(record.expected)
        out["computed"] = str(record.computed)
    return out


def _steps_json(result: RunResult) -> list[dict]:
    return [{"instruction": instruction_text(s.instruction), "state": str(s.state)}
            for s in result.steps]


def _print_trace(result: RunResult, trace: bool) -> None:
    if trace:
        for step in result.steps:
            print(f"step {step.index:>2}  {instruction_text(step.instruction):<24} {step.state}")
    print(f"final: {result.final_state}")
    if result.claims:
        print("claims:")
        for record in result.claims:
            print(f"  {record.summary()}")


def _report_lines(report: EntanglementReport) -> list[str]:
    lines = [f"class: {report.label}",
             "ranks: " + ",".join(map(str, report.flattening_ranks))]
    if report.fts_rank is not None:
        lines.append(f"fts_rank: {report.fts_rank}")
    if report.hyperdeterminant is not None:
        lines.append(f"det: {report.hyperdeterminant}")
    if report.three_tangle is not None:
        lines.append(f"tau3: {report.three_tangle:.12g}")
    if report.susy_fraction is not None:
        lines.append(f"susy: {SUSY_PHRASE[report.susy_fraction]}")
    if report.size_class is not None:
        lines.append(f"size: {report.size_class.lower()}")
    lines.append(f"attractor: {'true' if report.attractor else 'false'}")
    if report.brane_note is not None:
        lines.append(f"brane: {report.brane_note}")
    if report.entropy_display is not None:
        lines.append(f"entropy: {report.entropy_display:.12g}")
    return lines


def _transition_lines(t: TransitionReport) -> list[str]:
    lines = [f"SUSY: {t.susy_change}", f"size: {t.size_change}", f"rank: {t.rank_change}"]
    if t.rank_increased:
        lines.append(f"coset: {COSET_CHAIN}")
    return lines


def _cmd_run(args: argparse.Namespace) -> int:
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        circuit = parse_circuit(text)
    except DslError as exc:
        print(f"{path}:{exc.line}:{exc.col}: {exc.message}", file=sys.stderr)
        return 1
    result = run(circuit)
    if args.json:
        _print_json({"steps": _steps_json(result),
                     "claims": [_claim_json(c) for c in result.claims]})
    else:
        _print_trace(result, args.trace)
    return 0


def _cmd_demo(args: argparse.Namespace) -> int:
    if args.name not in _DEMOS:
        known = ", ".join(sorted(_DEMOS))
        print(f"error: unknown demo name '{args.name}' (choose from {known})",
              file=sys.stderr)
        return 1
    circuit = _DEMOS[args.name]()
    result = run(circuit)
    claims = verify_claims(section=_DEMO_SECTIONS[args.name], demo_only=True)

    initial = circuit.initial_state
    final = result.final_state
    report = transition = None
    if not final.has_symbols and final.n_qubits in (2, 3):
        report = classify(final)
        transition = transition_report(initial, final)

    if args.json:
        _print_json({
            "steps": _steps_json(result),
            "claims": [_claim_json(c) for c in claims],
            "classification": None if report is None else report.to_json(),
            "transition": None if transition is None else {
                "susy": transition.susy_change,
                "size": transition.size_change,
                "rank": transition.rank_change,
                "coset": COSET_CHAIN if transition.rank_increased else None,
            },
        })
        return 0

    print(f"demo: {args.name}")
    if circuit.mode_labels:
        print("labels: " + " ".join(circuit.mode_labels))
    for step in result.steps:
        print(f"step {step.index:>2}  {instruction_text(step.instruction):<24} {step.state}")
    print("claims:")
    for record in claims:
        print(f"  {record.summary()}")
    if report is None:
        print("classification: skipped (symbolic amplitudes)")
    else:
        print("classification (final state):")
        for line in _report_lines(report):
            print(f"  {line}")
        print("transition (initial → final):")
        for line in _transition_lines(transition):
            print(f"  {line}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        state = parse_ket(args.state)
    except DslError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        report = classify(state)
    except (SymbolicStateError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _print_json(report.to_json())
    else:
        for line in _report_lines(report):
            print(line)
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    records = verify_claims()
    n_match = sum(1 for r in records if r.verdict == MATCH)
    n_scalar = sum(1 for r in records if r.verdict == MATCH_UP_TO_SCALAR)
    n_mismatch = sum(1 for r in records if r.verdict == MISMATCH)
    if args.json:
        _print_json({
            "claims": [_claim_json(r, with_states=True) for r in records],
            "summary": {"total": len(records), "match": n_match,
                        "match_up_to_scalar": n_scalar, "mismatch": n_mismatch},
        })
    else:
        for record in records:
            print(record.summary())
        print(f"summary: {len(records)} claims — {n_match} MATCH, "
              f"{n_scalar} MATCH_UP_TO_SCALAR, {n_mismatch} MISMATCH")
    return 2 if n_mismatch else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhqc",
        description="Exact simulator, identity verifier, and SLOCC classifier "
                    "for the black-hole/qubit-correspondence gate algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a .bhqc circuit file")
    p_run.add_argument("path")
    p_run.add_argument("--json", action="store_true")
    p_run.add_argument("--trace", action="store_true")
    p_run.set_defaults(func=_cmd_run)

    p_demo = sub.add_parser("demo", help="run a canned circuit with classification")
    p_demo.add_argument("name", metavar="{bell,teleport,ghz,class-change}")
    p_demo.add_argument("--json", action="store_true")
    p_demo.add_argument("--trace", action="store_true")
    p_demo.set_defaults(func=_cmd_demo)

    p_classify = sub.add_parser("classify", help="classify an inline 2- or 3-qubit state")
    p_classify.add_argument("state")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=_cmd_classify)

    p_verify = sub.add_parser("verify-paper",
                              help="re-derive the full identity catalog and report verdicts")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
