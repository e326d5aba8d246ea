"""Command-line front end.

Exit codes for check/explain: 0 the interpretation is an answer set,
1 it is not, 2 error.  cross-check exits 0 on agreement, 1 on mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .core import AspError, BudgetExceededError
from .explainer import explain, explanation_payload
from .grounder import format_ground, ground
from .metaprogram import cross_check, emit_debug_program
from .parser import ParseError, format_interpretation, parse_interpretation, parse_program
from .reifier import format_facts, reify_input
from .semantics import enumerate_answer_sets


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _load_program(path: str):
    return parse_program(_read(path))


def _load_interpretation(path: str):
    return parse_interpretation(_read(path))


def _format_subst(subst: dict) -> str:
    return ", ".join(f"{v}={c}" for v, c in sorted(subst.items()))


def _print_text(payload: dict, out) -> None:
    print(payload["verdict"], file=out)
    if payload["unsatisfied"]:
        print("unsatisfied rule instances:", file=out)
        for f in payload["unsatisfied"]:
            subst = _format_subst(f["substitution"])
            with_part = f" with {subst}" if subst else ""
            print(f"  r{f['rule_index']}{with_part}: {f['instance']}", file=out)
            print(f"      from: {f['rule']}", file=out)
    if payload["unfounded_loops"]:
        print("unfounded loops:", file=out)
        for f in payload["unfounded_loops"]:
            print("  {" + ", ".join(f["literals"]) + "}", file=out)
            for entry in f["blocked"]:
                for cand in entry["candidates"]:
                    subst = _format_subst(cand["substitution"])
                    with_part = f" with {subst}" if subst else ""
                    print(
                        f"    {entry['literal']}: blocked r{cand['rule_index']}"
                        f"{with_part} (condition {cand['violated']})",
                        file=out,
                    )


def cmd_check(args) -> int:
    program = _load_program(args.program)
    interp = _load_interpretation(args.interpretation)
    result = explain(program, interp)
    print(result.verdict)
    return 0 if result.verdict == "is-answer-set" else 1


def cmd_explain(args) -> int:
    program = _load_program(args.program)
    interp = _load_interpretation(args.interpretation)
    result = explain(program, interp, minimal_only=args.minimal_loops, first=args.first)
    payload = explanation_payload(program, result)
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print_text(payload, sys.stdout)
    return 0 if result.verdict == "is-answer-set" else 1


def cmd_solve(args) -> int:
    program = _load_program(args.program)
    for interp in enumerate_answer_sets(program, limit=args.limit):
        sys.stdout.write(format_interpretation(interp))
    return 0


def cmd_ground(args) -> int:
    sys.stdout.write(format_ground(ground(_load_program(args.program))))
    return 0


def cmd_reify(args) -> int:
    program = _load_program(args.program)
    interp = _load_interpretation(args.interpretation)
    text = format_facts(reify_input(program, interp))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_emit_meta(args) -> int:
    program = _load_program(args.program)
    interp = _load_interpretation(args.interpretation)
    text = emit_debug_program(program, interp, path=args.output)
    if not args.output:
        sys.stdout.write(text)
    return 0


def cmd_cross_check(args) -> int:
    program = _load_program(args.program)
    interp = _load_interpretation(args.interpretation)
    report = cross_check(program, interp, solver_cmd=args.solver_cmd)
    print(f"native: {report.native_verdict}")
    print(f"meta:   {report.meta_verdict}")
    print(f"solver calls: {report.solver_calls}")
    if report.agree:
        print("agreement: yes")
        return 0
    print("agreement: NO")
    for m in report.mismatches:
        print(f"  mismatch: {m}")
    return 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(ui_dir=args.ui_dir, state_dir=args.state_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debug-asp",
        description="Explain why an interpretation is not an answer set of a program.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verdict only; exit 0 iff I is an answer set of P")
    p.add_argument("program")
    p.add_argument("interpretation")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("explain", help="report unsatisfied rules and unfounded loops")
    p.add_argument("program")
    p.add_argument("interpretation")
    p.add_argument("--minimal-loops", action="store_true", help="only subset-minimal unfounded loops")
    p.add_argument("--first", action="store_true", help="stop at the first finding of each kind")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_explain)

    p = sub.add_parser("solve", help="enumerate answer sets (brute force, desk scale)")
    p.add_argument("program")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("ground", help="print the ground program")
    p.add_argument("program")
    p.set_defaults(fn=cmd_ground)

    p = sub.add_parser("reify", help="emit the instance encoding as facts")
    p.add_argument("program")
    p.add_argument("interpretation")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_reify)

    p = sub.add_parser("emit-meta", help="emit the meta-program joined with the instance facts")
    p.add_argument("program")
    p.add_argument("interpretation")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_emit_meta)

    p = sub.add_parser("cross-check", help="compare the meta-program findings against the native engine")
    p.add_argument("program")
    p.add_argument("interpretation")
    p.add_argument("--solver-cmd", default=None, help='e.g. "clingo --models={models} {file}"')
    p.set_defaults(fn=cmd_cross_check)

    p = sub.add_parser("serve", help="run the local HTTP/JSON API and workbench")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8731)
    p.add_argument("--ui-dir", default=None, help="directory with the workbench static assets")
    p.add_argument("--state-dir", default=None, help="directory for saving/loading interpretations")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 2
    except AspError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
