"""Command line entry point: ``blowup <command> <file> [options]``.

``<file>`` may also be ``corpus:<name>`` for a built-in problem, or ``-`` for stdin.
Exit status: 0 on success, 1 when a verdict fails or an internal check aborts,
2 for unusable input.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import (
    FittingError,
    GenerationFailure,
    InvariantViolation,
    PreconditionError,
    UnsupportedInputError,
)
from .problem import ProblemError, parse_problem
from .report import COMMANDS, corpus_names, corpus_text, emit_report, run_command

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blowup", description="Blow-up algebra invariants of an m-primary ideal.")
    ap.add_argument("command", choices=COMMANDS + ("corpus",))
    ap.add_argument("file", nargs="?", help="problem file, corpus:<name>, or - for stdin")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--pmax", type=int, default=None)
    ap.add_argument("--rmax", type=int, default=None)
    ap.add_argument("--trials", type=int, default=4)
    return ap


def _read(path: str) -> tuple:
    if path == "-":
        return sys.stdin.read(), "stdin"
    if path.startswith("corpus:"):
        name = path[len("corpus:"):]
        if name not in corpus_names():
            raise FileNotFoundError(f"no corpus problem {name!r}; available: {', '.join(corpus_names())}")
        return corpus_text(name), name
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "corpus":
        print("\n".join(corpus_names()))
        return EXIT_OK
    if args.file is None:
        print("blowup: a problem file is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        text, name = _read(args.file)
        spec = parse_problem(text, name=name)
    except (OSError, ProblemError) as exc:
        print(f"blowup: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc = run_command(args.command, spec, seed=args.seed, p_max=args.pmax, r_max=args.rmax, trials=args.trials)
    except (PreconditionError, UnsupportedInputError, GenerationFailure) as exc:
        print(f"blowup: unusable input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FittingError as exc:
        print(f"blowup: fitting failed, the sampled range was too short: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InvariantViolation as exc:
        print(f"blowup: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(emit_report(doc, "json" if args.json else "text"))
    return EXIT_OK if doc["status"] == "PASS" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
