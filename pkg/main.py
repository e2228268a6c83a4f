import argparse
import logging
import sys
from typing import List, Optional

import run_audit
import run_engine
from chains import ChainError, SupportGuardError
from ls_engine import CatExceededError, InvalidWitness, MismatchError


EXIT_INPUT = 2
EXIT_GUARD = 3

EXIT_CODES = """exit codes:
  0  success; also "cat > N" when no section exists up to --max-n
  1  negative verdict (rejected certificate, no domination, not equivalent, failed audit)
  2  input error (unreadable or malformed document, mismatched maps)
  3  resource guard (--support-guard exceeded, or indcat above --max-n)
"""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=4, help="largest Ganea level examined (default 4)")
    common.add_argument(
        "--support-guard", type=int, default=32, help="largest absolute degree allowed (default 32)"
    )
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        description="Lusternik-Schnirelmann category of rational chain complexes.",
        epilog=EXIT_CODES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("cat", "compute cat"), ("cocat", "compute cat of the dual")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("file")
        sub.add_argument("--out", help="write the result document here")
    for name, help_text in (
        ("indcat", "compute indcat with a certificate"),
        ("indcocat", "indcat of the dual"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("file")
        sub.add_argument("--emit-cert", help="write the certificate document here")

    sub = commands.add_parser("verify-cert", parents=[common], help="check a certificate against a complex")
    sub.add_argument("cert")
    sub.add_argument("target")

    sub = commands.add_parser("join", parents=[common], help="join of two maps with a common target")
    sub.add_argument("f")
    sub.add_argument("g")
    sub.add_argument("--out")

    sub = commands.add_parser("ganea", parents=[common], help="Ganea tower of a complex")
    sub.add_argument("file")
    sub.add_argument("-n", type=int, default=2, help="tower height (default 2)")
    sub.add_argument("--out")

    sub = commands.add_parser("ganea-map", parents=[common], help="Ganea maps induced by a chain map")
    sub.add_argument("map")
    sub.add_argument("-n", type=int, default=1, help="top level (default 1)")
    sub.add_argument("--out")

    for name, help_text in (("dominates", "decide X >> Y"), ("weq", "decide weak equivalence")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("x")
        sub.add_argument("y")
        sub.add_argument("--out")

    sub = commands.add_parser("dualize", parents=[common], help="linear dual of a complex")
    sub.add_argument("file")
    sub.add_argument("--out")

    sub = commands.add_parser("check-axioms", parents=[common], help="sampled audit of J1, J2, M1/M2")
    sub.add_argument("--samples", type=int, default=200)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--out", help="write the audit report here")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "check-axioms":
            return run_audit.main(args)
        return run_engine.COMMANDS[args.command](args)
    except (SupportGuardError, CatExceededError) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ChainError, MismatchError, InvalidWitness) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
