"""
Command-line entry point: python -m app.main <command> [options]

Exit codes: 0 success, 1 invalid input (body, distribution or parameters),
2 usage error.
"""

import argparse
import logging
import re
import sys
from typing import List, Optional, TextIO

from app.commands import (
    FamiliesCommand,
    MaximizeCommand,
    MeasureCommand,
    PossibilityCommand,
    SearchCommand,
)
from app.config import get_config_summary, settings
from app.monitoring import event, setup_monitoring
from app.report import FORMATS, render
from app.serialization import STDIN, load_body, load_distribution, serialize_body
from core.errors import EvidenceError
from explorer.search import MEASURES
from families.generators import FamilyKind, SymmetricFamilySpec
from possibility.distribution import default_frame

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def size_range(text: str) -> List[int]:
    """"5", "2..8" or "2-8" """
    match = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-)\s*(\d+)\s*)?", text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if high < low:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(low, high + 1))


def precision_value(text: str) -> int:
    value = int(text)
    if not 0 <= value <= 15:
        raise argparse.ArgumentTypeError("precision must lie in 0..15")
    return value


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=FORMATS, default="table", help="output format")
    output.add_argument("--precision", type=precision_value, default=settings.default_precision,
                        help="decimal places for measure values")

    parser = argparse.ArgumentParser(
        prog="evidence",
        description="Uncertainty measures for bodies of evidence and possibility distributions",
    )
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=None,
                        help="override EVIDENCE_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    measure = commands.add_parser("measure", parents=[output], help="measure a body file")
    measure.add_argument("path", nargs="?", default=STDIN, help="body document, '-' for stdin")
    measure.add_argument("--renormalize", action="store_true", help="rescale masses that do not sum to 1")

    possibility = commands.add_parser("possibility", parents=[output],
                                      help="closed forms for a possibility distribution")
    possibility.add_argument("values", nargs="+", help="decimals r1..rn, or a file with one per line")

    maximize = commands.add_parser("maximize", parents=[output], help="maximize possibilistic strife or discord")
    maximize.add_argument("--n", type=size_range, default=size_range("2..8"), help="N or A..B")
    maximize.add_argument("--objective", choices=("strife", "discord", "both"), default="strife")
    maximize.add_argument("--resolution", type=float, default=None, help="final grid step")

    families = commands.add_parser("families", parents=[output], help="strongly symmetric focal families")
    families.add_argument("kind", choices=[kind.value for kind in FamilyKind])
    families.add_argument("--n", type=positive_int, required=True, help="frame size")
    families.add_argument("--c", type=int, default=None, help="block size of the partition")
    families.add_argument("--k", type=int, default=None, help="focal set cardinality")
    families.add_argument("--uniform", action="store_true", help="emit the uniform body as a body document")

    search = commands.add_parser("search", parents=[output], help="search for subadditivity violations")
    search.add_argument("--measure", choices=list(MEASURES), default="S")
    search.add_argument("--x-size", type=positive_int, default=2)
    search.add_argument("--y-size", type=positive_int, default=2)
    search.add_argument("--trials", type=positive_int, default=1000)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--workers", type=positive_int, default=None)
    search.add_argument("--max-focal", type=positive_int, default=None,
                        help="cap on focal sets per random joint (EVIDENCE_SEARCH_MAX_FOCAL)")

    return parser


def dispatch(args: argparse.Namespace, out: TextIO) -> None:
    if args.command == "measure":
        payload = MeasureCommand().run({"body": load_body(args.path, args.renormalize)})
    elif args.command == "possibility":
        payload = PossibilityCommand().run({"distribution": load_distribution(" ".join(args.values))})
    elif args.command == "maximize":
        payload = MaximizeCommand().run({
            "n_values": args.n,
            "objective": args.objective,
            "resolution": args.resolution,
        })
    elif args.command == "families":
        spec = SymmetricFamilySpec(kind=FamilyKind(args.kind), n=args.n, c=args.c, k=args.k)
        payload = FamiliesCommand().run({"spec": spec, "frame": default_frame(args.n), "uniform": args.uniform})
        if "body" in payload:
            out.write(serialize_body(payload["body"]))
            return
    else:
        payload = SearchCommand().run({
            "measure": args.measure,
            "x_size": args.x_size,
            "y_size": args.y_size,
            "trials": args.trials,
            "seed": args.seed,
            "workers": args.workers,
            "max_focal": args.max_focal,
        })
    out.write(render(payload, args.format, args.precision))


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_monitoring(args.log_level)
    logger.debug(event("config", **get_config_summary()))
    try:
        dispatch(args, out)
    except EvidenceError as e:
        print(e.diagnostic(), file=err)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
