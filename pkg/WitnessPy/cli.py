"""Module contains the `witnesspy` command line entrypoint.

Exit codes are a stable contract: 0 success, 1 internal or IO failure,
2 invalid arguments, 3 certification or verification failure.
"""
import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from prompt_toolkit.validation import ValidationError, Validator

from WitnessPy.enum import (
    WITNESSPY_EXIT_FAILURE,
    WITNESSPY_EXIT_INVALID,
    WITNESSPY_EXIT_OK,
    WITNESSPY_EXIT_REJECTED,
    WITNESSPY_FACTOR_A,
    WITNESSPY_FACTORS,
    WITNESSPY_MIN_SAMPLES,
    WITNESSPY_SCAN_HEADER,
)
from WitnessPy.exact.certificate import certify_gamma_three_quarters
from WitnessPy.exact.rational import to_rational
from WitnessPy.exceptions import InvalidArgument, OutputError, WitnessPyError
from WitnessPy.optimality import certify_optimality
from WitnessPy.realignment import entanglement_margin, scan
from WitnessPy.utils import color_print, get_style
from WitnessPy.validator import (
    IntegerValidator,
    NumberValidator,
    RationalValidator,
    WritablePathValidator,
    validate_text,
)
from WitnessPy.witness import (
    BellFamilyParams,
    build_witness,
    spa,
    witness_clusters,
    witness_spectrum_check,
)

__all__ = ["main", "build_parser", "command_mapping"]

logger = logging.getLogger(__name__)

_gamma_validator = NumberValidator(
    message="gamma needs to be a number in (0, 1)", min_allowed=0, max_allowed=1
)

# per command: (argument, validator) pairs checked before dispatch
validation_mapping: Dict[str, List[Tuple[str, Validator]]] = {
    "report": [("gamma", _gamma_validator)],
    "witness": [("gamma", _gamma_validator)],
    "scan": [
        ("gamma_from", _gamma_validator),
        ("gamma_to", _gamma_validator),
        ("steps", IntegerValidator("steps needs to be an integer >= 2", min_allowed=2)),
        ("seed", IntegerValidator("seed needs to be a nonnegative integer")),
        ("workers", IntegerValidator("workers needs to be a positive integer", min_allowed=1)),
    ],
    "optimality": [
        ("gamma", _gamma_validator),
        (
            "samples",
            IntegerValidator(
                f"samples needs to be an integer >= {WITNESSPY_MIN_SAMPLES}",
                min_allowed=WITNESSPY_MIN_SAMPLES,
            ),
        ),
        ("seed", IntegerValidator("seed needs to be a nonnegative integer")),
        ("workers", IntegerValidator("workers needs to be a positive integer", min_allowed=1)),
    ],
    "certify": [("lambda_prime", RationalValidator("lambda-prime needs to be a rational literal"))],
}


def configure_logging() -> None:
    """Attach a stderr handler at the level named by `WITNESSPY_LOG_LEVEL` (default `WARNING`)."""
    level = os.getenv("WITNESSPY_LOG_LEVEL", "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        level = "WARNING"
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        validate_text(WritablePathValidator(), out)
        with open(out, "w", newline="") as file:
            file.write(text)
    except (ValidationError, OSError) as error:
        raise OutputError(f"cannot write {out}: {getattr(error, 'message', error)}")


def _dump_json(payload: Dict[str, Any], out: Optional[str]) -> None:
    _write_output(json.dumps(payload, indent=2) + "\n", out)


def _summary(out: Optional[str], label: str, value: str, style_class: str) -> None:
    if out is None:
        return
    color_print(
        [
            ("class:label", f"{label} "),
            (f"class:{style_class}", value),
            ("class:label", " -> "),
            ("class:path", out),
        ],
        style=get_style().dict,
    )


def cmd_report(args: argparse.Namespace) -> int:
    """Spectrum, SPA and realignment report for one γ."""
    params = BellFamilyParams(float(args.gamma), args.factor)
    w = build_witness(params)
    lambda_min, degeneracy = witness_spectrum_check(w)
    result = spa(w, gamma=params.gamma)
    report = entanglement_margin(result)
    _dump_json(
        {
            "gamma": params.gamma,
            "weyl_factor": params.weyl_factor,
            "spectrum": {
                "lambda_min": lambda_min,
                "degeneracy": degeneracy,
                "clusters": [list(cluster) for cluster in witness_clusters(w)],
            },
            "spa": result.to_dict(),
            "realignment": report.to_dict(),
        },
        args.out,
    )
    _summary(args.out, f"margin {report.margin:.6e}", report.verdict, report.verdict)
    return WITNESSPY_EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    """Emit :math:`W_\\gamma` in the matrix JSON layout."""
    w = build_witness(BellFamilyParams(float(args.gamma), args.factor))
    _dump_json(w.to_dict(), args.out)
    _summary(args.out, "witness", f"gamma={args.gamma}", "value")
    return WITNESSPY_EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    """CSV of the realignment margin over a γ grid."""
    logger.debug("scan seed=%s (the scan draws no random numbers)", args.seed)
    rows = scan(
        float(args.gamma_from),
        float(args.gamma_to),
        int(args.steps),
        workers=int(args.workers) if args.workers is not None else None,
        weyl_factor=args.factor,
    )
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(WITNESSPY_SCAN_HEADER)
    writer.writerows(rows)
    _write_output(buffer.getvalue(), args.out)
    detected = sum(1 for row in rows if row.margin > 0)
    _summary(args.out, f"{len(rows)} rows,", f"{detected} entangled", "entangled")
    return WITNESSPY_EXIT_OK


def cmd_optimality(args: argparse.Namespace) -> int:
    """Zero-set spans and see-saw evidence; exit 3 unless the ranks are 6 and 9."""
    report = certify_optimality(
        BellFamilyParams(float(args.gamma), args.factor),
        samples=int(args.samples),
        seed=int(args.seed),
        workers=int(args.workers) if args.workers is not None else None,
    )
    _dump_json(report.to_dict(), args.out)
    _summary(
        args.out,
        "ranks",
        "{} / {}".format(*report.ranks),
        "entangled" if report.ranks_ok else "failure",
    )
    if not report.ranks_ok:
        logger.error("unexpected span ranks %s", report.ranks)
        return WITNESSPY_EXIT_REJECTED
    return WITNESSPY_EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    """Exact γ = 3/4 certificate; exit 3 on a false verdict."""
    kwargs = {}
    if args.lambda_prime is not None:
        kwargs["lambda_prime"] = to_rational(args.lambda_prime)
    report = certify_gamma_three_quarters(**kwargs)
    _dump_json(report.to_dict(), args.out)
    _summary(
        args.out,
        "verdict",
        str(report.verdict).lower(),
        "entangled" if report.verdict else "failure",
    )
    if not report.verdict:
        logger.error("certificate failed at step %s", report.failed_step)
        return WITNESSPY_EXIT_REJECTED
    return WITNESSPY_EXIT_OK


command_mapping: Dict[str, Callable[[argparse.Namespace], int]] = {
    "report": cmd_report,
    "witness": cmd_witness,
    "scan": cmd_scan,
    "optimality": cmd_optimality,
    "certify": cmd_certify,
}


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per entry of :data:`command_mapping`."""
    parser = argparse.ArgumentParser(
        prog="witnesspy",
        description="SPA and realignment toolkit for a family of optimal decomposable qutrit witnesses.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def family(sub: argparse.ArgumentParser, gamma: bool = True) -> None:
        if gamma:
            sub.add_argument("--gamma", required=True, help="family parameter in (0, 1)")
        sub.add_argument(
            "--factor",
            choices=WITNESSPY_FACTORS,
            default=WITNESSPY_FACTOR_A,
            help="tensor factor the Weyl operators act on (default: %(default)s)",
        )

    report = subparsers.add_parser("report", help="spectrum, SPA and realignment for one gamma")
    family(report)
    report.add_argument("--out", help="JSON output path (default: stdout)")

    witness = subparsers.add_parser("witness", help="emit the witness matrix as JSON")
    family(witness)
    witness.add_argument("--out", help="JSON output path (default: stdout)")

    scan_parser = subparsers.add_parser("scan", help="realignment margin over a gamma grid as CSV")
    family(scan_parser, gamma=False)
    scan_parser.add_argument("--from", dest="gamma_from", default="0.01")
    scan_parser.add_argument("--to", dest="gamma_to", default="0.99")
    scan_parser.add_argument("--steps", default="99")
    scan_parser.add_argument("--out", required=True, help="CSV output path")
    scan_parser.add_argument("--seed", default="0", help="seed for randomized subroutines")
    scan_parser.add_argument("--workers", help="thread count (default: WITNESSPY_WORKERS)")

    optimality = subparsers.add_parser("optimality", help="numerical optimality certificate")
    family(optimality)
    optimality.add_argument("--samples", default="24")
    optimality.add_argument("--seed", default="0")
    optimality.add_argument("--workers", help="thread count (default: WITNESSPY_WORKERS)")
    optimality.add_argument("--out", help="JSON output path (default: stdout)")

    certify = subparsers.add_parser("certify", help="exact certificate at gamma = 3/4")
    certify.add_argument("--out", help="JSON output path (default: stdout)")
    certify.add_argument("--lambda-prime", dest="lambda_prime", help=argparse.SUPPRESS)
    return parser


def _validate(args: argparse.Namespace) -> None:
    for name, validator in validation_mapping.get(args.command, []):
        value = getattr(args, name, None)
        if value is not None:
            validate_text(validator, str(value))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface.

    Args:
        argv: Arguments without the program name, defaults to `sys.argv[1:]`.

    Returns:
        The exit code.
    """
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return WITNESSPY_EXIT_OK if error.code == 0 else WITNESSPY_EXIT_INVALID
    try:
        _validate(args)
    except ValidationError as error:
        print(f"witnesspy {args.command}: {error.message}", file=sys.stderr)
        return WITNESSPY_EXIT_INVALID
    try:
        return command_mapping[args.command](args)
    except InvalidArgument as error:
        print(f"witnesspy {args.command}: {error.message}", file=sys.stderr)
        return WITNESSPY_EXIT_INVALID
    except WitnessPyError as error:
        logger.error("%s failed: %s", args.command, error.message)
        return WITNESSPY_EXIT_FAILURE
