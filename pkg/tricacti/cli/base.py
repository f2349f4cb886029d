"""Command line front end.

Exit codes: 0 success, 1 failed verification, 2 usage or input error, 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from os import environ
from typing import TYPE_CHECKING

import pandas as pd

from tricacti.bijection import ImageTuple, theta_forward, theta_inverse, validate_image
from tricacti.cactus import PartitionedCactus, enumerate_cc, export_dot
from tricacti.counting import (
    MTable,
    cc_count_stirling,
    genus_distribution,
    i_count_formula,
    jackson_symmetric,
    m_bruteforce,
)
from tricacti.schema import (
    FactorizationModel,
    ImageTupleModel,
    PartitionedCactusModel,
    VerificationReport,
    parse_document,
)
from tricacti.tree import TreeProfile, ct_count_formula, enumerate_ct
from tricacti.utils import LIMITS_CFG, LOGGER, dump_json
from tricacti.utils.exception import InvariantViolationError, LimitExceededError, TricactiError
from tricacti.utils.io import read_text, write_text

from .suites import SUITES, suite_runners

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

EXIT_OK: int = 0
EXIT_FAILED: int = 1
EXIT_USAGE: int = 2
EXIT_LIMIT: int = 3


def _int_list(size: int) -> Callable[[str], list[int]]:
    def parse(text: str) -> list[int]:
        try:
            values: list[int] = [int(part) for part in text.split(",")]
        except ValueError as exc:
            msg: str = f"expected {size} comma separated integers, got {text!r}"
            raise argparse.ArgumentTypeError(msg) from exc
        if len(values) != size:
            msg = f"expected {size} comma separated integers, got {text!r}"
            raise argparse.ArgumentTypeError(msg)
        return values

    return parse


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--force", action="store_true", help="ignore the configured size limits")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for brute force (default 1)")

    parser = argparse.ArgumentParser(prog="tricacti", description="Factorizations of the long cycle into three factors")
    parser.add_argument(
        "--limit",
        type=int,
        default=None,
        help=f"override the brute-force size limit (also {LIMITS_CFG.enumeration['env_key']})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count_m = sub.add_parser("count-m", parents=[common], help="table of M(n1, n2, n3, n) by brute force")
    count_m.add_argument("--n", type=int, required=True)
    count_m.add_argument("--format", choices=("csv", "json"), default="csv")
    count_m.add_argument("--by-genus", action="store_true", help="print counts per genus instead")

    count = sub.add_parser("count", parents=[common], help="number of partitioned cacti for (p1, p2, p3)")
    count.add_argument("--p", type=_int_list(3), required=True, metavar="P1,P2,P3")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--method", choices=("formula", "stirling", "brute", "symmetric"), default="formula")

    ct_count = sub.add_parser("ct-count", parents=[common], help="number of cactus trees with a profile")
    ct_count.add_argument("--profile", type=_int_list(6), required=True, metavar="P1,P2,P3,A,B,C")
    ct_count.add_argument("--brute-force", action="store_true", help="enumerate instead of the closed form")

    theta = sub.add_parser("theta", parents=[common], help="apply the bijection or its inverse to a JSON file")
    theta.add_argument("direction", choices=("forward", "inverse"))
    theta.add_argument("--input", default="-", help='input path, "-" for stdin')
    theta.add_argument("--output", default="-", help='output path, "-" for stdout')

    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suite", choices=(*SUITES, "all"))
    verify.add_argument("--max-n", type=int, default=4)

    export = sub.add_parser("export-dot", parents=[common], help="DOT graph of a factorization")
    export.add_argument("--input", default="-", help='factorization or cactus JSON, "-" for stdin')
    export.add_argument("--output", default="-", help='output path, "-" for stdout')
    return parser


def _count_m(args: argparse.Namespace) -> int:
    table: MTable = m_bruteforce(n=args.n, jobs=args.jobs, force=args.force)
    if args.by_genus:
        frame = pd.DataFrame(data=list(genus_distribution(table).items()), columns=["genus", "count"], dtype=object)
        text: str = frame.to_csv(index=False, lineterminator="\n") if args.format == "csv" else dump_json(
            data={"n": table.n, "rows": frame.to_numpy().tolist()},
        )
    else:
        text = table.to_csv() if args.format == "csv" else table.to_json()
    write_text(target=None, text=text)
    return EXIT_OK


def _count(args: argparse.Namespace) -> int:
    p1, p2, p3 = args.p
    methods: dict[str, Callable[[], int]] = {
        "formula": lambda: i_count_formula(p1, p2, p3, args.n),
        "symmetric": lambda: jackson_symmetric(p1, p2, p3, args.n),
        "stirling": lambda: cc_count_stirling(p1, p2, p3, args.n, force=args.force),
        "brute": lambda: sum(1 for _ in enumerate_cc(p1, p2, p3, args.n, force=args.force)),
    }
    write_text(target=None, text=str(methods[args.method]()))
    return EXIT_OK


def _ct_count(args: argparse.Namespace) -> int:
    pr = TreeProfile(*args.profile)
    value: int = (
        sum(1 for _ in enumerate_ct(profile=pr, force=args.force)) if args.brute_force else ct_count_formula(pr)
    )
    write_text(target=None, text=str(value))
    return EXIT_OK


def _theta(args: argparse.Namespace) -> int:
    text: str = read_text(source=args.input)
    if args.direction == "forward":
        pc: PartitionedCactus = parse_document(model=PartitionedCactusModel, text=text).to_domain()
        image: ImageTuple = theta_forward(pc)
        out = ImageTupleModel.from_domain(image).model_dump(mode="json", exclude_none=True)
    else:
        tup: ImageTuple = parse_document(model=ImageTupleModel, text=text).to_domain()
        validate_image(tup)
        out = PartitionedCactusModel.from_domain(theta_inverse(tup)).model_dump(mode="json")
    write_text(target=args.output, text=dump_json(data=out, indent=2))
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    runners = suite_runners(max_n=args.max_n, jobs=args.jobs, force=args.force)
    names: tuple[str, ...] = SUITES if args.suite == "all" else (args.suite,)
    first_failure: VerificationReport | None = None
    checked: int = 0
    for name in names:
        for report in runners[name]():
            checked += 1
            write_text(target=None, text=report.to_json())
            if not report.passed and first_failure is None:
                first_failure = report
    if first_failure is not None:
        LOGGER.error("verification failed; first counterexample: %s", first_failure.to_json())
        return EXIT_FAILED
    LOGGER.info("all %d checks passed", checked)
    return EXIT_OK


def _export_dot(args: argparse.Namespace) -> int:
    model: FactorizationModel = parse_document(model=FactorizationModel, text=read_text(source=args.input))
    write_text(target=args.output, text=export_dot(model.to_domain()))
    return EXIT_OK


HANDLERS: dict[str, Callable[[argparse.Namespace], int]] = {
    "count-m": _count_m,
    "count": _count,
    "ct-count": _ct_count,
    "theta": _theta,
    "verify": _verify,
    "export-dot": _export_dot,
}


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command and map errors to exit codes.

    ``--limit`` overrides the enumeration limit for this command only; the previous environment is
    restored afterwards.
    """
    key: str = str(LIMITS_CFG.enumeration["env_key"])
    previous: str | None = environ.get(key)
    if args.limit is not None:
        environ[key] = str(args.limit)
    try:
        return HANDLERS[args.command](args)
    except LimitExceededError as exc:
        LOGGER.error(exc.message)
        return EXIT_LIMIT
    except InvariantViolationError as exc:
        LOGGER.error(exc.message)
        return EXIT_FAILED
    except TricactiError as exc:
        LOGGER.error(exc.message)
        return EXIT_USAGE
    finally:
        if previous is None:
            environ.pop(key, None)
        else:
            environ[key] = previous


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``tricacti`` command."""
    parser: argparse.ArgumentParser = build_parser()
    args: argparse.Namespace = parser.parse_args(args=argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
