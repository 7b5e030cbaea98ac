#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import argparse
import logging
import sys
from dataclasses import dataclass
from operator import attrgetter
from pathlib import Path
from typing import Final, List, Optional

# Local modules
from sextremal.info.general import (
    SEXTREMAL_JSON_FILE_EXTENSION,
    SEXTREMAL_NAME,
    SEXTREMAL_SS_FILE_EXTENSION,
    SEXTREMAL_TREE_FILE_EXTENSION,
    SEXTREMAL_VERSION,
)
from sextremal.info.limits import DEFAULT_SAMPLED_ORDERS, DEFAULT_SEED


class SortedArgumentDefaultsHelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    def add_arguments(self, actions):
        actions = sorted(actions, key=attrgetter("option_strings"))
        super(argparse.ArgumentDefaultsHelpFormatter, self).add_arguments(actions)


class InputFileNotFoundException(Exception):
    """Raised when an input file is not found"""

    input_file_path: Final[Path]

    def __init__(self, input_file_path: Path):
        absolute_path: Final = input_file_path.absolute()
        super().__init__(
            f"Input file was not found ({input_file_path!r}, {absolute_path=})"
        )
        self.input_file_path = input_file_path


EXTREMAL_METHODS: Final = ("def", "br", "sm")
BASIS_MODES: Final = ("sh", "full", "adjacent")
CONSTRUCTIONS: Final = ("anstee", "fq", "downset")
TREE_ACTIONS: Final = ("encode", "decode")


@dataclass
class SextremalArgs:
    """
    Contains all information of the sextremal command line arguments.
    """

    command: str = "analyze"
    """Subcommand."""
    input_file_path: Optional[Path] = None
    """Set system (.ss, .json) or tree (.tree) input file."""
    output_json: bool = False
    """Print stable JSON instead of text."""
    jobs: int = 1
    """Worker processes for enumeration, lifting and scans."""
    seed: int = DEFAULT_SEED
    """Seed of every randomised mode."""
    strong: bool = False
    """Print st(F) instead of Sh(F)."""
    method: str = "def"
    """Extremality test."""
    orders: int = DEFAULT_SAMPLED_ORDERS
    """Sampled lex orders when not all orders can be compared."""
    dot: bool = False
    """Print a DOT graph."""
    tree_action: Optional[str] = None
    n: Optional[int] = None
    """Ground set size of enumerations, constructions and scans."""
    count_only: bool = False
    check: bool = False
    """Cross-check the result (a failing check exits with 2)."""
    order: Optional[str] = None
    """Lex order as comma separated permutation of the variables."""
    basis_mode: str = "sh"
    t: Optional[int] = None
    l: Optional[int] = None
    window: Optional[int] = None
    relaxed: bool = False
    construction: Optional[str] = None
    random: bool = False
    """Random spanning trees for the triangle-free construction."""
    trace: bool = False
    """Log every step of a construction."""
    fq_parameters: Optional[List[int]] = None
    """n, t and l of a forbidden trace construction to peel."""
    random_count: Optional[int] = None
    """Sampled families of a random conjecture scan (exhaustive otherwise)."""
    error: Optional[InputFileNotFoundException] = None
    """Error message in case there was an error parsing CLI args."""


log = logging.getLogger(__name__)


def check_positive(x: str) -> int:
    x_num = int(x)
    if x_num < 1:
        raise argparse.ArgumentTypeError("Minimum value is 1")
    return x_num


def check_non_negative(x: str) -> int:
    x_num = int(x)
    if x_num < 0:
        raise argparse.ArgumentTypeError("Minimum value is 0")
    return x_num


def get_common_argument_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-d",
        "--debug",
        dest="log_level",
        const="DEBUG",
        default="INFO",
        action="store",
        nargs="?",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="custom log level to the console",
    )
    common.add_argument(
        "-log-file",
        metavar="LOG_FILE",
        type=Path,
        help="log all messages to a text file (.log)",
    )
    common.add_argument(
        "--jobs",
        metavar="JOBS",
        type=check_positive,
        default=1,
        help="worker processes for enumerations, lifts and scans",
    )
    common.add_argument(
        "--seed",
        metavar="SEED",
        type=int,
        default=DEFAULT_SEED,
        help="seed of every randomised mode",
    )
    common.add_argument(
        "--json",
        dest="output_json",
        action="store_true",
        help="print stable JSON instead of text",
    )
    return common


def get_argument_parser() -> argparse.ArgumentParser:
    common = get_common_argument_parser()
    parser = argparse.ArgumentParser(
        description="Analyze, construct and verify shattering-extremal set systems. "
        "Set systems are read from .ss files (an optional 'n=<size>' header line and "
        "one set of ascending comma separated elements per line, '-' for the empty set) or .json "
        "files.",
        formatter_class=SortedArgumentDefaultsHelpFormatter,
        prog=SEXTREMAL_NAME,
    )
    parser.add_argument(
        "-v", "--version", action="version", version=f"%(prog)s {SEXTREMAL_VERSION}"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add_command(name: str, help_text: str, file_arg: bool = True):
        subparser = subparsers.add_parser(
            name,
            parents=[common],
            help=help_text,
            description=help_text,
            formatter_class=SortedArgumentDefaultsHelpFormatter,
        )
        if file_arg:
            subparser.add_argument(
                "input_file",
                metavar="INPUT_FILE",
                type=Path,
                help="set system input file "
                f"({SEXTREMAL_SS_FILE_EXTENSION}, {SEXTREMAL_JSON_FILE_EXTENSION})",
            )
        return subparser

    add_command("analyze", "print every invariant of a set system")
    shatter = add_command("shatter", "print the shattered sets Sh(F)")
    shatter.add_argument(
        "--strong", action="store_true", help="print the strongly shattered sets st(F)"
    )
    add_command("vcdim", "print the VC-dimension")
    extremal = add_command("extremal", "check if a set system is shattering-extremal")
    extremal.add_argument(
        "--method",
        choices=EXTREMAL_METHODS,
        default="def",
        help="|Sh(F)| = |F|, connected inclusion graphs of all F(B) or equal standard "
        "monomials for all lex orders (%(choices)s)",
    )
    extremal.add_argument(
        "--orders",
        metavar="COUNT",
        type=check_positive,
        default=DEFAULT_SAMPLED_ORDERS,
        help="sampled lex orders when the ground set is too large for all orders",
    )
    graph = add_command("graph", "print the labelled inclusion graph")
    graph.add_argument("--dot", action="store_true", help="print a DOT graph")

    tree = add_command("tree", "encode a set system as tree or decode a tree", False)
    tree.add_argument("tree_action", metavar="ACTION", choices=TREE_ACTIONS, help="%(choices)s")
    tree.add_argument(
        "input_file",
        metavar="INPUT_FILE",
        type=Path,
        help="set system (encode) or tree "
        f"({SEXTREMAL_TREE_FILE_EXTENSION}, decode) input file",
    )
    tree.add_argument(
        "--n", metavar="N", type=check_positive, help="ground set size of a decoded tree"
    )
    tree.add_argument("--dot", action="store_true", help="print a DOT graph of the tree")

    enumerate_command = add_command(
        "enumerate",
        "enumerate all extremal families of VC-dimension 1 with full support and "
        "empty common intersection",
        False,
    )
    enumerate_command.add_argument(
        "--n", metavar="N", type=check_positive, required=True, help="ground set size"
    )
    enumerate_command.add_argument(
        "--count-only", action="store_true", help="only print the number of families"
    )
    enumerate_command.add_argument(
        "--check",
        action="store_true",
        help="compare the count with 2^n (n+1)^(n-2) and classify every family",
    )

    groebner = add_command("groebner", "print the Gröbner basis of the vanishing ideal")
    groebner.add_argument(
        "--order", metavar="PERM", help="lex order as comma separated variables [i.e. 3,1,2]"
    )
    groebner.add_argument(
        "--mode",
        dest="basis_mode",
        choices=BASIS_MODES,
        default="sh",
        help="basis from the minimal non-shattered sets or from the tree of a "
        "VC-dimension 1 family (all or adjacent label pairs) (%(choices)s)",
    )
    groebner.add_argument(
        "--check", action="store_true", help="check Buchberger's criterion"
    )

    project = add_command("project", "lift a set system from its projections")
    project.add_argument(
        "--t", metavar="T", type=check_positive, required=True, help="VC-dimension"
    )
    project.add_argument(
        "--window", metavar="SIZE", type=check_positive, help="projection window size [default: 2t+1]"
    )
    project.add_argument(
        "--relaxed", action="store_true", help="accept a VC-dimension below t"
    )

    construct = add_command("construct", "construct a set system", False)
    construct.add_argument(
        "construction", metavar="CONSTRUCTION", choices=CONSTRUCTIONS, help="%(choices)s"
    )
    construct.add_argument(
        "-i",
        "--input",
        dest="input_file",
        metavar="INPUT_FILE",
        type=Path,
        help="set system input file (downset only)",
    )
    construct.add_argument("--n", metavar="N", type=check_positive, help="ground set size")
    construct.add_argument("--t", metavar="T", type=check_positive, help="trace size (fq)")
    construct.add_argument(
        "--l", metavar="L", type=check_non_negative, help="forbidden subset size (fq)"
    )
    construct.add_argument(
        "--random", action="store_true", help="random spanning trees (anstee)"
    )
    construct.add_argument("--trace", action="store_true", help="log every step")
    construct.add_argument(
        "--check", action="store_true", help="check size, extremality and forbidden traces"
    )

    peel = add_command("peel", "remove members one by one keeping extremality", False)
    peel.add_argument(
        "-i",
        "--input",
        dest="input_file",
        metavar="INPUT_FILE",
        type=Path,
        help="extremal set system input file (instead of --fq)",
    )
    peel.add_argument(
        "--fq",
        metavar=("N", "T", "L"),
        type=int,
        nargs=3,
        help="peel the forbidden trace construction in its canonical order",
    )

    conjecture = add_command(
        "conjecture", "scan for extremal families without a removable member", False
    )
    conjecture.add_argument(
        "--n", metavar="N", type=check_positive, required=True, help="ground set size"
    )
    scan_mode = conjecture.add_mutually_exclusive_group()
    scan_mode.add_argument(
        "--exhaustive", action="store_true", help="scan every nonempty family (default)"
    )
    scan_mode.add_argument(
        "--random", metavar="COUNT", type=check_positive, help="scan random families"
    )
    return parser


class FormatterCleanInfo(logging.Formatter):
    def format(self, record):
        if record.levelno == logging.INFO:
            self._style._fmt = "%(message)s"
        else:
            self._style._fmt = "%(asctime)s %(levelname)s %(name)s: %(message)s"
        return super().format(record)


class Formatter(logging.Formatter):
    def format(self, record):
        self._style._fmt = "%(asctime)s %(levelname)s %(name)s: %(message)s"
        return super().format(record)


def setup_logging(log_level: str, log_file: Optional[Path]):
    handlers: List[logging.FileHandler | logging.StreamHandler] = []

    # Create a logging handler to stderr for info (stdout carries the results)
    hdlr_info = logging.StreamHandler(sys.stderr)
    hdlr_info.setFormatter(FormatterCleanInfo())
    hdlr_info.setLevel(getattr(logging, log_level))
    hdlr_info.addFilter(lambda record: record.levelno < logging.WARNING)
    handlers.append(hdlr_info)

    # Create a logging handler to stderr for warnings and errors
    hdlr_warn_err = logging.StreamHandler(sys.stderr)
    hdlr_warn_err.setFormatter(Formatter())
    hdlr_warn_err.setLevel(logging.WARNING)
    hdlr_warn_err.addFilter(lambda record: record.levelno >= logging.WARNING)
    handlers.append(hdlr_warn_err)

    if log_file is not None:
        # Create a logging handler to a file for everything
        hdlr_file = logging.FileHandler(log_file, mode="w")
        hdlr_file.setFormatter(Formatter())
        hdlr_file.setLevel(logging.DEBUG)
        handlers.append(hdlr_file)

    # This is necessary to fix the file handler
    logging.root.handlers = []

    # Setup global logging
    logging.basicConfig(
        level=logging.DEBUG,
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=handlers,
    )


def parse_cli_args(cli_args: List[str]) -> SextremalArgs:
    """
    Parse the supplied CLI arguments.

    @return: Object that contains all parsed information.
    """
    parser = get_argument_parser()
    args = parser.parse_args(cli_args)
    setup_logging(args.log_level, args.log_file)
    log.debug(f"{cli_args=}, {args=}")

    parsed_args = SextremalArgs(
        command=args.command,
        input_file_path=getattr(args, "input_file", None),
        output_json=args.output_json,
        jobs=args.jobs,
        seed=args.seed,
    )
    parsed_args.strong = getattr(args, "strong", False)
    parsed_args.method = getattr(args, "method", "def")
    parsed_args.orders = getattr(args, "orders", DEFAULT_SAMPLED_ORDERS)
    parsed_args.dot = getattr(args, "dot", False)
    parsed_args.tree_action = getattr(args, "tree_action", None)
    parsed_args.n = getattr(args, "n", None)
    parsed_args.count_only = getattr(args, "count_only", False)
    parsed_args.check = getattr(args, "check", False)
    parsed_args.order = getattr(args, "order", None)
    parsed_args.basis_mode = getattr(args, "basis_mode", "sh")
    parsed_args.t = getattr(args, "t", None)
    parsed_args.l = getattr(args, "l", None)
    parsed_args.window = getattr(args, "window", None)
    parsed_args.relaxed = getattr(args, "relaxed", False)
    parsed_args.construction = getattr(args, "construction", None)
    parsed_args.trace = getattr(args, "trace", False)
    parsed_args.fq_parameters = getattr(args, "fq", None)
    if args.command == "construct":
        parsed_args.random = args.random
    if args.command == "conjecture":
        parsed_args.random_count = args.random

    # If an input file is not found throw error
    if parsed_args.input_file_path is not None and not parsed_args.input_file_path.is_file():
        parsed_args.error = InputFileNotFoundException(parsed_args.input_file_path)

    return parsed_args
