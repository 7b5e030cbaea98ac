#!/usr/bin/env python3

# Internal packages
import json
import logging
from typing import Callable, Dict, Final, List

# Local modules
from sextremal.bitset import elements_from_mask, format_mask
from sextremal.cli import SextremalArgs, parse_cli_args
from sextremal.conjecture import SCAN_MODE_EXHAUSTIVE, SCAN_MODE_RANDOM, conjecture_scan
from sextremal.constructions import (
    anstee_expected_size,
    anstee_steps,
    fq_peel,
    forbidden_trace_check,
    furedi_quinn,
    furedi_quinn_expected_size,
    is_down_set,
    peel_sequence,
)
from sextremal.errors import (
    ConsistencyException,
    InputException,
    ParameterOutOfRangeException,
)
from sextremal.groebner import (
    assemble_groebner_basis,
    basis_to_json,
    buchberger_check,
    extremality_via_sm,
    random_orders,
    vc1_basis_from_tree,
)
from sextremal.inclusion_graph import build_inclusion_graph, classify_vc1_extremal, graph_to_dot
from sextremal.info.general import SEXTREMAL_NAME
from sextremal.info.limits import MAX_EXACT_SM_N
from sextremal.labeled_tree import (
    count_vc1_extremal_partition,
    decode_tree,
    encode_family,
    enumerate_vc1_extremal,
    expected_vc1_extremal_count,
    format_tree,
    parse_tree,
    tree_to_dot,
)
from sextremal.polynomial import LexOrder, format_polynomial
from sextremal.projections import verify_lift
from sextremal.random_family import create_rng
from sextremal.reports import analyze
from sextremal.set_system import (
    SetSystem,
    is_extremal,
    shattered_family,
    strongly_shattered,
    vc_dimension,
)
from sextremal.set_system_io import (
    format_set_system,
    format_set_system_json,
    read_set_system,
    set_system_to_json_object,
)
from sextremal.transforms import is_extremal_br, shift_to_down_set
from sextremal.workers import run_partitioned

log = logging.getLogger(__name__)


class CheckFailedException(ConsistencyException):
    """Raised when a requested cross-check of a command result fails"""

    pass


def _read_family(args: SextremalArgs) -> SetSystem:
    if args.input_file_path is None:
        raise InputException(f"Command needs an input file ({args.command=})")
    return read_set_system(args.input_file_path)


def _print_family(args: SextremalArgs, family: SetSystem):
    if args.output_json:
        print(format_set_system_json(family))
    else:
        print(format_set_system(family), end="")


def _print_bool(args: SextremalArgs, value: bool):
    print(json.dumps(value) if args.output_json else str(value).lower())


def command_analyze(args: SextremalArgs) -> int:
    report = analyze(_read_family(args), args.seed)
    print(report.to_json() if args.output_json else report.to_text())
    return 0


def command_shatter(args: SextremalArgs) -> int:
    family = _read_family(args)
    _print_family(args, strongly_shattered(family) if args.strong else shattered_family(family))
    return 0


def command_vcdim(args: SextremalArgs) -> int:
    print(vc_dimension(_read_family(args)))
    return 0


def command_extremal(args: SextremalArgs) -> int:
    family = _read_family(args)
    if args.method == "br":
        result = is_extremal_br(family)
    elif args.method == "sm":
        orders = (
            None
            if family.n <= MAX_EXACT_SM_N
            else random_orders(family.n, args.orders, create_rng(args.seed))
        )
        if orders is not None:
            log.warning(f"Only {len(orders)} sampled lex orders are compared ({family.n=})")
        result = extremality_via_sm(family, orders)
    else:
        result = is_extremal(family)
    _print_bool(args, result)
    return 0


def command_graph(args: SextremalArgs) -> int:
    graph = build_inclusion_graph(_read_family(args))
    if args.dot:
        print(graph_to_dot(graph), end="")
    elif args.output_json:
        print(
            json.dumps(
                {
                    "family": set_system_to_json_object(graph.family),
                    "edges": [
                        [list(elements_from_mask(g)), list(elements_from_mask(f)), label]
                        for g, f, label in graph.edges
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        for g, f, label in graph.edges:
            print(f"{format_mask(g)} -> {format_mask(f)} {label}")
    return 0


def command_tree(args: SextremalArgs) -> int:
    if args.tree_action == "encode":
        tree = encode_family(_read_family(args))
        print(tree_to_dot(tree) if args.dot else format_tree(tree), end="")
        return 0
    if args.input_file_path is None:
        raise InputException("Decoding needs a tree input file")
    with open(args.input_file_path, "r", encoding="utf-8") as tree_file:
        tree = parse_tree(tree_file.read(), str(args.input_file_path))
    if args.dot:
        print(tree_to_dot(tree), end="")
        return 0
    _print_family(args, decode_tree(tree, args.n))
    return 0


def command_enumerate(args: SextremalArgs) -> int:
    n: Final = args.n
    if n is None:
        raise InputException("Enumeration needs --n")
    if args.count_only or args.check:
        firsts = [None] if n == 1 else list(range(n + 1))
        count = sum(
            run_partitioned(
                count_vc1_extremal_partition, [(n, first) for first in firsts], args.jobs
            )
        )
        if args.check:
            expected = expected_vc1_extremal_count(n)
            if count != expected:
                raise CheckFailedException(f"Enumeration count is wrong ({count=}, {expected=})")
            unclassified = [
                family for family in enumerate_vc1_extremal(n) if not classify_vc1_extremal(family)
            ]
            if len(unclassified) > 0:
                raise CheckFailedException(
                    f"Enumerated families are not classified as trees ({unclassified[0]})"
                )
            log.info(f"Enumeration count matches 2^n (n+1)^(n-2) ({n=}, {count=})")
        if args.count_only:
            print(count)
            return 0
    for family in enumerate_vc1_extremal(n):
        _print_family(args, family)
    return 0


def command_groebner(args: SextremalArgs) -> int:
    family = _read_family(args)
    order = LexOrder.identity(family.n) if args.order is None else LexOrder.parse(args.order)
    if order.n != family.n:
        raise ParameterOutOfRangeException(
            f"Lex order does not match the ground set ({order.n=}, {family.n=})"
        )
    if args.basis_mode == "sh":
        basis = assemble_groebner_basis(family)
    else:
        basis = vc1_basis_from_tree(family, args.basis_mode)
    if args.check and not buchberger_check(basis, order):
        raise CheckFailedException(f"Buchberger's criterion failed ({order=}, {family})")
    if args.output_json:
        print(basis_to_json(basis, order))
    else:
        for polynomial in basis:
            print(format_polynomial(polynomial, order))
    return 0


def command_project(args: SextremalArgs) -> int:
    if args.t is None:
        raise InputException("Lifting needs --t")
    report = verify_lift(_read_family(args), args.t, args.window, args.relaxed, args.jobs)
    if args.output_json:
        print(report.to_json())
    else:
        print(f"mode: {report.mode}")
        print(f"window: {report.window}")
        print(f"projections_extremal: {report.projections_extremal}")
        print(f"contains_input: {report.contains_input}")
        print(f"lifted_extremal: {report.lifted_extremal}")
        print(f"lifted_vcdim: {report.lifted_vcdim}")
        print(f"equality_when_extremal: {report.equality_when_extremal}")
        print(format_set_system(report.lifted), end="")
    return 2 if report.falsified else 0


def _check_construction(family: SetSystem, expected_size: int, t: int, l: int):
    if len(family) != expected_size:
        raise CheckFailedException(f"Wrong size ({len(family)=}, {expected_size=})")
    if not forbidden_trace_check(family, t, l):
        raise CheckFailedException(f"A {t}-set sees all of its {l}-subsets ({family})")
    if not is_extremal(family):
        raise CheckFailedException(f"Construction is not extremal ({family})")


def command_construct(args: SextremalArgs) -> int:
    if args.construction == "downset":
        family = _read_family(args)
        shifted = shift_to_down_set(family)
        if args.check and not (is_down_set(shifted) and len(shifted) == len(family)):
            raise CheckFailedException(f"Downshifts did not produce a down-set ({shifted})")
        _print_family(args, shifted)
        return 0
    if args.n is None:
        raise InputException(f"Construction needs --n ({args.construction=})")
    if args.construction == "anstee":
        rng = create_rng(args.seed) if args.random else None
        family, steps = anstee_steps(args.n, rng)
        if args.trace:
            for step in steps:
                log.info(
                    f"{format_mask(step.a)} ∪ {format_mask(step.b)} = {format_mask(step.union)} "
                    f"(△ {format_mask(step.symmetric_difference)})"
                )
        if args.check:
            _check_construction(family, anstee_expected_size(args.n), 3, 2)
    else:
        if args.t is None or args.l is None:
            raise InputException("Forbidden trace construction needs --t and --l")
        family = furedi_quinn(args.n, args.t, args.l)
        if args.check:
            _check_construction(
                family, furedi_quinn_expected_size(args.n, args.t), args.t, args.l
            )
    _print_family(args, family)
    return 0


def command_peel(args: SextremalArgs) -> int:
    if (args.input_file_path is None) == (args.fq_parameters is None):
        raise InputException("Peeling needs either an input file or --fq N T L")
    if args.fq_parameters is not None:
        n, t, l = args.fq_parameters
        report = fq_peel(n, t, l)
    else:
        report = peel_sequence(_read_family(args))
    if args.output_json:
        print(report.to_json())
    else:
        for index, (mask, extremal) in enumerate(
            zip(report.order, report.extremal_after_each)
        ):
            print(f"{index} {format_mask(mask)} {'extremal' if extremal else 'not extremal'}")
        if report.stuck is not None:
            print(f"stuck {report.stuck}")
    return 0 if report.complete else 2


def command_conjecture(args: SextremalArgs) -> int:
    if args.n is None:
        raise InputException("Conjecture scan needs --n")
    if args.random_count is None:
        report = conjecture_scan(args.n, SCAN_MODE_EXHAUSTIVE, jobs=args.jobs)
    else:
        report = conjecture_scan(
            args.n, SCAN_MODE_RANDOM, args.random_count, args.seed, args.jobs
        )
    if args.output_json:
        print(report.to_json())
    else:
        for key, value in sorted(report.to_json_object().items()):
            print(f"{key}: {value}")
    return 2 if report.falsified else 0


COMMAND_HANDLERS: Final[Dict[str, Callable[[SextremalArgs], int]]] = {
    "analyze": command_analyze,
    "shatter": command_shatter,
    "vcdim": command_vcdim,
    "extremal": command_extremal,
    "graph": command_graph,
    "tree": command_tree,
    "enumerate": command_enumerate,
    "groebner": command_groebner,
    "project": command_project,
    "construct": command_construct,
    "peel": command_peel,
    "conjecture": command_conjecture,
}


def main(args: SextremalArgs) -> int:
    log.debug(f"{args=}")

    # Check if there were any critical errors when parsing the CLI args
    if args.error is not None:
        log.error(args.error)
        return 1

    try:
        return COMMAND_HANDLERS[args.command](args)
    except InputException as err:
        log.error(err)
        return 1
    except ConsistencyException as err:
        log.error(f"{SEXTREMAL_NAME} consistency check failed: {err}")
        return 2


def run(cli_args: List[str]) -> int:
    return main(parse_cli_args(cli_args))
