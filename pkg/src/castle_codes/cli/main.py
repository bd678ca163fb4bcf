"""Command-line entry point for castle-codes.

Data goes to stdout, diagnostics to stderr. Exit status: 0 on success, 1 on a domain error
(decoding failure, out-of-range parameter, ...), 2 on a usage error.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Callable, Optional

from dotenv import load_dotenv

from ..algebra.linalg import FieldMatrix, FieldVector
from ..algebra.semigroup import apery_set, from_generators, is_symmetric, lgm_bound
from ..codes.bounds import (
    goppa_dominance_report,
    improved_code,
    improved_code_report,
    monotone_deltas,
)
from ..codes.chain import (
    CodeChain,
    OnePointCode,
    bound_table_for,
    build_chain,
    code_parameters,
    encode,
)
from ..codes.channel import make_rng, transmit
from ..config import configure_logging, get_settings
from ..curves import BaseCurve, build_curve
from ..decoding.feng_rao import build_context, decode
from ..errors import CastleCodesError, FormatError
from ..models.code_models import CodeDescriptor
from ..models.curve_models import CurveKind
from ..models.decoder_models import DecodeResult
from ..oracle.brute_force import brute_min_distance, brute_weight_distribution
from ..oracle.verification import verify_model
from ..utils.text_formats import parse_descriptor, parse_word, render_ints, render_word

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]


class UsageError(Exception):
    """Bad flag value detected after argparse; exits with status 2."""


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _read_file(path: str, flag: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{flag}: cannot read {path}: {exc.strerror}") from exc


# -- code resolution ---------------------------------------------------------------------------


def _descriptor(args: argparse.Namespace) -> CodeDescriptor:
    if getattr(args, "code", None):
        try:
            base = parse_descriptor(_read_file(args.code, "--code")).model_dump()
        except FormatError as exc:
            raise UsageError(f"--code: {exc}") from exc
    else:
        base = {}
    for key in ("model", "q", "r", "q0", "m", "delta"):
        value = getattr(args, key, None)
        if value is not None:
            base[key] = value
    if "model" not in base:
        raise UsageError("--model is required (or --code with a model line)")
    try:
        return CodeDescriptor.model_validate(base)
    except ValueError as exc:
        raise UsageError(f"--code: {exc}") from exc


def _curve(args: argparse.Namespace) -> BaseCurve:
    return build_curve(_descriptor(args).curve_spec())


def _one_point_code(args: argparse.Namespace) -> tuple[CodeChain, OnePointCode]:
    descriptor = _descriptor(args)
    if descriptor.m is None:
        raise UsageError("--m is required for a one-point code")
    chain = build_chain(build_curve(descriptor.curve_spec()))
    return chain, chain.code_at(descriptor.m)


def _generator(args: argparse.Namespace) -> FieldMatrix:
    descriptor = _descriptor(args)
    chain = build_chain(build_curve(descriptor.curve_spec()))
    if descriptor.delta is not None:
        return improved_code(chain, descriptor.delta)
    if descriptor.m is None:
        raise UsageError("one of --m or --delta is required")
    return chain.code_at(descriptor.m).generator


def _word(text: str, chain: CodeChain, flag: str) -> FieldVector:
    try:
        return parse_word(text, chain.field)
    except FormatError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _matrix(args: argparse.Namespace) -> FieldMatrix:
    try:
        return FieldMatrix.from_text(_read_file(args.matrix, "--matrix"))
    except FormatError as exc:
        raise UsageError(f"--matrix: {exc}") from exc


# -- commands ------------------------------------------------------------------------------------


def cmd_semigroup(args: argparse.Namespace) -> int:
    try:
        gens = [int(tok) for tok in args.gens.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"--gens: {args.gens!r} is not a list of integers") from exc
    S = from_generators(gens)
    _out(f"generators: {render_ints(S.generators)}")
    _out(f"genus: {S.genus}")
    _out(f"conductor: {S.conductor}")
    _out(f"elements: {render_ints(S.elements_up_to(S.conductor - 1))}")
    _out(f"gaps: {render_ints(S.gaps)}")
    _out(f"symmetric: {str(is_symmetric(S)).lower()}")
    _out(f"apery: {render_ints(sorted(apery_set(S)))}")
    if args.q is not None:
        bound = lgm_bound(S, args.q)
        _out(f"lgm_bound: {bound.lgm}")
        _out(f"lewittes_bound: {bound.lewittes}")
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    curve = _curve(args)
    summary = curve.summary()
    _out(f"model: {curve.label}")
    _out(f"field: {summary.field}")
    _out(f"genus: {summary.genus}")
    _out(f"n: {summary.n}")
    _out(f"semigroup: {render_ints(summary.generators)}")
    _out(f"castle: {str(summary.castle).lower()}")
    if curve.is_concrete:
        for point in curve.enumerate_points():
            _out(render_word(curve.field, point, args.pretty))
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    curve = _curve(args)
    table = bound_table_for(curve)
    _out(f"M: {render_ints(table.dimension_set)}")
    _out(f"lambda_star: {render_ints(table.lambda_sizes)}")
    _out(f"nstar: {render_ints(table.nstar_sizes)}")
    _out(f"d_ord: {render_ints(table.d_ord(k) for k in range(1, table.n + 1))}")
    _out(f"d_ord_dual: {render_ints(table.d_ord_dual(k) for k in range(table.n))}")
    improvements = [e.m for e in goppa_dominance_report(table) if e.improves]
    _out(f"goppa_improvements: {render_ints(improvements)}")
    _out(f"monotone_deltas: {render_ints(monotone_deltas(table))}")
    if args.improved:
        for entry in improved_code_report(table):
            _out(
                f"delta={entry.delta} improved={entry.improved_dimension} "
                f"one_point={entry.one_point_dimension} monotone={str(entry.monotone).lower()}"
            )
    return 0


def cmd_code_matrix(args: argparse.Namespace) -> int:
    sys.stdout.write(_generator(args).to_text())
    return 0


def cmd_code_info(args: argparse.Namespace) -> int:
    _, code = _one_point_code(args)
    for key, value in code_parameters(code).model_dump().items():
        _out(f"{key}: {'none' if value is None else value}")
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    chain, code = _one_point_code(args)
    message = _word(args.message, chain, "--message")
    _out(render_word(chain.field, encode(code, message), args.pretty))
    return 0


def cmd_channel(args: argparse.Namespace) -> int:
    chain, code = _one_point_code(args)
    word = _word(args.word, chain, "--word")
    if args.error is not None:
        error = _word(args.error, chain, "--error")
        received = word + error
    else:
        if args.weight is None:
            raise UsageError("one of --weight or --error is required")
        received, error = transmit(word, args.weight, make_rng(args.seed))
    _out(render_word(chain.field, received, args.pretty))
    _out(render_word(chain.field, error, args.pretty))
    return 0


def _print_decode(result: DecodeResult, chain: CodeChain, pretty: bool) -> None:
    field = chain.field
    _out(f"error: {render_word(field, result.error, pretty)}")
    _out(f"codeword: {render_word(field, result.codeword, pretty)}")
    _out(f"message: {render_word(field, result.message, pretty)}")
    _out(f"syndromes: {render_word(field, result.syndromes, pretty)}")
    for step in result.steps:
        frontier = step.frontier
        votes = " ".join(
            f"({c.i},{c.j}):{field.pretty(c.predicted) if pretty else c.predicted}"
            f"->{field.pretty(c.vote) if pretty else c.vote}"
            for c in step.candidates
        )
        winner = field.pretty(step.winner) if pretty else step.winner
        _out(
            f"step l={frontier} pairs={len(step.pairs)} candidates {votes} "
            f"s_{frontier + 1}={winner} ({step.winner_count}/{len(step.candidates)})"
        )


def cmd_decode(args: argparse.Namespace) -> int:
    chain, code = _one_point_code(args)
    word = _word(args.word, chain, "--word")
    result = decode(build_context(chain, code.k), word)
    _print_decode(result, chain, args.pretty)
    return 0


def cmd_oracle_distance(args: argparse.Namespace) -> int:
    _out(str(brute_min_distance(_matrix(args), jobs=args.jobs)))
    return 0


def cmd_oracle_weights(args: argparse.Namespace) -> int:
    for weight, count in sorted(brute_weight_distribution(_matrix(args), jobs=args.jobs).items()):
        _out(f"{weight} {count}")
    return 0


def cmd_oracle_verify(args: argparse.Namespace) -> int:
    report = verify_model(_curve(args))
    width = max(len(c.name) for c in report.checks)
    for check in report.checks:
        _out(f"{check.name:<{width}}  {'PASS' if check.passed else 'FAIL'}  {check.detail}")
    return 0 if report.passed else 1


# -- parser --------------------------------------------------------------------------------------


def _model_flags(parser: argparse.ArgumentParser, with_code: bool = False) -> None:
    group = parser.add_argument_group("curve")
    group.add_argument("--model", choices=[k.value for k in CurveKind], help="Curve family")
    group.add_argument("--q", type=int, help="Base field size")
    group.add_argument("--r", type=int, help="Extension degree (norm_trace, generalized_hermitian)")
    group.add_argument("--q0", type=int, help="Suzuki parameter, q = 2*q0^2")
    if with_code:
        group.add_argument("--code", help="Descriptor file; flags override its values")
        group.add_argument("--m", type=int, help="Divisor degree of the one-point code")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="castle-codes",
        description="One-point AG codes on Castle curves: bounds, encoding and decoding.",
    )
    parser.add_argument("--pretty", action="store_true", help="Print field elements as a^k")
    parser.add_argument("--log-level", help="Log level for stderr diagnostics")
    parser.add_argument("--jobs", type=int, help="Worker threads for oracle sweeps")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("semigroup", help="Semigroup invariants")
    p.add_argument("--gens", required=True, help="Generators, e.g. 8,10,12,13")
    p.add_argument("--q", type=int, help="Field size for the point-count bounds")
    p.set_defaults(handler=cmd_semigroup)

    p = commands.add_parser("curve", help="Curve summary and rational points")
    _model_flags(p)
    p.set_defaults(handler=cmd_curve)

    p = commands.add_parser("bounds", help="Dimension set and order bounds")
    _model_flags(p)
    p.add_argument("--improved", action="store_true", help="Also list improved-code dimensions")
    p.set_defaults(handler=cmd_bounds)

    code = commands.add_parser("code", help="One-point and improved codes")
    code_commands = code.add_subparsers(dest="code_command", required=True)
    p = code_commands.add_parser("matrix", help="Generator matrix in text format")
    _model_flags(p, with_code=True)
    p.add_argument("--delta", type=int, help="Designed distance of an improved code")
    p.set_defaults(handler=cmd_code_matrix)
    p = code_commands.add_parser("info", help="Dimension and distance bounds")
    _model_flags(p, with_code=True)
    p.set_defaults(handler=cmd_code_info)

    p = commands.add_parser("encode", help="Encode a message")
    _model_flags(p, with_code=True)
    p.add_argument("--message", required=True, help="k field elements")
    p.set_defaults(handler=cmd_encode)

    p = commands.add_parser("channel", help="Add an error pattern to a word")
    _model_flags(p, with_code=True)
    p.add_argument("--word", required=True, help="n field elements")
    p.add_argument("--weight", type=int, help="Weight of a random error")
    p.add_argument("--error", help="Explicit error word")
    p.add_argument("--seed", type=int, help="Channel seed")
    p.set_defaults(handler=cmd_channel)

    p = commands.add_parser("decode", help="Majority-voting decode")
    _model_flags(p, with_code=True)
    p.add_argument("--word", required=True, help="Received word, n field elements")
    p.set_defaults(handler=cmd_decode)

    oracle = commands.add_parser("oracle", help="Brute-force checks")
    oracle_commands = oracle.add_subparsers(dest="oracle_command", required=True)
    p = oracle_commands.add_parser("distance", help="Exact minimum distance")
    p.add_argument("--matrix", required=True, help="Generator matrix file")
    p.set_defaults(handler=cmd_oracle_distance)
    p = oracle_commands.add_parser("weights", help="Weight distribution")
    p.add_argument("--matrix", required=True, help="Generator matrix file")
    p.set_defaults(handler=cmd_oracle_weights)
    p = oracle_commands.add_parser("verify", help="Cross-module verification battery")
    _model_flags(p)
    p.set_defaults(handler=cmd_oracle_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    if args.jobs is None:
        args.jobs = get_settings().jobs
    handler: Handler = args.handler
    try:
        return handler(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CastleCodesError as exc:
        logger.debug(f"{args.command} failed", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
