# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Command line front end of pm4cover.

Every subcommand reads documents from files (or stdin with "-"), writes
documents to --out (or stdout) and reports through the exit code.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rich.console import Console

from . import constants
from .backend import Pm4CoverBackend
from .config import CliConfig, OracleLimits, default_jobs, load_settings, set_oracle_limits, set_settings
from .documents import (
    parse_cover,
    parse_pole,
    parse_pole_stream,
    parse_two_factor,
    serialize_certificate,
    serialize_cover,
    serialize_partial_certificate,
    serialize_pole,
)
from .errors import (
    DocumentError,
    GenerationError,
    GraphError,
    ImproperInputError,
    InternalProofViolation,
    InvalidCircuitError,
    NoQualifyingTwoFactorError,
    PoleError,
    SizeCapError,
    WrongProfileError,
)
from .generators import GenSpec
from .graph_io import load_bundled_graph, parse_graph6
from .graphs import CubicGraph, cover_two_circuit_graph, find_two_odd_circuit_factor, split_from_circuits
from .pole import ProperCover, verify_proper_cover
from .version import __version__

logger = logging.getLogger(__name__)

INVALID_INPUT_ERRORS = (
    PoleError,
    DocumentError,
    GraphError,
    GenerationError,
    SizeCapError,
    WrongProfileError,
    ImproperInputError,
    InvalidCircuitError,
    OSError,
    ValueError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pm4cover",
        description="Proper 4-covers of Hamiltonian cubic 3-poles by perfect matchings",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  pm4cover cover --in t3.pole --out t3.cover     # cover a pole
  pm4cover verify --cover t3.cover               # check a cover document
  pm4cover gen --n 41 --profile FamilyG --count 10 --seed 7
  pm4cover oracle --graph petersen --k 4         # exit 3: not coverable by 4
  pm4cover split-cover --graph g.g6 --out g.cert
  pm4cover sweep --max-n 11                      # engine against oracle

Exit codes:
  0 success, 1 invalid input, 2 internal proof-step violation, 3 negative verdict
        """,
    )
    parser.add_argument(
        "--log-level",
        choices=constants.LOG_LEVELS,
        default="WARNING",
        help="Set logging level (default: WARNING)",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        metavar="TOML",
        help="Configuration file overriding the bundled defaults",
    )
    parser.add_argument(
        "--size-cap",
        type=int,
        default=None,
        metavar="N",
        help=f"Set every oracle size cap to N, overriding --config and {constants.SIZE_CAP_ENV}",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    cover = sub.add_parser("cover", help="Compute a proper 4-cover of a pole")
    cover.add_argument("--in", dest="input_path", default="-", help="Pole document (default: stdin)")
    cover.add_argument("--out", dest="output_path", default=None, help="Cover document (default: stdout)")
    cover.add_argument("--trace", action="store_true", help="Print the reduction trace on stderr")

    verify = sub.add_parser("verify", help="Check a cover document")
    verify.add_argument("--cover", dest="input_path", required=True, help="Cover document")
    verify.add_argument("--pole", default=None, help="Pole document the cover must belong to")

    gen = sub.add_parser("gen", help="Generate a stream of pole documents")
    gen.add_argument("--n", type=int, required=True, help="Number of vertices (odd, >= 3)")
    gen.add_argument("--seed", type=int, default=0, help="Seed of the first pole (default: 0)")
    gen.add_argument("--count", type=int, default=1, help="Number of poles, seeds seed..seed+count-1 (default: 1)")
    gen.add_argument("--profile", choices=constants.PROFILE_CONSTRAINTS, default=constants.RULE_ANY, help="Profile constraint")
    gen.add_argument("--no-digons", action="store_true", help="Reject poles with chords parallel to H-edges")
    gen.add_argument("--scramble", action="store_true", help="Apply a random rotation, reflection and spoke order")
    gen.add_argument("--all-odd", action="store_true", help="Poles with three odd segments")
    gen.add_argument("--enumerate", action="store_true", help="Every pole of order n instead of random ones")
    gen.add_argument("--out", dest="output_path", default=None, help="Pole stream (default: stdout)")

    oracle = sub.add_parser("oracle", help="Brute-force facts about a pole or a cubic graph")
    source = oracle.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="input_path", default=None, help="Pole document")
    source.add_argument("--graph", default=None, help="graph6 file or bundled graph name")
    oracle.add_argument("--k", type=int, default=None, help="Decide coverability by k perfect matchings")

    split = sub.add_parser("split-cover", help="Cover a cubic graph with two odd circuits by four perfect matchings")
    split.add_argument("--graph", required=True, help="graph6 file or bundled graph name")
    split.add_argument("--two-factor", default=None, help="Two-factor document naming the circuits")
    split.add_argument("--out", dest="output_path", default=None, help="Certificate (default: stdout)")
    split.add_argument("--trace", action="store_true", help="Print both reduction traces on stderr")

    sweep = sub.add_parser("sweep", help="Engine against oracle over every pole up to a size")
    sweep.add_argument("--max-n", type=int, required=True, help="Largest odd order to enumerate")
    sweep.add_argument("--len2-stats", action="store_true", help="Also report which length-2 colouring route succeeds")

    for p in (gen, sweep):
        p.add_argument("--jobs", type=int, default=None, help="Worker processes (default: physical cores)")
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")


def _load_graph(name: str) -> CubicGraph:
    """A graph6 file, or the name of a bundled graph"""
    path = Path(name)
    if path.is_file():
        return parse_graph6(path.read_bytes())
    return load_bundled_graph(name)


def _cli_config(args: argparse.Namespace) -> CliConfig:
    settings = load_settings(args.config)
    jobs = getattr(args, "jobs", None)
    if jobs is not None and jobs < 1:
        raise ValueError(f"--jobs must be positive, got {jobs}")
    return CliConfig(
        subcommand=args.subcommand,
        input_path=Path(args.input_path) if getattr(args, "input_path", None) not in (None, "-") else None,
        output_path=Path(args.output_path) if getattr(args, "output_path", None) not in (None, "-") else None,
        seed=getattr(args, "seed", 0),
        trace=getattr(args, "trace", False),
        jobs=jobs or (default_jobs() if args.subcommand in ("gen", "sweep") else 1),
        settings=settings,
    )


########################################
#          SUBCOMMANDS
########################################


def _cmd_cover(args, config: CliConfig, backend: Pm4CoverBackend) -> int:
    pole = parse_pole(_read_text(args.input_path))
    try:
        cover, trace = backend.cover(pole)
    except InternalProofViolation as e:
        _write_text(args.output_path, serialize_cover(pole, ProperCover({}), e.trace, proper=False))
        raise
    report = verify_proper_cover(pole, cover)
    if config.trace:
        backend.print_trace(trace)
    _write_text(args.output_path, serialize_cover(pole, cover, trace, proper=report.ok))
    if not report.ok:
        raise InternalProofViolation(f"engine cover failed verification:\n{report}", trace)
    return constants.EXIT_OK


def _cmd_verify(args, config: CliConfig, backend: Pm4CoverBackend) -> int:
    pole = parse_pole(_read_text(args.pole)) if args.pole else None
    parsed = parse_cover(_read_text(args.input_path), pole)
    report = verify_proper_cover(parsed.pole, parsed.cover)
    sys.stdout.write(f"{report}\n")
    if not report.ok:
        logger.error(f"Cover document {args.input_path} has {len(report.violations)} violations")
        return constants.EXIT_INVALID_INPUT
    return constants.EXIT_OK


def _cmd_gen(args, config: CliConfig, backend: Pm4CoverBackend) -> int:
    if args.enumerate:
        poles = backend.enumerate(args.n)
    else:
        spec = GenSpec(args.n, seed=args.seed, profile=args.profile, allow_digons=not args.no_digons, scramble=args.scramble)
        poles = backend.generate(spec, args.count, all_odd=args.all_odd)
    _write_text(args.output_path, "".join(serialize_pole(p) for p in poles))
    return constants.EXIT_OK


def _cmd_oracle(args, config: CliConfig, backend: Pm4CoverBackend) -> int:
    if args.input_path is not None:
        poles = parse_pole_stream(_read_text(args.input_path))
        if len(poles) != 1:
            raise DocumentError(f"expected one pole document, got {len(poles)}")
        report = backend.oracle_pole(poles[0])
        backend.print_oracle(report)
        return constants.EXIT_OK if report.cover_found else constants.EXIT_NEGATIVE_VERDICT

    report = backend.oracle_graph(_load_graph(args.graph), args.k)
    backend.print_oracle(report)
    if args.k is not None:
        if not report.coverable:
            logger.info(f"not coverable by {args.k} perfect matchings")
            return constants.EXIT_NEGATIVE_VERDICT
        return constants.EXIT_OK
    return constants.EXIT_OK if report.index is not None else constants.EXIT_NEGATIVE_VERDICT


def _cmd_split_cover(args, config: CliConfig, backend: Pm4CoverBackend) -> int:
    graph = _load_graph(args.graph)
    if args.two_factor:
        c1, c2 = parse_two_factor(_read_text(args.two_factor))
        split = split_from_circuits(graph, c1, c2)
    else:
        split = find_two_odd_circuit_factor(graph)
        if split is None:
            raise NoQualifyingTwoFactorError("no 2-factor of two odd circuits joined by exactly three edges")
    try:
        result = cover_two_circuit_graph(graph, split, config.settings.engine)
    except InternalProofViolation as e:
        _write_text(args.output_path, serialize_partial_certificate(graph, split, e.trace, str(e)))
        raise
    if config.trace:
        backend.print_trace(result.trace1)
        backend.print_trace(result.trace2)
    _write_text(args.output_path, serialize_certificate(result))
    if not result.report.ok:
        raise InternalProofViolation(f"combined matchings failed verification:\n{result.report}", result.trace1 + result.trace2)
    return constants.EXIT_OK


def _cmd_sweep(args, config: CliConfig, backend: Pm4CoverBackend) -> int:
    summary = backend.sweep(args.max_n, len2_stats=args.len2_stats)
    backend.print_sweep(summary)
    if not summary.ok:
        raise InternalProofViolation(f"engine and oracle disagree on {sum(not (r.engine_ok and r.oracle_ok) for r in summary.rows)} poles")
    return constants.EXIT_OK


COMMANDS = {
    "cover": _cmd_cover,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "oracle": _cmd_oracle,
    "split-cover": _cmd_split_cover,
    "sweep": _cmd_sweep,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Run one invocation and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit 0, usage errors exit 2 in argparse
        return constants.EXIT_OK if e.code == 0 else constants.EXIT_INVALID_INPUT

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        config = _cli_config(args)
        # reports go to stdout; subcommands that emit documents keep stdout for them
        to_stdout = args.subcommand in ("oracle", "sweep")
        stream = sys.stdout if to_stdout else sys.stderr
        backend = Pm4CoverBackend(config.settings, jobs=config.jobs, pretty_output=stream.isatty(), console=Console(stderr=not to_stdout))
        if args.size_cap is not None:
            set_oracle_limits(OracleLimits(args.size_cap, args.size_cap, args.size_cap, args.size_cap))
            logger.info(f"Oracle caps set to {args.size_cap} by --size-cap")
        return COMMANDS[args.subcommand](args, config, backend)
    except KeyboardInterrupt:
        logger.error("pm4cover interrupted by user")
        return constants.EXIT_INVALID_INPUT
    except NoQualifyingTwoFactorError as e:
        logger.error(f"{e}")
        return constants.EXIT_NEGATIVE_VERDICT
    except InternalProofViolation as e:
        logger.error(f"Internal proof-step violation: {e}")
        return constants.EXIT_INTERNAL_VIOLATION
    except INVALID_INPUT_ERRORS as e:
        logger.error(f"Invalid input: {e}")
        return constants.EXIT_INVALID_INPUT
    except Exception as e:
        logger.exception(f"pm4cover failed with error: {e}")
        return constants.EXIT_INTERNAL_VIOLATION
    finally:
        set_settings(None)


def main() -> None:
    """Console script entry point"""
    sys.exit(run())
