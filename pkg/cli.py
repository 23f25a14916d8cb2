"""
Command-line front end.

    python cli.py pfaffian graph.txt [--verify] [--format text|dot|json]
    python cli.py decompose graph.txt [--format json|dot]
    python cli.py verify graph.txt orientation.txt
    python cli.py polya matrix.txt
    python cli.py even digraph.txt
    python cli.py sns matrix.txt

Exit codes: 0 affirmative answer, 1 negative answer, 2 unreadable or invalid
input, 3 failed verification, 4 size limit exceeded. Results go to stdout,
logs to stderr.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from repositories.graph_file_repository import (
    dump_tree_json,
    embedding_to_dot,
    format_matrix,
    format_orientation,
    format_weighting,
    load,
    orientation_to_dot,
    parse_digraph,
    parse_graph,
    parse_orientation,
    parse_sign_matrix,
    parse_zero_one_matrix,
    read_text,
    tree_to_dict,
)
from schemas.cli_schemas import CliConfig, OutputFormat
from services.apps_service import is_even_digraph, polya_matrix, sign_nonsingular
from services.decompose_service import decompose_graph
from services.oracle_service import find_pfaffian_bruteforce, is_pfaffian_orientation, verify_orientation
from services.orient_service import COMPONENT_DEPTH, pfaffian_orientation
from services.planar_service import planar_embed
from utils.exceptions import (
    AlignmentError,
    PfaffianError,
    SizeLimitExceeded,
    SpliceError,
    VerificationError,
)
from utils.logging_config import configure_logging

logger = logging.getLogger("cli")

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_VERIFICATION = 3
EXIT_LIMIT = 4


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        oracle_limit=args.oracle_limit,
        brute_limit=args.brute_limit,
        verify=args.verify,
        format=args.format,
    )


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_pfaffian(args: argparse.Namespace, config: CliConfig) -> int:
    graph = load(parse_graph, read_text(args.graph))
    verdict = pfaffian_orientation(graph)

    if config.verify:
        if verdict.pfaffian:
            if verify_orientation(graph, verdict.orientation, config.oracle_limit) is False:
                raise VerificationError("orientation failed the permanent/determinant check")
        elif graph.cyclomatic_number() <= config.brute_limit and graph.n_a <= config.oracle_limit:
            if find_pfaffian_bruteforce(graph, config.brute_limit) is not None:
                raise VerificationError("brute-force search found a Pfaffian orientation")
        else:
            logger.warning("graph is too large to confirm the negative answer")

    if config.format is OutputFormat.JSON:
        payload = {
            "pfaffian": verdict.pfaffian,
            "orientation": format_orientation(verdict.orientation).splitlines() if verdict.pfaffian else None,
            "reason": None if verdict.pfaffian else verdict.reason.describe(COMPONENT_DEPTH),
            "tree": tree_to_dict(verdict.tree),
        }
        _emit(json.dumps(payload, indent=2) + "\n")
    elif not verdict.pfaffian:
        _emit(f"NONE: {verdict.reason.describe(COMPONENT_DEPTH)}\n")
    elif config.format is OutputFormat.DOT:
        _emit(orientation_to_dot(verdict.orientation))
    else:
        _emit(format_orientation(verdict.orientation))
    return EXIT_YES if verdict.pfaffian else EXIT_NO


def cmd_decompose(args: argparse.Namespace, config: CliConfig) -> int:
    tree = decompose_graph(load(parse_graph, read_text(args.graph)))
    if config.format is not OutputFormat.DOT:
        _emit(dump_tree_json(tree))
        return EXIT_YES
    # one DOT graph per planar brace, labelled with input vertices
    for i, leaf in enumerate(tree.leaves(), start=1):
        embedding = planar_embed(leaf.graph)
        if embedding is None:
            _emit(f"// brace{i} is not planar\n")
        else:
            _emit(embedding_to_dot(embedding, name=f"brace{i}", origin=leaf.origin))
    return EXIT_YES


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    graph = load(parse_graph, read_text(args.graph))
    orientation = parse_orientation(read_text(args.orientation), graph)
    ok = is_pfaffian_orientation(graph, orientation, config.oracle_limit)
    _emit("PFAFFIAN\n" if ok else "NOT-PFAFFIAN\n")
    return EXIT_YES if ok else EXIT_NO


def cmd_polya(args: argparse.Namespace, config: CliConfig) -> int:
    signed = polya_matrix(load(parse_zero_one_matrix, read_text(args.matrix)), config.oracle_limit)
    if signed is None:
        _emit("NONE\n")
        return EXIT_NO
    _emit(format_matrix(signed.rows()))
    return EXIT_YES


def cmd_even(args: argparse.Namespace, config: CliConfig) -> int:
    verdict = is_even_digraph(load(parse_digraph, read_text(args.digraph)))
    if verdict.even:
        _emit("EVEN\n")
        return EXIT_NO
    _emit("NOT-EVEN\n" + format_weighting(verdict.witness))
    return EXIT_YES


def cmd_sns(args: argparse.Namespace, config: CliConfig) -> int:
    ok = sign_nonsingular(load(parse_sign_matrix, read_text(args.matrix)), config.oracle_limit)
    _emit("SNS\n" if ok else "NOT-SNS\n")
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verify", action="store_true", help="Check results with the exact oracle when feasible")
    common.add_argument("--oracle-limit", type=int, default=24, help="Largest matrix order checked exactly (default: 24)")
    common.add_argument(
        "--brute-limit", type=int, default=20,
        help="Largest cyclomatic number for the brute-force search (default: 20)",
    )
    common.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )

    parser = argparse.ArgumentParser(
        description="Pfaffian orientations of bipartite graphs and their applications.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("pfaffian", parents=[common], help="Find a Pfaffian orientation or explain why none exists")
    p.add_argument("graph", help="Bipartite graph file")
    p.set_defaults(handler=cmd_pfaffian)

    p = subparsers.add_parser(
        "decompose", parents=[common], help="Print the brace decomposition as JSON, or the planar braces as DOT"
    )
    p.add_argument("graph", help="Bipartite graph file")
    p.set_defaults(handler=cmd_decompose)

    p = subparsers.add_parser("verify", parents=[common], help="Check an orientation with the exact oracle")
    p.add_argument("graph", help="Bipartite graph file")
    p.add_argument("orientation", help="Orientation file")
    p.set_defaults(handler=cmd_verify)

    p = subparsers.add_parser("polya", parents=[common], help="Sign a 0/1 matrix so that det = per")
    p.add_argument("matrix", help="Matrix file")
    p.set_defaults(handler=cmd_polya)

    p = subparsers.add_parser("even", parents=[common], help="Decide whether a digraph is even")
    p.add_argument("digraph", help="Digraph file")
    p.set_defaults(handler=cmd_even)

    p = subparsers.add_parser("sns", parents=[common], help="Decide whether a sign matrix is sign-nonsingular")
    p.add_argument("matrix", help="Matrix file")
    p.set_defaults(handler=cmd_sns)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging()
    try:
        config = _config(args)
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc.errors()[0]['msg']}\n")
        return EXIT_INPUT
    try:
        return args.handler(args, config)
    except SizeLimitExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except (VerificationError, SpliceError, AlignmentError) as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFICATION
    except PfaffianError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
