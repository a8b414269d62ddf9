# ----------------------------------------------------------------------------
#  File:        main.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Command-line entry point for SeqBlocks
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import argparse
import json
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from loguru import logger

from .blocks.subspaces import union_is_subspace
from .blocks.taxonomy import (
    Block, banach_share, block_of, block_table, parse_union, regions, representative,
    representative_shifted,
)
from .connectors.micro import micro_matrix
from .connectors.patterns import Obstruction, connect
from .errors import DomainError, ExpressionError, SeqBlocksError
from .expressions.canonical import compile_sequence, render
from .graphs.adjacency import AdjMatrix7
from .graphs.dot_export import export_dot
from .graphs.metrics import contingency, metrics
from .runtime.logger import CommandLogger, configure_logging
from .runtime.schemas import validate_document
from .runtime.settings import Settings
from .sequences.limits import EstimatorConfig, estimate_profile, exact_profile
from .transfer.coding import Coder, CoderConfig, encode
from .transfer.maps import macro_matrix, recover_code, transfer

GRAMMAR = """\
expression grammar:
  expr      := term (('+' | '-') term)*
  term      := unary (('*' | '/') unary)*      divisors: nonzero constants or c*n^k
  unary     := '-' unary | power
  power     := atom (('^' | '**') unary)?       exponent: constant integer
  atom      := number | 'n' | '(' expr ')'
             | 'sinq(n)' | 'altsign(n)'
             | 'piecewise(mod m; e_0, ..., e_(m-1))'   branch r applies when n % m == r
  sinq(n) = sin(n*pi/2) exactly, altsign(n) = (-1)^n
"""


@dataclass
class CommandResult:
    """Outcome of one command: status, payload and whether the payload is text."""

    command: str
    status: str
    payload: object
    text: bool = False

    @property
    def exit_code(self):
        return 1 if self.status == "error" else 0

    def document(self):
        return {"status": self.status, **self.payload}

    def render(self):
        if self.text:
            return self.payload
        return json.dumps(self.document(), sort_keys=True, indent=2) + "\n"


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="Path to a settings.yaml")
    common.add_argument("--verbose", action="store_true", help="Enable debug logging on stderr")
    common.add_argument("--horizon", type=int, default=None, help="Estimator horizon N")
    common.add_argument("--divergence-threshold", type=Fraction, default=None,
                        help="Estimator divergence threshold M")
    common.add_argument("--window", type=Fraction, default=None,
                        help="Estimator window fraction f, e.g. 1/2")
    common.add_argument("--coder", choices=[c.value for c in Coder], default=None,
                        help="Sequence coder (default from settings)")
    common.add_argument("--depth", type=int, default=None, help="Coder depth K")
    common.add_argument("--digits", type=int, default=None, help="Interleaved coder digits D")
    return common


def build_parser():
    """Argument parser with one subcommand per operation."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="seqblocks",
        description="SeqBlocks - limit-profile blocks of real sequences and their connections",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify_cmd = commands.add_parser("classify", parents=[common], help="Profile and block of a sequence")
    classify_cmd.add_argument("expression")
    classify_cmd.add_argument("--numeric", action="store_true", help="Use the finite-window estimator")

    representative_cmd = commands.add_parser("representative", parents=[common], help="Block representative")
    representative_cmd.add_argument("block")
    representative_cmd.add_argument("--shift", type=Fraction, default=None, help="Constant in (0, 1) to add")

    connect_cmd = commands.add_parser("connect", parents=[common], help="Connector or obstruction")
    connect_cmd.add_argument("expression")
    connect_cmd.add_argument("--target", required=True)

    transfer_cmd = commands.add_parser("transfer", parents=[common], help="Transfer a sequence between blocks")
    transfer_cmd.add_argument("expression")
    transfer_cmd.add_argument("--from", dest="source", required=True)
    transfer_cmd.add_argument("--to", dest="target", required=True)

    code_cmd = commands.add_parser("code", parents=[common], help="Exact code of a sequence prefix")
    code_cmd.add_argument("expression")

    subspace_cmd = commands.add_parser("subspace", parents=[common], help="Is a union of blocks a subspace")
    subspace_cmd.add_argument("--union", required=True, help="Comma-separated blocks, e.g. A,B,G")

    matrix_cmd = commands.add_parser("matrix", parents=[common], help="Macro or micro adjacency matrix")
    matrix_cmd.add_argument("--level", choices=["macro", "micro"], required=True)
    matrix_cmd.add_argument("--format", choices=["csv", "json"], default="json")

    commands.add_parser("metrics", parents=[common], help="Similarity of the micro to the macro graph")

    graph_cmd = commands.add_parser("graph", parents=[common], help="DOT rendering of a block graph")
    graph_cmd.add_argument("--level", choices=["macro", "micro"], required=True)
    graph_cmd.add_argument("--format", choices=["dot"], default="dot")

    commands.add_parser("regions", parents=[common], help="Region of every block in the profile plane")
    return parser


def _estimator_config(args, settings):
    overrides = {
        "horizon": args.horizon,
        "divergence_threshold": args.divergence_threshold,
        "window": args.window,
    }
    return replace(
        EstimatorConfig.from_settings(settings),
        **{key: value for key, value in overrides.items() if value is not None},
    )


def _coder_config(args, settings):
    config = CoderConfig.from_settings(settings)
    return CoderConfig(
        coder=Coder(args.coder) if args.coder else config.coder,
        depth=args.depth if args.depth is not None else config.depth,
        digits=args.digits if args.digits is not None else config.digits,
    )


def _extra_members(settings):
    return int(settings.get("certification", {}).get("extra_members", 3))


def cmd_classify(args, settings):
    seq = compile_sequence(args.expression)
    if args.numeric:
        profile = estimate_profile(seq, _estimator_config(args, settings))
    else:
        profile = exact_profile(seq)
    block = block_of(profile)
    return "ok", {
        "expression": args.expression,
        "canonical": render(seq),
        "profile": profile.to_json(),
        "block": str(block),
        "method": "numeric" if args.numeric else "exact",
    }


def cmd_representative(args, settings):
    block = Block.parse(args.block)
    if args.shift is None:
        seq = representative(block)
        expression = block_table().region(block)["representative"]
    else:
        seq = representative_shifted(block, args.shift)
        expression = render(seq)
    return "ok", {
        "block": str(block),
        "expression": expression,
        "canonical": render(seq),
        "profile": exact_profile(seq).to_json(),
    }


def cmd_connect(args, settings):
    seq = compile_sequence(args.expression)
    outcome = connect(seq, Block.parse(args.target))
    status = "obstruction" if isinstance(outcome, Obstruction) else "ok"
    return status, outcome.to_json()


def cmd_transfer(args, settings):
    seq = compile_sequence(args.expression)
    source, target = Block.parse(args.source), Block.parse(args.target)
    image = transfer(source, target, seq, _coder_config(args, settings))
    return "ok", {
        **image.to_json(),
        "source": str(source),
        "expression": args.expression,
        "recovered_code": str(recover_code(target, image.seq)),
    }


def cmd_code(args, settings):
    seq = compile_sequence(args.expression)
    code = encode(seq, _coder_config(args, settings))
    return "ok", {"expression": args.expression, **code.to_json()}


def cmd_subspace(args, settings):
    blocks = parse_union(args.union)
    if not blocks:
        raise DomainError("the union must contain at least one block")
    return "ok", union_is_subspace(blocks).to_json()


def _matrix(level, args, settings):
    if level == "macro":
        return macro_matrix(_coder_config(args, settings), _extra_members(settings)), None
    certified = micro_matrix(_extra_members(settings), progress=args.verbose)
    return certified.matrix, certified


def cmd_matrix(args, settings):
    matrix, certified = _matrix(args.level, args, settings)
    if args.format == "csv":
        return "ok", matrix.to_csv()
    payload = certified.to_json() if certified else matrix.to_json()
    return "ok", {"level": args.level, "ones": matrix.ones(), **payload}


def cmd_metrics(args, settings):
    u, _ = _matrix("macro", args, settings)
    v, _ = _matrix("micro", args, settings)
    stats = metrics(contingency(u, v))
    return "ok", {
        **stats.to_json(),
        "v_subgraph_of_u": v.is_subgraph_of(u),
        "matches_reference": u == AdjMatrix7.macro_reference() and v == AdjMatrix7.micro_reference(),
        "banach_share": str(banach_share()),
    }


def cmd_graph(args, settings):
    matrix, _ = _matrix(args.level, args, settings)
    return "ok", export_dot(matrix, args.level)


def cmd_regions(args, settings):
    return "ok", {"regions": regions(), "banach_share": str(banach_share())}


COMMANDS = {
    "classify": cmd_classify,
    "representative": cmd_representative,
    "connect": cmd_connect,
    "transfer": cmd_transfer,
    "code": cmd_code,
    "subspace": cmd_subspace,
    "matrix": cmd_matrix,
    "metrics": cmd_metrics,
    "graph": cmd_graph,
    "regions": cmd_regions,
}

TEXT_FORMATS = ("csv", "dot")


def run(argv=None):
    """
    Parse arguments and run one command.

    Args:
        argv: Argument list, sys.argv[1:] when omitted

    Returns:
        CommandResult: Errors from SeqBlocks are folded into an error result
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)

    settings = Settings(args.config)
    log_settings = settings.get("logging", {})
    configure_logging(args.verbose or log_settings.get("verbose", False), log_settings.get("log_dir"))
    command_logger = CommandLogger(log_settings.get("log_dir"))

    try:
        status, payload = COMMANDS[args.command](args, settings)
        text = getattr(args, "format", None) in TEXT_FORMATS
        result = CommandResult(args.command, status, payload, text)
        if not result.text:
            validate_document(args.command, result.document())
    except ExpressionError as e:
        logger.error(f"Malformed expression: {e}")
        result = CommandResult(args.command, "error", {
            "error": str(e), "offset": e.offset, "expected": list(e.expected),
        })
    except SeqBlocksError as e:
        logger.error(f"Error in {args.command}: {e}")
        result = CommandResult(args.command, "error", {"error": str(e)})
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}")
        raise

    command_logger.log_command(args.command, argv, result.status, result.payload)
    return result


def main(argv=None):
    """Main entry point for the application."""
    result = run(argv)
    sys.stdout.write(result.render())
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
