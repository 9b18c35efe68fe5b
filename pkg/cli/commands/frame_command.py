"""
Frame command implementation for the molkit CLI.

    molkit frame check --frame 4:2 [--form F.mat]
    molkit frame canonical --frame 3
    molkit frame ring-op --op add|mul|neg|inv|star --frame 3 --args 2 1/2
    molkit frame oracle --frame 3 --args 0 1 -1 2 1/2

A frame spec ``N`` or ``N:M`` names the canonical N-frame of L(Q^{N·M})
with M x M coordinate blocks. Frames are built only in subspace lattices.
"""

import argparse
import logging
from typing import Tuple

from cli.commands.common import form_arg, rational_list
from src.config.settings import Settings
from src.core.exceptions import ParseError
from src.core.report import Report
from src.frames import RING_OPS, Frame, apply_ring_op, canonical_frame, oracle_sweep
from src.subspaces import write_subspace

logger = logging.getLogger(__name__)

ACTIONS = ("check", "canonical", "ring-op", "oracle")
DEFAULT_ORACLE_SAMPLES = ("0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "5", "1/3")


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('frame', help='Frames and coordinate rings')
    parser.add_argument('action', choices=ACTIONS, help='Operation')
    parser.add_argument('--frame', default='3', help='Frame spec N or N:M (default 3)')
    parser.add_argument('--form', help='Gram matrix file or diag:a,b,...')
    parser.add_argument('--op', choices=RING_OPS, help='Ring operation for ring-op')
    parser.add_argument('--args', nargs='*', default=[],
                        help='Operands: matrix files, or rationals read as scalar blocks')
    parser.add_argument('--i', type=int, default=1, help='First index of the coordinate domain')
    parser.add_argument('--j', type=int, default=2, help='Second index of the coordinate domain')
    parser.add_argument('--aux', type=int, help='Auxiliary index (least unused by default)')


def frame_spec(text: str) -> Tuple[int, int]:
    """``N`` or ``N:M`` as (order, block size)."""
    order, _, block = text.partition(':')
    if not order.isdigit() or (block and not block.isdigit()):
        raise ParseError(f"expected a frame spec N or N:M, got {text!r}")
    return int(order), int(block) if block else 1


def build_frame(args: argparse.Namespace) -> Frame:
    n, m = frame_spec(args.frame)
    return canonical_frame(n, m, form_arg(args.form))


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Build the frame, then run the requested operation."""
    frame = build_frame(args)
    if args.action == "ring-op":
        if args.op is None:
            raise ParseError("ring-op needs --op")
        operands = rational_list(args.args, frame.block_size)
        return apply_ring_op(args.op, frame, operands, args.i, args.j, args.aux)
    if args.action == "oracle":
        samples = rational_list(args.args or DEFAULT_ORACLE_SAMPLES, frame.block_size)
        ops = RING_OPS if frame.spanning and frame.orthogonal else RING_OPS[:-1]
        report = oracle_sweep(frame, samples, ops, args.i, args.j)
        report.command = "frame oracle"
        return report

    report = Report(f"frame {args.action}")
    report.add("axioms", frame.valid, f"{frame.n}-frame axioms hold exactly")
    report.add("spanning", frame.spanning, "the a_i meet to 0 and join to 1")
    report.add("orthogonal", frame.orthogonal, "a_j <= a_k^perp for j != k")
    report.data.update(frame.to_dict())
    if args.action == "canonical":
        report.data["elements"] = {name: write_subspace(s)
                                   for name, s in frame.elements().items()}
    logger.info(f"Built {frame}")
    return report.finish()
