"""
Corpus command implementation for the molkit CLI.

    molkit corpus mo:3 o6 prod:mo:2,bool:1 --out corpus/
    molkit corpus --random 20 --out corpus/
"""

import argparse
import logging

import numpy as np

from src.config.settings import Settings
from src.core.constants import CORPUS_DIR
from src.core.exceptions import UnknownSpecError
from src.core.report import Report
from src.finlat import build_lattice, random_product_specs, write_corpus

logger = logging.getLogger(__name__)


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('corpus', help='Write lattice files for corpus specs')
    parser.add_argument('specs', nargs='*', help='Corpus specs (mo:N, bool:N, o6, prod:..., ...)')
    parser.add_argument('--random', type=int, default=0,
                        help='Also write N random products of Boolean(<=3) and MO_(<=4)')
    parser.add_argument('--out', default=CORPUS_DIR, help='Output directory')


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Build every spec, then write the files."""
    specs = list(args.specs)
    if args.random:
        rng = np.random.default_rng(settings.get_sampling_params()['seed'])
        specs.extend(random_product_specs(args.random, rng))
    if not specs:
        raise UnknownSpecError("no corpus specs given")

    report = Report("corpus")
    sizes = {spec: build_lattice(spec).size for spec in specs}
    paths = write_corpus(specs, args.out)
    for spec, path in zip(specs, paths):
        report.add(spec, path.is_file(), f"{sizes[spec]} elements -> {path}")
    report.data["files"] = [str(p) for p in paths]
    report.data["sizes"] = sizes
    logger.info(f"Wrote {len(paths)} lattice files to {args.out}")
    return report.finish()
