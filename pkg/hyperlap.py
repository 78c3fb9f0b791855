#!/usr/bin/env python3
"""
Main command-line application for hyperlap
Embedded homology, topological Laplacians and persistent Laplacians of
hypergraphs and hyperdigraphs

Version: 0.1.0
"""

import argparse
import sys
from typing import List, Optional

import config
from formats.pdb_complex import CHAIN2, TWO_EDGE_RULES

__version__ = "0.1.0"


def build_parser() -> argparse.ArgumentParser:
    global_flags = argparse.ArgumentParser(add_help=False)
    global_flags.add_argument("--zero-tol", type=float, help="relative zero-eigenvalue tolerance")
    global_flags.add_argument("--seed", type=int, help="seed for randomized checks")
    global_flags.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    # Subcommands accept the same flags after their name; SUPPRESS keeps a value given before it
    after_command = argparse.ArgumentParser(add_help=False)
    after_command.add_argument(
        "--zero-tol", type=float, default=argparse.SUPPRESS, help="relative zero-eigenvalue tolerance"
    )
    after_command.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")
    after_command.add_argument("--log-level", default=argparse.SUPPRESS, help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="hyperlap",
        description="Embedded homology and (persistent) Laplacian spectra of hyperdigraphs",
        parents=[global_flags],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    spectra = subparsers.add_parser(
        "spectra", help="Laplacian spectra of one complex", parents=[after_command]
    )
    spectra.add_argument("--input", required=True)
    spectra.add_argument("--max-dim", type=int, default=None)
    spectra.add_argument("--format", choices=["json", "csv"], default="json")
    spectra.add_argument("--output", default=None)

    persist = subparsers.add_parser(
        "persist", help="persistent Laplacians over a filtration", parents=[after_command]
    )
    persist.add_argument("--input", required=True)
    persist.add_argument("--filtration", choices=["distance", "volume", "values"], required=True)
    persist.add_argument(
        "--mode", nargs="+", default=["diagonal"], metavar="MODE",
        help="diagonal | pairs a:b,... | grid <step>",
    )
    persist.add_argument("--dims", default=None, help="comma-separated dimensions (default 0,1,2)")
    persist.add_argument("--format", choices=["json", "csv"], default="csv")
    persist.add_argument("--output", default=None)

    pdb = subparsers.add_parser(
        "pdb", help="protein-ligand binding site curves", parents=[after_command]
    )
    pdb.add_argument("--file", required=True)
    pdb.add_argument("--ligand-resname", required=True)
    pdb.add_argument("--cutoff", type=float, default=None)
    pdb.add_argument("--covalent", type=float, default=None)
    pdb.add_argument("--two-edges", choices=list(TWO_EDGE_RULES), default=CHAIN2)
    pdb.add_argument("--mode", choices=["diagonal"], default="diagonal")
    pdb.add_argument("--dims", default=None)
    pdb.add_argument("--electronegativity", default=None, help="JSON sidecar {element: value}")
    pdb.add_argument("--format", choices=["json", "csv"], default="csv")
    pdb.add_argument("--output", default=None)

    reduce = subparsers.add_parser(
        "reduce", help="reduced hypergraph and induced homology ranks", parents=[after_command]
    )
    reduce.add_argument("--input", required=True)
    reduce.add_argument("--max-dim", type=int, default=None)
    reduce.add_argument("--output", default=None)

    classify = subparsers.add_parser(
        "classify", help="object families the input belongs to", parents=[after_command]
    )
    classify.add_argument("--input", required=True)
    classify.add_argument("--output", default=None)

    check = subparsers.add_parser(
        "check", help="randomized consistency checks", parents=[after_command]
    )
    check.add_argument("--instances", type=int, default=None)
    check.add_argument("--output", default=None)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config.apply_overrides(zero_tol=args.zero_tol, seed=args.seed, log_level=args.log_level)
    logger = config.setup_logging()

    from commands import (
        check_command,
        classify_command,
        on_command_error,
        pdb_command,
        persist_command,
        reduce_command,
        spectra_command,
    )

    handlers = {
        "spectra": spectra_command,
        "persist": persist_command,
        "pdb": pdb_command,
        "reduce": reduce_command,
        "classify": classify_command,
        "check": check_command,
    }
    logger.debug(f"Running {args.command} with {vars(args)}")
    try:
        return handlers[args.command](args)
    except Exception as e:
        return on_command_error(e)


if __name__ == "__main__":
    sys.exit(main())
