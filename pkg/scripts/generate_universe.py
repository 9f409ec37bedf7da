import argparse
import logging
import sys

from cyclic_mates.madj.catalog import random_universe
from cyclic_mates.madj.documents import dumps


def init_argparse() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Writes a seeded random universe/1 document.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--max-chain",
        type=int,
        default=3,
        help="The chains used have between 2 and max-chain + 1 elements.",
    )
    parser.add_argument(
        "-o",
        "--output",
        help="File to write; standard output when omitted.",
    )
    return parser


def write_universe(seed: int, max_chain: int, output: str, verbose: bool) -> None:
    text = dumps(random_universe(seed, max_chain), indent=2)
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)
        f.write("\n")
    if verbose:
        print(f"Wrote universe for seed {seed} to {output}")


if __name__ == "__main__":
    parser = init_argparse()
    args = parser.parse_args()
    if args.verbose:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG)
    if args.output:
        write_universe(args.seed, args.max_chain, args.output, args.verbose)
    else:
        print(dumps(random_universe(args.seed, args.max_chain), indent=2))
