#!/usr/bin/env python3
"""Generate the synthetic headline corpus in either ingestion format.

Examples:
  python scripts/make_corpus.py --out-dir data/
  python scripts/make_corpus.py --format tsv --out data/corpus.tsv --size 2000
"""

import argparse
from pathlib import Path

from clickguard.datagen import generate_corpus, write_tsv, write_two_file


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=32_000)
    parser.add_argument("--seed", type=int, default=1234)
    parser.add_argument("--format", choices=("two-file", "tsv"), default="two-file")
    parser.add_argument("--out-dir", type=Path, help="directory for clickbait.txt/news.txt")
    parser.add_argument("--out", type=Path, help="output path for the tsv format")
    args = parser.parse_args()

    corpus = generate_corpus(size=args.size, seed=args.seed)
    if args.format == "tsv":
        if not args.out:
            parser.error("--format tsv needs --out")
        write_tsv(corpus, args.out)
        print(f"wrote {len(corpus)} headlines to {args.out}")
    else:
        out_dir = args.out_dir or Path(".")
        out_dir.mkdir(parents=True, exist_ok=True)
        pos = out_dir / "clickbait.txt"
        neg = out_dir / "news.txt"
        write_two_file(corpus, pos, neg)
        print(f"wrote {len(corpus)} headlines to {pos} and {neg}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
