#!/usr/bin/env python3
"""Materialise the seeded train/test split as two TSV files.

Useful for evaluating a trained model on exactly the held-out slice:
  python scripts/split_corpus.py --data data/clickbait.txt data/news.txt \
      --seed 0 --train-count 26666 --train-out train.tsv --test-out test.tsv
  clickguard eval --model model.json --data test.tsv
"""

import argparse
from pathlib import Path

from clickguard.datagen import write_tsv
from clickguard.trainer import load_dataset, split_dataset


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", nargs="+", required=True, type=Path)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--train-count", type=int, default=26_666)
    parser.add_argument("--train-out", type=Path, required=True)
    parser.add_argument("--test-out", type=Path, required=True)
    args = parser.parse_args()

    examples = load_dataset(args.data)
    train_set, test_set = split_dataset(examples, args.seed, args.train_count)
    write_tsv(train_set, args.train_out)
    write_tsv(test_set, args.test_out)
    print(f"train: {len(train_set)} -> {args.train_out}")
    print(f"test: {len(test_set)} -> {args.test_out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
