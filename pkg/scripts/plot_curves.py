#!/usr/bin/env python3
"""Plot the training accuracy and loss curves from a metrics CSV.

  python scripts/plot_curves.py --metrics metrics.csv --out curves.png
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from clickguard.trainer import load_metrics


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--metrics", type=Path, required=True)
    parser.add_argument("--out", type=Path, required=True)
    args = parser.parse_args()

    history = load_metrics(args.metrics)
    epochs = [m.epoch for m in history]

    fig, (ax_acc, ax_loss) = plt.subplots(1, 2, figsize=(10, 4))
    ax_acc.plot(epochs, [m.train_accuracy for m in history], color="tab:blue")
    ax_acc.set_title("Training accuracy (higher is better)")
    ax_acc.set_xlabel("epoch")
    ax_acc.set_ylim(0, 1)
    ax_loss.plot(epochs, [m.train_loss for m in history], color="tab:red")
    ax_loss.set_title("Training loss (lower is better)")
    ax_loss.set_xlabel("epoch")
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
