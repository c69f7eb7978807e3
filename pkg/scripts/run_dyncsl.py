"""Run the DynamicCSL separation experiment and print a per-variant table.

    python scripts/run_dyncsl.py --seed 7 --layers 2 --report dyncsl.json
"""

import argparse
from collections import Counter

from tgexpress.harness import run_experiment_dyncsl


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--layers", type=int, default=2)
    ap.add_argument("--report")
    args = ap.parse_args()

    rep = run_experiment_dyncsl(args.seed, args.layers, timing=True)
    print(f"seed={rep.seed} samples={len(rep.samples)} runtime={rep.runtime_ms} ms")
    print(f"{'variant':<18}{'accuracy':>10}{'digests':>9}{'split pairs':>13}{'ceiling':>9}")
    for name, v in rep.variants.items():
        acc = "-" if v["accuracy"] is None else f"{v['accuracy']:.3f}"
        print(f"{name:<18}{acc:>10}{v['distinct_digests']:>9}"
              f"{v['distinguished_pairs']:>8}/{v['total_pairs']:<5}{v['digest_ceiling']:>8.3f}")
    print("labels:", dict(sorted(Counter(s["label"] for s in rep.samples).items())))
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(rep.to_json())


if __name__ == "__main__":
    main()
