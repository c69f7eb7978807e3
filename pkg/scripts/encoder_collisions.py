"""How much the numeric edge encoders merge, versus exact sequence interning.

Counts distinct encoder outputs over all binary presence sequences of length T.
"""

import itertools

from tgexpress.aggregators import decay_encode, decay_logit, weighted_encode, weighted_logit

T = 8
seqs = list(itertools.product((0, 1), repeat=T))
pow2 = [2.0 ** t for t in range(T)]
rows = [
    ("decay rate 0", lambda s: decay_logit(s, 0.0), lambda s: decay_encode(s, 0.0)),
    ("decay rate 0.7", lambda s: decay_logit(s, 0.7), lambda s: decay_encode(s, 0.7)),
    ("weights 2^(t-1)", lambda s: weighted_logit(s, pow2), lambda s: weighted_encode(s, pow2)),
]
print(f"{len(seqs)} sequences; exact interning keeps all {len(seqs)} apart")
for name, logit, enc in rows:
    print(f"{name:<16} distinct logits={len({logit(s) for s in seqs}):>4}"
          f"  distinct sigmoid outputs={len({enc(s) for s in seqs}):>4}")
