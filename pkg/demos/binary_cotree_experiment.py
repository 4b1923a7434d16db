"""
Linearity against contiguity on complete binary cotrees
=======================================================

Each row encodes the complete binary cotree of height h, checks sampled
queries against the tree, and reports the encoder's order count next to
contiguity bounds and storage sizes.
"""

import time

import numpy as np

from cographlin import encode, gen_binary_cotree
from cographlin.experiment import ExperimentRow, bench_queries, experiment_ratio

t0 = time.perf_counter()
rows = experiment_ratio(12)
print(ExperimentRow.HEADER)
for row in rows:
    print(row)
print("table took %.1fs" % (time.perf_counter() - t0))

# order count stays logarithmic while n doubles each row
h = np.array([r.h for r in rows])
p = np.array([r.p_encoder for r in rows])
print("p / h:", np.round(p / h, 2))

# query latency on the largest tree
t = gen_binary_cotree(12)
print(bench_queries(encode(t), t, 1000, seed=1))
