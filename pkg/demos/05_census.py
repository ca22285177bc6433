"""Exhaustive census: which small graphs transfer perfectly, and where?

Enumerates one representative per isomorphism class of connected graphs up
to 6 vertices, runs the decision procedure on every vertex pair under both
the adjacency and Laplacian models, and writes the surviving records to
JSON Lines.
"""

import collections
import sys
import tempfile
from pathlib import Path

from pstlab import census, enumerate_connected_graphs, read_records, write_records

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 6

graphs = [g for n in range(2, max_n + 1) for g in enumerate_connected_graphs(n)]
print(f"connected graph classes with 2 <= n <= {max_n}: {len(graphs)}")

result = census(graphs, workers=1)
print(f"perfect records: {len(result.records)}, "
      f"undecided: {len(result.undecided)}, failures: {len(result.failures)}")

by_model = collections.Counter(r.model for r in result.records)
print(f"by model: {dict(by_model)}")
print()
print(f"{'graph6':>8} {'model':>10} {'pair':>7} {'t0':>10} "
      f"{'phase':>14} {'D':>2} {'M':>2} {'l':>2} {'integral':>8}")
for r in result.records:
    print(f"{r.graph6:>8} {r.model:>10} {f'{r.source}-{r.target}':>7} "
          f"{r.t0:>10.6f} {f'{r.transfer_phase:.3f}':>14} "
          f"{r.D:>2} {r.M:>2} {r.l:>2} {str(r.integral_spectrum):>8}")

out = Path(tempfile.gettempdir()) / "pst_census.jsonl"
write_records(result.records, out)
assert read_records(out) == result.records
print()
print(f"records round-tripped through {out}")
