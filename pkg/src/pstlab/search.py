"""Exhaustive PST census over small graphs.

Connected graphs up to 7 vertices are enumerated one representative per
isomorphism class (canonical form: lexicographically minimal upper-triangle
bitstring over all vertex permutations).  Larger corpora are ingested from
graph6 streams.  Census results persist as JSON Lines, one record per
(graph, model, pair) with perfect transfer.
"""

from __future__ import annotations

import csv
import itertools
import json
import logging
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from .graphs import Graph, bipartite_coloring, distance, encode_graph6, parse_graph6
from .hamiltonians import adjacency_hamiltonian, laplacian_hamiltonian
from .limits import autocorrelation_zeros
from .spectral import decompose, is_integral_spectrum
from .transfer import check_transfer

log = logging.getLogger(__name__)

MAX_ENUMERATION_N = 7
MODELS = ("adjacency", "laplacian")


class NTooLarge(ValueError):
    pass


class MalformedRecord(ValueError):
    pass


# -- canonical forms and enumeration ------------------------------------------


def _pairs(n: int) -> list:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    """For every permutation p: the pair-index image of each pair under p."""
    pairs = _pairs(n)
    index = {e: i for i, e in enumerate(pairs)}
    rows = []
    for p in itertools.permutations(range(n)):
        rows.append([index[tuple(sorted((p[u], p[v])))] for u, v in pairs])
    return np.array(rows, dtype=np.int64)


def _canonical_mask(mask: int, n: int) -> int:
    """Lexicographically minimal bitstring over all vertex relabelings.

    Bit i of the mask corresponds to pair i of _pairs(n); bit order in the
    lexicographic comparison is pair order (first pair most significant).
    """
    npairs = n * (n - 1) // 2
    bits = np.array([(mask >> (npairs - 1 - i)) & 1 for i in range(npairs)],
                    dtype=np.uint64)
    table = _perm_table(n)
    weights = (np.uint64(1) << np.arange(npairs - 1, -1, -1, dtype=np.uint64))
    codes = bits[table] @ weights
    return int(codes.min())


def _mask_to_graph(mask: int, n: int) -> Graph:
    npairs = n * (n - 1) // 2
    pairs = _pairs(n)
    edges = frozenset(
        pairs[i] for i in range(npairs) if (mask >> (npairs - 1 - i)) & 1
    )
    return Graph(n, edges)


def _graph_to_mask(g: Graph) -> int:
    npairs = g.n * (g.n - 1) // 2
    index = {e: i for i, e in enumerate(_pairs(g.n))}
    mask = 0
    for e in g.edges:
        mask |= 1 << (npairs - 1 - index[e])
    return mask


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return _mask_to_graph(_canonical_mask(_graph_to_mask(g), g.n), g.n)


def _all_graph_classes(n: int) -> list:
    """Canonical masks of all (not necessarily connected) graphs, by augmentation."""
    level = [0]  # the single graph on one vertex
    for m in range(2, n + 1):
        pairs_prev = _pairs(m - 1)
        pairs_cur = _pairs(m)
        index_cur = {e: i for i, e in enumerate(pairs_cur)}
        np_prev = len(pairs_prev)
        np_cur = len(pairs_cur)
        # image of each old pair index in the new indexing
        shift = [index_cur[e] for e in pairs_prev]
        seen = set()
        for mask in level:
            base = 0
            for i in range(np_prev):
                if (mask >> (np_prev - 1 - i)) & 1:
                    base |= 1 << (np_cur - 1 - shift[i])
            new_pair_bits = [index_cur[(u, m - 1)] for u in range(m - 1)]
            for nbrs in range(1 << (m - 1)):
                cand = base
                for u in range(m - 1):
                    if (nbrs >> u) & 1:
                        cand |= 1 << (np_cur - 1 - new_pair_bits[u])
                seen.add(_canonical_mask(cand, m))
        level = sorted(seen)
    return level


def enumerate_connected_graphs(n: int):
    """One canonical representative per connected isomorphism class, n <= 7."""
    if not (1 <= n <= MAX_ENUMERATION_N):
        raise NTooLarge(
            f"built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_N}; "
            "ingest a graph6 file for larger corpora"
        )
    for mask in _all_graph_classes(n):
        g = _mask_to_graph(mask, n)
        if g.is_connected():
            yield g


def read_graph6_stream(lines):
    """Graphs from an iterable of graph6 lines (blank lines skipped)."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# -- census ---------------------------------------------------------------------


@dataclass(frozen=True)
class SearchRecord:
    graph6: str
    n: int
    model: str  # "adjacency" | "laplacian"
    source: int
    target: int
    t0: float
    transfer_phase: complex
    D: int
    M: int
    l: int
    integral_spectrum: bool
    bipartite: bool
    regular: bool
    max_degree: int

    def sort_key(self):
        return (self.graph6, self.model, self.source, self.target)


@dataclass
class CensusResult:
    records: list
    undecided: list  # (graph6, model, source, target, reason)
    failures: list  # (graph6, error message)


def _model_matrix(g: Graph, model: str) -> np.ndarray:
    if model == "adjacency":
        return adjacency_hamiltonian(g)
    if model == "laplacian":
        return laplacian_hamiltonian(g)
    raise ValueError(f"unknown model {model!r}")


def _analyze_graph(g: Graph, models) -> tuple:
    records, undecided = [], []
    g6 = encode_graph6(g)
    bip = bipartite_coloring(g).valid
    reg = g.is_regular()
    maxdeg = g.max_degree()
    for model in models:
        hint = _model_matrix(g, model)
        integral, _ = is_integral_spectrum(hint)
        h = hint.astype(float)
        dec = decompose(h)
        for a in range(g.n):
            for b in range(a + 1, g.n):
                verdict = check_transfer(h, a, b)
                if verdict.status == "undecided":
                    undecided.append((g6, model, a, b, verdict.reason))
                    continue
                if not verdict.is_perfect:
                    continue
                zeros = autocorrelation_zeros(h, a, verdict.t0)
                records.append(SearchRecord(
                    graph6=g6,
                    n=g.n,
                    model=model,
                    source=a,
                    target=b,
                    t0=verdict.t0,
                    transfer_phase=verdict.transfer_phase,
                    D=distance(g, a, b),
                    M=dec.num_eigenspaces,
                    l=len(zeros),
                    integral_spectrum=integral,
                    bipartite=bip,
                    regular=reg,
                    max_degree=maxdeg,
                ))
    return records, undecided


def census(graphs, models=MODELS, workers: int = None) -> CensusResult:
    """Run check_transfer over every (graph, model, vertex pair).

    Per-graph failures are logged and skipped; the record list is stably
    sorted by (graph6, model, source, target) so repeated runs are
    byte-identical when serialized.
    """
    graphs = list(graphs)
    result = CensusResult([], [], [])
    if workers is None:
        import os

        workers = os.cpu_count() or 1
    if workers > 1 and len(graphs) > 8:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(_analyze_graph, graphs,
                                    itertools.repeat(tuple(models))))
        for recs, und in outputs:
            result.records.extend(recs)
            result.undecided.extend(und)
    else:
        for g in graphs:
            try:
                recs, und = _analyze_graph(g, tuple(models))
            except Exception as exc:  # noqa: BLE001 - stream must not abort
                g6 = encode_graph6(g)
                log.warning("census failed on %s: %s", g6, exc)
                result.failures.append((g6, str(exc)))
                continue
            result.records.extend(recs)
            result.undecided.extend(und)
    result.records.sort(key=SearchRecord.sort_key)
    result.undecided.sort()
    return result


# -- persistence -------------------------------------------------------------------

_RECORD_FIELDS = (
    "graph6", "n", "model", "source", "target", "t0", "transfer_phase",
    "D", "M", "l", "integral_spectrum", "bipartite", "regular", "max_degree",
)


def record_to_dict(r: SearchRecord) -> dict:
    d = asdict(r)
    d["transfer_phase"] = [r.transfer_phase.real, r.transfer_phase.imag]
    return d


def record_from_dict(d: dict) -> SearchRecord:
    missing = [f for f in _RECORD_FIELDS if f not in d]
    if missing:
        raise MalformedRecord(f"missing fields: {missing}")
    phase = d["transfer_phase"]
    return SearchRecord(**{**{k: d[k] for k in _RECORD_FIELDS},
                           "transfer_phase": complex(phase[0], phase[1])})


def write_records(records, path):
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(record_to_dict(r), sort_keys=True))
            fh.write("\n")


def read_records(path) -> list:
    records = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(record_from_dict(json.loads(line)))
            except (json.JSONDecodeError, MalformedRecord, TypeError, KeyError,
                    IndexError) as exc:
                raise MalformedRecord(f"line {lineno}: {exc}") from exc
    return records


def write_records_csv(records, path):
    """Spreadsheet export; the complex phase becomes two columns."""
    fields = [f for f in _RECORD_FIELDS if f != "transfer_phase"]
    fields[fields.index("t0") + 1:fields.index("t0") + 1] = [
        "phase_re", "phase_im"
    ]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(fields)
        for r in records:
            d = record_to_dict(r)
            re_im = d.pop("transfer_phase")
            row = []
            for f in fields:
                if f == "phase_re":
                    row.append(re_im[0])
                elif f == "phase_im":
                    row.append(re_im[1])
                else:
                    row.append(d[f])
            writer.writerow(row)
