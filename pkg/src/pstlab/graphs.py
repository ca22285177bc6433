"""Undirected simple graphs: metrics, products, and graph6 serialization.

Vertices are integers 0..n-1; edges are unordered pairs stored as (u, v)
with u < v.  Product graphs index vertex (i, j) as i * n2 + j so that the
adjacency matrices satisfy the usual Kronecker identities.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np


class MalformedGraph6(ValueError):
    """Raised on graph6 input that violates the format."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        edges = frozenset(_normalize_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> list:
        return sorted(
            (b if a == v else a) for a, b in self.edges if v in (a, b)
        )

    def degrees(self) -> list:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def max_degree(self) -> int:
        return max(self.degrees())

    def is_regular(self) -> bool:
        d = self.degrees()
        return min(d) == max(d)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def is_connected(self) -> bool:
        return diameter(self) is not None

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": self.sorted_edges()})

    @staticmethod
    def from_json(text: str) -> "Graph":
        data = json.loads(text)
        return Graph(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))


# -- standard constructions ------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def hypercube_graph(d: int) -> Graph:
    """d-fold Cartesian power of K2."""
    g = complete_graph(2)
    for _ in range(d - 1):
        g = cartesian_product(g, complete_graph(2))
    return g


# -- metrics ---------------------------------------------------------------


def distance(g: Graph, u: int, v: int):
    """Shortest-path distance by BFS; None when u and v are disconnected."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"vertex out of range for n={g.n}")
    if u == v:
        return 0
    adj = [[] for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None


def diameter(g: Graph):
    """Maximum pairwise distance; None when g is disconnected."""
    best = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            d = distance(g, u, v)
            if d is None:
                return None
            best = max(best, d)
    return best


@dataclass(frozen=True)
class BipartiteColoring:
    colors: tuple  # "R"/"B" per vertex; meaningful only when valid
    valid: bool


def bipartite_coloring(g: Graph) -> BipartiteColoring:
    """2-color by BFS; vertex 0 of each component is red.

    valid is False exactly when some edge joins equal colors (odd cycle).
    """
    adj = [[] for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    color = [None] * g.n
    valid = True
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = "R"
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] is None:
                    color[y] = "B" if color[x] == "R" else "R"
                    queue.append(y)
                elif color[y] == color[x]:
                    valid = False
    return BipartiteColoring(tuple(color), valid)


# -- products and combinations ----------------------------------------------


def _product_vertex(i: int, j: int, n2: int) -> int:
    return i * n2 + j


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """(u1,u2) ~ (v1,v2) iff one coordinate is equal and the other adjacent.

    Adjacency satisfies A = A1 (x) I + I (x) A2.
    """
    edges = set()
    for u1, v1 in g1.edges:
        for j in range(g2.n):
            edges.add(_normalize_edge(_product_vertex(u1, j, g2.n),
                                      _product_vertex(v1, j, g2.n)))
    for u2, v2 in g2.edges:
        for i in range(g1.n):
            edges.add(_normalize_edge(_product_vertex(i, u2, g2.n),
                                      _product_vertex(i, v2, g2.n)))
    return Graph(g1.n * g2.n, frozenset(edges))


def conjunction(g1: Graph, g2: Graph) -> Graph:
    """Tensor product: both coordinates adjacent.  A = A1 (x) A2."""
    edges = set()
    for u1, v1 in g1.edges:
        for u2, v2 in g2.edges:
            edges.add(_normalize_edge(_product_vertex(u1, u2, g2.n),
                                      _product_vertex(v1, v2, g2.n)))
            edges.add(_normalize_edge(_product_vertex(u1, v2, g2.n),
                                      _product_vertex(v1, u2, g2.n)))
    return Graph(g1.n * g2.n, frozenset(edges))


def strong_product(g1: Graph, g2: Graph) -> Graph:
    """Union of the Cartesian and tensor product edge sets."""
    c = cartesian_product(g1, g2)
    t = conjunction(g1, g2)
    return Graph(c.n, c.edges | t.edges)


def join(g1: Graph, g2: Graph) -> tuple:
    """Disjoint union plus all cross edges.

    Returns (graph, square_ok).  square_ok reports whether both inputs are
    regular and (d1-d2)^2 + 4*n1*n2 is a perfect square (exact integers);
    it is False whenever either input is irregular.
    """
    edges = set(g1.edges)
    for u, v in g2.edges:
        edges.add((u + g1.n, v + g1.n))
    for u in range(g1.n):
        for v in range(g2.n):
            edges.add((u, v + g1.n))
    g = Graph(g1.n + g2.n, frozenset(edges))
    square_ok = False
    if g1.is_regular() and g2.is_regular():
        d1 = g1.degrees()[0]
        d2 = g2.degrees()[0]
        val = (d1 - d2) ** 2 + 4 * g1.n * g2.n
        square_ok = math.isqrt(val) ** 2 == val
    return g, square_ok


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    )
    return Graph(g.n, edges)


# -- graph6 ------------------------------------------------------------------

_G6_MAX = 62  # single-byte size encoding only


def _pair_bits(g: Graph) -> list:
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    return bits


def encode_graph6(g: Graph) -> str:
    """Encode in the standard graph6 format (n < 63 only)."""
    if g.n > _G6_MAX:
        raise ValueError(f"graph6 encoding limited to n <= {_G6_MAX}")
    bits = _pair_bits(g)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = (word << 1) | b
        out.append(chr(word + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse a single graph6 line (n < 63)."""
    text = text.strip()
    if not text:
        raise MalformedGraph6("empty graph6 string")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    for ch in text:
        if not (63 <= ord(ch) <= 126):
            raise MalformedGraph6(f"byte {ord(ch)} out of graph6 range")
    n = ord(text[0]) - 63
    if n > _G6_MAX:
        raise MalformedGraph6("multi-byte graph6 sizes not supported")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        word = ord(ch) - 63
        bits.extend((word >> k) & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = set()
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.add((u, v))
            idx += 1
    return Graph(n, frozenset(edges))
