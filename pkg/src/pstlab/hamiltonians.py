"""Single-excitation Hamiltonian matrices built from coupling graphs.

All constructors return plain numpy arrays: exact int64 matrices for the
uniformly coupled models (adjacency / Laplacian) and complex Hermitian
matrices for weighted couplings with on-site fields.
"""

from __future__ import annotations

import math

import numpy as np

from .graphs import Graph, _normalize_edge


class EdgeNotInGraph(ValueError):
    """A coupling was supplied for a pair that is not an edge."""


class NonPositiveCoupling(ValueError):
    """Chain couplings must be strictly positive."""


def adjacency_hamiltonian(g: Graph) -> np.ndarray:
    """H1 = A for the uniformly coupled XX model."""
    return g.adjacency()


def laplacian_hamiltonian(g: Graph) -> np.ndarray:
    """H1 = L = D - A for the uniformly coupled Heisenberg model."""
    a = g.adjacency()
    return np.diag(a.sum(axis=1)) - a


def weighted_hamiltonian(g: Graph, couplings: dict, fields=None) -> np.ndarray:
    """Hermitian H1 with couplings J on the edges of g and fields B on the diagonal.

    couplings maps an edge (u, v) to J_{uv}; the stored value applies to the
    (u, v) entry with u < v and the mirror entry is its conjugate.
    """
    h = np.zeros((g.n, g.n), dtype=complex)
    for (u, v), j in couplings.items():
        e = _normalize_edge(u, v)
        if e not in g.edges:
            raise EdgeNotInGraph(f"({u},{v}) is not an edge of the graph")
        if (u, v) != e:
            j = np.conjugate(j)
        h[e[0], e[1]] = j
        h[e[1], e[0]] = np.conjugate(j)
    if fields is not None:
        for v, b in (fields.items() if isinstance(fields, dict) else enumerate(fields)):
            h[v, v] = float(b)
    return h


def chain_hamiltonian(couplings, fields=None) -> np.ndarray:
    """Open chain on len(couplings)+1 sites with nearest-neighbour couplings."""
    from .graphs import path_graph

    n = len(couplings) + 1
    g = path_graph(n)
    cmap = {(i, i + 1): j for i, j in enumerate(couplings)}
    return weighted_hamiltonian(g, cmap, fields)


def is_real_hamiltonian(h: np.ndarray, tol: float = 0.0) -> bool:
    return bool(np.all(np.abs(np.imag(np.asarray(h, dtype=complex))) <= tol))


def support_graph(h: np.ndarray) -> Graph:
    """Graph with an edge wherever the off-diagonal coupling is nonzero."""
    h = np.asarray(h)
    n = h.shape[0]
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if h[u, v] != 0
    )
    return Graph(n, edges)


def require_hermitian(h: np.ndarray, tol: float = 0.0):
    h = np.asarray(h)
    if h.shape[0] != h.shape[1]:
        raise ValueError("Hamiltonian must be square")
    if not np.all(np.abs(h - h.conj().T) <= tol):
        raise ValueError("Hamiltonian is not Hermitian")


# -- the paper-style worked chains ------------------------------------------


def asymmetric_5chain_couplings(j2: float):
    """Couplings (J1, J2, J3, J4) of the non-mirror-symmetric 5-site chain.

    J1 = sqrt(5/2 - J2^2), J3 = 3/(2 J2), J4 = sqrt(5/2 - 9/(4 J2^2)),
    which gives transfer between sites 1 and 3 (zero-indexed) at t0 = pi.
    Real couplings require 3/sqrt(10) <= J2 <= sqrt(5/2).
    """
    if j2 <= 0:
        raise NonPositiveCoupling("J2 must be strictly positive")
    j1_sq = 5 / 2 - j2 * j2
    j4_sq = 5 / 2 - 9 / (4 * j2 * j2)
    if j1_sq <= 0 or j4_sq <= 0:
        raise NonPositiveCoupling(
            f"J2={j2} is outside the range giving real positive couplings"
        )
    return (math.sqrt(j1_sq), j2, 3 / (2 * j2), math.sqrt(j4_sq))


def standard_pst_chain_couplings(n: int):
    """J_k = sqrt(k (n - k)) for k = 1..n-1: the mirror-symmetric PST chain."""
    return tuple(math.sqrt(k * (n - k)) for k in range(1, n))


def check_coupling_identity_5chain(j, rtol: float = 1e-12) -> bool:
    """J1^2 + J2^2 == J3^2 + J4^2, within relative tolerance."""
    if len(j) != 4:
        raise ValueError("expected four couplings")
    if any(x <= 0 for x in j):
        raise NonPositiveCoupling("all couplings must be strictly positive")
    lhs = j[0] ** 2 + j[1] ** 2
    rhs = j[2] ** 2 + j[3] ** 2
    return abs(lhs - rhs) <= rtol * max(abs(lhs), abs(rhs))
