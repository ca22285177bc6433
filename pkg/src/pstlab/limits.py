"""Quantitative bounds on transfer: rate bound 2l + D <= M, routing
impossibility for real Hamiltonians, Margolus-Levitin time lower bound,
Laplacian diameter bounds, and the complement rule e^{-i t0 N} = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .graphs import Graph, diameter, distance
from .hamiltonians import is_real_hamiltonian, support_graph
from .spectral import decompose, is_integral_spectrum
from .transfer import (
    NonRealHamiltonian,
    NotPerfect,
    TransferVerdict,
    check_transfer,
)


class Disconnected(ValueError):
    pass


class RoutingViolation(AssertionError):
    """A real Hamiltonian transferred perfectly to two distinct targets."""


@dataclass(frozen=True)
class RateReport:
    D: int  # transfer distance on the coupling graph
    M: int  # distinct eigenvalues (the size after resolving degeneracies)
    l: int  # autocorrelation zeros in (0, t0)
    zero_times: tuple
    bound_satisfied: bool  # 2l + D <= M
    ml_lower_bound: float  # Margolus-Levitin: (l+1) pi / (4 sum_j |J_aj|)


def autocorrelation_zeros(h, a: int, t0: float, grid: int = 10**4,
                          tol: float = 1e-8):
    """Times t in (0, t0) with <a|e^{-iHt}|a> = 0.

    The autocorrelation is complex, so zeros are located as local minima of
    |f| on a grid, refined by bounded minimization; both real and imaginary
    parts must vanish (|f| <= tol) for a time to count.
    """
    if t0 <= 0:
        raise ValueError("t0 must be positive")
    if grid < 10**3:
        raise ValueError("grid must be at least 1000")
    dec = decompose(np.asarray(h, dtype=complex))
    weights = np.array([np.linalg.norm(basis[a]) ** 2 for basis in dec.bases])
    lams = np.asarray(dec.eigenvalues)

    def absf(t):
        return abs(np.exp(-1j * lams * t) @ weights)

    times = np.linspace(0.0, t0, grid + 1)
    vals = np.abs(np.exp(-1j * np.outer(times, lams)) @ weights)
    zeros = []
    coarse = max(tol, 4.0 * float(np.abs(lams).max()) * (t0 / grid))
    for i in range(1, grid):
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1] and vals[i] < coarse:
            opt = minimize_scalar(absf, bounds=(times[i - 1], times[i + 1]),
                                  method="bounded", options={"xatol": 1e-14})
            t = float(opt.x)
            if float(opt.fun) <= tol and 0.0 < t < t0:
                if not zeros or t - zeros[-1] > 2 * t0 / grid:
                    zeros.append(t)
    return zeros


def rate_report(h, a: int, b: int, verdict: TransferVerdict = None) -> RateReport:
    """Rate-bound data for a Perfect instance (raises NotPerfect otherwise)."""
    h = np.asarray(h, dtype=complex)
    if verdict is None:
        verdict = check_transfer(h, a, b)
    if not verdict.is_perfect:
        raise NotPerfect("rate report requires a Perfect verdict")
    g = support_graph(h)
    d = distance(g, a, b)
    dec = decompose(h)
    m = dec.num_eigenspaces
    zeros = autocorrelation_zeros(h, a, verdict.t0)
    l = len(zeros)
    coupling_sum = float(np.sum(np.abs(np.delete(h[a], a))))
    ml = (l + 1) * math.pi / (4.0 * coupling_sum)
    return RateReport(d, m, l, tuple(zeros), 2 * l + d <= m, ml)


def routing_bound_check(D: int, J: int, M: int, N: int) -> bool:
    """D*J <= M-1 and M <= N: necessary for routing to J targets at distance D."""
    if min(D, J, M, N) <= 0:
        raise ValueError("all arguments must be positive")
    return D * J <= M - 1 and M <= N


def routing_impossibility_scan(h, a: int, **check_kwargs) -> dict:
    """All targets with perfect transfer from a, as {target: t0}.

    For a real Hamiltonian at most one target can exist; a second one raises
    RoutingViolation with the evidence in the message.
    """
    h = np.asarray(h, dtype=complex)
    if not is_real_hamiltonian(h):
        raise NonRealHamiltonian("routing scan is defined for real Hamiltonians")
    found = {}
    for c in range(h.shape[0]):
        if c == a:
            continue
        verdict = check_transfer(h, a, c, **check_kwargs)
        if verdict.is_perfect:
            found[c] = verdict.t0
    if len(found) > 1:
        raise RoutingViolation(f"multiple perfect targets from {a}: {found}")
    return found


@dataclass(frozen=True)
class DiameterBoundsReport:
    D: int
    max_degree: int
    two_d: int
    k: int  # distinct Laplacian eigenvalues
    k_minus_1: int
    mohar: dict  # alpha -> bound
    all_satisfied: bool


def _mohar_bound(d: int, n: int, alpha: float) -> int:
    x = math.sqrt(2 * d) * math.sqrt((alpha * alpha - 1) / (4 * alpha)) + 1
    y = math.log(n / 2) / math.log(alpha)
    return 2 * _safe_ceil(x) * _safe_ceil(y)


def _safe_ceil(x: float, eps: float = 1e-9) -> int:
    # guard against 2.0000000000000004-style float noise
    r = round(x)
    if abs(x - r) <= eps:
        return r
    return math.ceil(x)


def laplacian_diameter_bounds(g: Graph, alphas=(2.0, math.e, 4.0)) -> DiameterBoundsReport:
    """Diameter bounds D <= 2d, D+1 <= k, and the Mohar bound at each alpha.

    k is the number of distinct Laplacian eigenvalues, decided exactly when
    the Laplacian spectrum is integral.
    """
    D = diameter(g)
    if D is None:
        raise Disconnected("diameter bounds require a connected graph")
    d = g.max_degree()
    lap = np.diag(g.adjacency().sum(axis=1)) - g.adjacency()
    integral, roots = is_integral_spectrum(lap)
    if integral:
        k = len(set(roots))
    else:
        k = decompose(lap.astype(float)).num_eigenspaces
    # the Mohar bound's log term is vacuous for N <= 2
    mohar = {alpha: _mohar_bound(d, g.n, alpha) for alpha in alphas} if g.n > 2 else {}
    bounds = [2 * d, k - 1, *mohar.values()]
    return DiameterBoundsReport(
        D, d, 2 * d, k, k - 1, mohar, D <= min(bounds)
    )


def complement_pst_condition(t0: float, n: int, tol: float = 1e-8) -> bool:
    """e^{-i t0 n} = 1, the condition for PST to survive complementation."""
    if t0 <= 0:
        raise ValueError("t0 must be positive")
    if n < 2:
        raise ValueError("n must be at least 2")
    r = math.fmod(t0 * n, 2.0 * math.pi)
    return min(abs(r), abs(2.0 * math.pi - r)) <= tol
