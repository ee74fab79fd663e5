"""Quadrature squeezing of generalized binomial states.

The dimensionless quadratures aX = a + a', aP = (a - a')/i obey
[aX, aP] = 2i, so the vacuum dispersion is 1 and the squeezing index
S_K = 1 - <Delta aK^2> is positive exactly when quadrature K fluctuates
below vacuum. For |N,p,phi> both indexes have closed forms,

    S_X = -2Np - A(N,p) cos(2 phi) + B(N,p)^2 cos^2(phi)
    S_P = -2Np + A(N,p) cos(2 phi) + B(N,p)^2 sin^2(phi)

with A and B binomial cross sums; this module evaluates them and
cross-checks against direct operator expectation values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gbs import GbsParams, gbs_state, log_binomial
from .hilbert import OperatorMatrix, StateVector


@dataclass(frozen=True)
class QuadratureStats:
    """First and second quadrature moments plus squeezing indexes."""

    mean_X: float
    mean_P: float
    var_X: float
    var_P: float
    S_X: float
    S_P: float


@dataclass(frozen=True)
class SqueezingTerms:
    """The two closed-form cross sums A(N,p), B(N,p); both vanish at p = 0, 1."""

    A_term: float
    B_term: float


@dataclass(frozen=True)
class SqueezeRow:
    """One grid point of a squeezing scan."""

    N: int
    p: float
    phi: float
    S_X: float
    S_P: float
    source: str
    stats: QuadratureStats | None = None


def quadrature_ops(dim: int) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Truncated aX, aP matrices; [aX, aP] = 2i except on the top level."""
    if dim < 2:
        raise ValueError(f"quadratures need dim >= 2, got {dim}")
    a = np.zeros((dim, dim), dtype=np.complex128)
    k = np.arange(dim - 1)
    a[k, k + 1] = np.sqrt(k + 1.0)
    return OperatorMatrix(a + a.conj().T), OperatorMatrix((a - a.conj().T) / 1j)


def direct_stats(psi: StateVector) -> QuadratureStats:
    """Quadrature moments of a state by explicit expectation values.

    The state must be normalized and must not populate the top two
    truncation levels, otherwise the <aK^2> values pick up truncation
    artifacts.
    """
    if not psi.is_normalized():
        raise ValueError("direct_stats requires a normalized state")
    if psi.dim < 3:
        raise ValueError("need dim >= 3 so two empty guard levels exist")
    if np.max(np.abs(psi.amp[-2:])) > 1e-10:
        raise ValueError("top two truncation levels must be unpopulated")
    ax, ap = quadrature_ops(psi.dim)
    stats = []
    for op in (ax.entries, ap.entries):
        vec = op @ psi.amp
        mean = float(np.real(np.vdot(psi.amp, vec)))
        second = float(np.real(np.vdot(vec, vec)))  # op is Hermitian
        stats.append((mean, second - mean * mean))
    (mean_x, var_x), (mean_p, var_p) = stats
    return QuadratureStats(mean_x, mean_p, var_x, var_p, 1.0 - var_x, 1.0 - var_p)


def _cross_binomial_sum(N: int, M: int, p: float) -> float:
    """sum_n sqrt(C(N,n) C(M,n)) p^n (1-p)^(M-n) over n = 0..M, for 0 < p < 1."""
    n = np.arange(M + 1, dtype=float)
    logs = 0.5 * np.array([log_binomial(N, k) + log_binomial(M, k) for k in range(M + 1)])
    logs += n * math.log(p) + (M - n) * math.log1p(-p)
    return float(np.sum(np.exp(logs)))


def squeezing_terms(N: int, p: float) -> SqueezingTerms:
    """Closed-form A(N,p) and B(N,p)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    if p in (0.0, 1.0) or N == 0:
        return SqueezingTerms(0.0, 0.0)
    b = 2.0 * math.sqrt(N * p * (1.0 - p)) * _cross_binomial_sum(N, N - 1, p)
    if N < 2:
        return SqueezingTerms(0.0, b)
    a = 2.0 * math.sqrt(N * (N - 1.0)) * p * (1.0 - p) * _cross_binomial_sum(N, N - 2, p)
    return SqueezingTerms(a, b)


def closed_form_indexes(N: int, p: float, phi: float) -> tuple[float, float]:
    """Closed-form squeezing indexes (S_X, S_P) of |N, p, phi>."""
    terms = squeezing_terms(N, p)
    a, b2 = terms.A_term, terms.B_term ** 2
    cos2 = math.cos(2.0 * phi)
    s_x = -2.0 * N * p - a * cos2 + b2 * math.cos(phi) ** 2
    s_p = -2.0 * N * p + a * cos2 + b2 * math.sin(phi) ** 2
    return s_x, s_p


def squeeze_scan(
    N: int,
    p_grid,
    phi_grid,
    source: str = "closed_form",
) -> list[SqueezeRow]:
    """Evaluate the squeezing indexes over a (p, phi) grid.

    Rows come back in row-major order with p the outer loop, so repeated
    scans diff cleanly. source selects the closed forms or the direct
    operator expectations (computed on an N+3 space so the quadratic
    moments never touch the truncation edge).
    """
    if source not in ("closed_form", "direct"):
        raise ValueError(f"unknown source {source!r}")
    p_grid = [float(p) for p in p_grid]
    phi_grid = [float(f) for f in phi_grid]
    if not p_grid or not phi_grid:
        raise ValueError("scan grids must be non-empty")
    rows = []
    for p in p_grid:
        terms = squeezing_terms(N, p) if source == "closed_form" else None
        for phi in phi_grid:
            if source == "closed_form":
                a, b2 = terms.A_term, terms.B_term ** 2
                cos2 = math.cos(2.0 * phi)
                s_x = -2.0 * N * p - a * cos2 + b2 * math.cos(phi) ** 2
                s_p = -2.0 * N * p + a * cos2 + b2 * math.sin(phi) ** 2
                rows.append(SqueezeRow(N, p, phi, s_x, s_p, source))
            else:
                stats = direct_stats(gbs_state(GbsParams(N, p, phi), dim=N + 3))
                rows.append(SqueezeRow(N, p, phi, stats.S_X, stats.S_P, source, stats))
    return rows
