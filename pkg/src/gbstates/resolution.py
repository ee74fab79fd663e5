"""Over-complete basis machinery: resolution of identity and expansions.

The family {|N,p,phi>} over the Bloch sphere satisfies

    (N+1) * integral dOmega/(4 pi) |N,p,phi><N,p,phi| = 1

on the span of |0>..|N>. With u = cos(theta) the integrand is a degree-N
polynomial in u once the azimuthal average is taken, so Gauss-Legendre in
u (>= ceil((N+1)/2) nodes) plus a uniform phase grid (>= N+1 nodes) makes
the quadrature exact to roundoff. Interior Gauss nodes never touch the
degenerate p = 0, 1 endpoints.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .gbs import GbsParams, binomial_amplitudes, gbs_state, log_binomial
from .hilbert import OperatorMatrix, StateVector, inner


@dataclass(frozen=True)
class SphereQuadrature:
    """Product quadrature over the Bloch sphere.

    theta_nodes holds rows (theta_k, w_k) where the w_k are Gauss-Legendre
    weights in u = cos(theta) on [-1, 1] (so they sum to 2); the azimuthal
    average uses phi_count uniform nodes phi_j = 2 pi j / phi_count.
    """

    theta_nodes: np.ndarray
    phi_count: int

    def __post_init__(self):
        arr = np.array(self.theta_nodes, dtype=float, copy=True)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"theta_nodes must have shape (K, 2), got {arr.shape}")
        if abs(arr[:, 1].sum() - 2.0) > 1e-9:
            raise ValueError("Gauss-Legendre weights in u must sum to 2")
        if self.phi_count < 1:
            raise ValueError("need at least one azimuthal node")
        arr.setflags(write=False)
        object.__setattr__(self, "theta_nodes", arr)

    @classmethod
    def build(cls, n_theta: int, n_phi: int) -> "SphereQuadrature":
        u, w = np.polynomial.legendre.leggauss(n_theta)
        return cls(np.column_stack([np.arccos(u), w]), n_phi)

    @classmethod
    def default_for(cls, N: int) -> "SphereQuadrature":
        """Exactness-grade grid with a small margin over the threshold."""
        return cls.build(math.ceil((N + 1) / 2) + 2, N + 3)

    @property
    def p_values(self) -> np.ndarray:
        return np.cos(self.theta_nodes[:, 0] / 2.0) ** 2

    @property
    def phi_values(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.phi_count) / self.phi_count


@dataclass(frozen=True)
class ExpansionAmplitude:
    """Value of the amplitude function A at one tau."""

    tau: complex
    A_value: complex


def _grid_amplitudes(N: int, quad: SphereQuadrature) -> tuple[np.ndarray, np.ndarray]:
    """Amplitude matrix of the states at every grid point and their weights.

    Returns (amps, weights): amps[g, n] are the N+1 amplitudes of the state
    at grid point g, weights[g] the measure factor (N+1) w_k / (2 M).
    """
    phis = quad.phi_values
    n = np.arange(N + 1)
    amps = []
    weights = []
    for theta, w in quad.theta_nodes:
        p = math.cos(theta / 2.0) ** 2
        mods = binomial_amplitudes(N, p)
        amps.append(mods[None, :] * np.exp(1j * np.outer(phis, n)))
        weights.append(np.full(quad.phi_count, (N + 1) * w / (2.0 * quad.phi_count)))
    return np.concatenate(amps, axis=0), np.concatenate(weights)


def _warn_if_under_resolved(N: int, quad: SphereQuadrature) -> None:
    k_needed = math.ceil((N + 1) / 2)
    if quad.theta_nodes.shape[0] < k_needed or quad.phi_count < N + 1:
        warnings.warn(
            f"grid under-resolved for N={N}: need >= {k_needed} theta nodes "
            f"and >= {N + 1} phi nodes for exactness",
            stacklevel=3,
        )


def identity_resolution(N: int, quad: SphereQuadrature) -> OperatorMatrix:
    """Quadrature evaluation of (N+1) integral dOmega/(4 pi) |N,p,phi><N,p,phi|.

    Equals the identity to ~1e-12 entrywise on exactness-grade grids; an
    under-resolved grid is a legitimate experiment and only raises a
    UserWarning while returning the contaminated result.
    """
    _warn_if_under_resolved(N, quad)
    amps, weights = _grid_amplitudes(N, quad)
    return OperatorMatrix((amps.T * weights) @ amps.conj())


def expansion_amplitude(psi: StateVector, params: GbsParams) -> ExpansionAmplitude:
    """Amplitude function of a state in the over-complete basis.

    Computed from the closed identity A = (1+|tau|^2)^(N/2) <N,p,phi|psi>
    with tau = e^(i phi) sqrt((1-p)/p); requires 0 < p <= 1 (the p = 0
    pole of tau is never needed: quadrature paths use the bounded overlap
    form throughout).
    """
    N = params.N
    if psi.dim < N + 1:
        raise ValueError(f"state dimension {psi.dim} below N+1 = {N + 1}")
    if not 0.0 < params.p <= 1.0:
        raise ValueError("the tau parameterization needs 0 < p <= 1")
    tau = cmath.exp(1j * params.phi) * math.sqrt((1.0 - params.p) / params.p)
    prefactor = params.p ** (-N / 2.0)  # equals (1 + |tau|^2)^(N/2)
    a_value = prefactor * inner(gbs_state(params, psi.dim), psi)
    return ExpansionAmplitude(tau, a_value)


def expansion_amplitude_series(psi: StateVector, params: GbsParams) -> complex:
    """Term-by-term series for A: sum_n c_n sqrt(C(N,n)) e^(-i n phi) |tau|^(N-n).

    Independent of the overlap route; the two agree to ~1e-10 relative.
    """
    N = params.N
    if psi.dim < N + 1:
        raise ValueError(f"state dimension {psi.dim} below N+1 = {N + 1}")
    if not 0.0 < params.p <= 1.0:
        raise ValueError("the tau parameterization needs 0 < p <= 1")
    c = psi.amp[: N + 1]
    if params.p == 1.0:
        # |tau| = 0: only the n = N monomial survives
        return complex(c[N] * cmath.exp(-1j * N * params.phi))
    n = np.arange(N + 1, dtype=float)
    log_abs_tau = 0.5 * (math.log1p(-params.p) - math.log(params.p))
    coeff = np.exp(
        0.5 * np.array([log_binomial(N, k) for k in range(N + 1)])
        + (N - n) * log_abs_tau
    )
    return complex(np.sum(c * coeff * np.exp(-1j * n * params.phi)))


def reconstruct(psi: StateVector, N: int, quad: SphereQuadrature) -> StateVector:
    """Re-expand a state through the over-complete basis.

    Evaluates (N+1) integral dOmega/(4 pi) <N,p,phi|psi> |N,p,phi> on the
    grid; the integrand uses the overlap form of A/(1+|tau|^2)^(N/2)
    directly, so nothing diverges near the p -> 0 edge. With
    exactness-grade grids this is the identity map on states supported on
    n <= N.
    """
    if psi.dim > N + 1 and np.max(np.abs(psi.amp[N + 1 :])) > 1e-12:
        raise ValueError(f"state has support above n = {N}")
    _warn_if_under_resolved(N, quad)
    amps, weights = _grid_amplitudes(N, quad)
    coeffs = amps.conj() @ psi.amp[: N + 1]
    out = np.zeros(psi.dim, dtype=np.complex128)
    out[: N + 1] = (weights * coeffs) @ amps
    return StateVector(out)
