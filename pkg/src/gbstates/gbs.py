"""Generalized binomial states of a single field mode.

An N-photon generalized binomial state is the finite superposition of
number states |n>, n = 0..N, with amplitudes

    sqrt(C(N,n) p^n (1-p)^(N-n)) * exp(i n phi),

where p is the single-photon occurrence probability and phi the mean
phase. The state family is in bijection with the spin-coherent states of
N two-level systems through p = cos^2(theta/2), phi = 2*pi - varphi; the
angle maps live here next to the states themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hilbert import StateVector

TWO_PI = 2.0 * math.pi


def normalize_angle(x: float) -> float:
    """Map an angle to the canonical interval [0, 2*pi)."""
    return float(np.mod(x, TWO_PI))


def circular_distance(a: float, b: float) -> float:
    """Shortest distance between two angles on the circle."""
    d = normalize_angle(a - b)
    return min(d, TWO_PI - d)


def log_binomial(n: int, k: int) -> float:
    """log C(n, k), stable for n up to a few hundred."""
    if not 0 <= k <= n:
        raise ValueError(f"binomial index k={k} outside [0, {n}]")
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


@dataclass(frozen=True)
class GbsParams:
    """Defining parameters (N, p, phi) of a generalized binomial state."""

    N: int
    p: float
    phi: float = 0.0

    def __post_init__(self):
        if self.N < 0 or int(self.N) != self.N:
            raise ValueError(f"max photon number must be a non-negative integer, got {self.N}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"single-photon probability must lie in [0, 1], got {self.p}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "phi", normalize_angle(self.phi))


@dataclass(frozen=True)
class BlochAngles:
    """Polar and azimuthal angles of a Bloch-sphere direction."""

    theta: float
    varphi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        # arccos roundoff can leave theta a hair outside [0, pi]
        if -1e-9 <= theta < 0.0:
            theta = 0.0
        elif math.pi < theta <= math.pi + 1e-9:
            theta = math.pi
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"polar angle must lie in [0, pi], got {theta}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "varphi", normalize_angle(self.varphi))


def binomial_amplitudes(N: int, p: float) -> np.ndarray:
    """Moduli sqrt(C(N,n) p^n (1-p)^(N-n)) for n = 0..N.

    Evaluated through log-gamma so the result stays finite and accurate up
    to N ~ 300; the p = 0 and p = 1 limits are exact (0^0 treated as 1).
    """
    if p == 0.0:
        w = np.zeros(N + 1)
        w[0] = 1.0
        return w
    if p == 1.0:
        w = np.zeros(N + 1)
        w[N] = 1.0
        return w
    n = np.arange(N + 1, dtype=float)
    logc = np.array([log_binomial(N, k) for k in range(N + 1)])
    logw = 0.5 * (logc + n * math.log(p) + (N - n) * math.log1p(-p))
    return np.exp(logw)


def gbs_state(params: GbsParams, dim: int | None = None) -> StateVector:
    """Generalized binomial state |N, p, phi> on a dim-dimensional Fock space."""
    N = params.N
    if dim is None:
        dim = N + 1
    if dim < N + 1:
        raise ValueError(f"need dim >= N+1 = {N + 1}, got {dim}")
    amp = np.zeros(dim, dtype=np.complex128)
    amp[: N + 1] = binomial_amplitudes(N, params.p) * np.exp(
        1j * params.phi * np.arange(N + 1)
    )
    amp /= np.linalg.norm(amp)
    return StateVector(amp)


def gbs_overlap(a: GbsParams, b: GbsParams) -> complex:
    """Closed-form inner product <N,p,phi | N,p',phi'> of two states with equal N.

    Sums C(N,n) (p p')^(n/2) [(1-p)(1-p')]^((N-n)/2) e^(i n (phi'-phi)) directly
    from the parameters; vanishes exactly at the antipodal pair (1-p, phi+pi).
    """
    if a.N != b.N:
        raise ValueError(f"max photon numbers differ: {a.N} != {b.N}")
    N = a.N
    n = np.arange(N + 1, dtype=float)
    logc = np.array([log_binomial(N, k) for k in range(N + 1)])
    with np.errstate(divide="ignore", invalid="ignore"):
        lp = np.log(a.p * b.p)
        lq = np.log((1.0 - a.p) * (1.0 - b.p))
        logmod = logc.copy()
        # guard 0 * (-inf) at the edges: the n = 0 / n = N factors are exactly 1
        logmod += np.where(n > 0, 0.5 * n * lp, 0.0)
        logmod += np.where(n < N, 0.5 * (N - n) * lq, 0.0)
    terms = np.exp(logmod) * np.exp(1j * n * (b.phi - a.phi))
    return complex(np.sum(terms))


def orthogonal_partner(params: GbsParams) -> GbsParams:
    """The unique state with the same N orthogonal to the given one."""
    return GbsParams(params.N, 1.0 - params.p, params.phi + math.pi)


def params_to_angles(params: GbsParams) -> BlochAngles:
    """Bloch direction of a state: theta = 2*arccos(sqrt(p)), varphi = 2*pi - phi."""
    theta = 2.0 * math.acos(math.sqrt(params.p))
    return BlochAngles(theta, TWO_PI - params.phi)


def angles_to_params(angles: BlochAngles, N: int) -> GbsParams:
    """Inverse of params_to_angles: p = cos^2(theta/2), phi = 2*pi - varphi."""
    p = math.cos(angles.theta / 2.0) ** 2
    return GbsParams(N, p, TWO_PI - angles.varphi)


def coherent_state_truncated(alpha: complex, dim: int) -> StateVector:
    """Truncated Glauber coherent state, renormalized on the finite space.

    The dimension must satisfy |alpha|^2 + 10|alpha| + 20 <= dim so the
    discarded tail carries less than ~1e-12 of the norm.
    """
    alpha = complex(alpha)
    a = abs(alpha)
    if a * a + 10.0 * a + 20.0 > dim:
        raise ValueError(f"dim {dim} too small for |alpha| = {a}: tail not negligible")
    amp = np.zeros(dim, dtype=np.complex128)
    if a == 0.0:
        amp[0] = 1.0
        return StateVector(amp)
    n = np.arange(dim, dtype=float)
    logmod = -0.5 * a * a + n * math.log(a) - 0.5 * np.array(
        [math.lgamma(k + 1) for k in range(dim)]
    )
    amp[:] = np.exp(logmod) * np.exp(1j * n * np.angle(alpha))
    amp /= np.linalg.norm(amp)
    return StateVector(amp)
