"""Pseudo-angular-momentum operators on the truncated Fock space.

The Holstein-Primakoff construction turns the first N+1 number states into
a spin-N/2 ladder: J3 = a'a - N/2, Jplus = a' sqrt(N - a'a) and its
adjoint. A generalized binomial state is the rotated top rung of that
ladder, so the rotation operator, the rotated (primed) operator set and
the operator linking two such states all live here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .gbs import BlochAngles, GbsParams, params_to_angles
from .hilbert import OperatorMatrix, adjoint, expm


@dataclass(frozen=True)
class PseudoSpinSet:
    """J3, Jplus, Jminus and the Casimir on the (N+1)-dimensional space."""

    N: int
    J3: OperatorMatrix
    Jplus: OperatorMatrix
    Jminus: OperatorMatrix
    Jsq: OperatorMatrix


@dataclass(frozen=True)
class RotationSpec:
    """Rotation parameters eta = (theta/2) e^(-i varphi), tau = tan(theta/2) e^(-i varphi)."""

    angles: BlochAngles
    eta: complex
    tau: complex

    @classmethod
    def from_angles(cls, angles: BlochAngles) -> "RotationSpec":
        half = angles.theta / 2.0
        axis_phase = cmath.exp(-1j * angles.varphi)
        return cls(angles, half * axis_phase, math.tan(half) * axis_phase)

    @classmethod
    def from_gbs(cls, params: GbsParams) -> "RotationSpec":
        return cls.from_angles(params_to_angles(params))


def hp_operators(N: int) -> PseudoSpinSet:
    """Holstein-Primakoff operator set for maximum excitation N."""
    if N < 0:
        raise ValueError(f"max excitation must be non-negative, got {N}")
    dim = N + 1
    n = np.arange(dim)
    j3 = OperatorMatrix(np.diag((n - N / 2.0).astype(np.complex128)))
    up = np.zeros((dim, dim), dtype=np.complex128)
    k = np.arange(N)
    up[k + 1, k] = np.sqrt((N - k) * (k + 1.0))
    jplus = OperatorMatrix(up)
    jminus = adjoint(jplus)
    jsq = j3 @ j3 + 0.5 * (jplus @ jminus + jminus @ jplus)
    return PseudoSpinSet(N, j3, jplus, jminus, jsq)


def rotation_operator(N: int, spec: RotationSpec) -> OperatorMatrix:
    """Bloch rotation exp(-eta Jplus + eta* Jminus) on the (N+1)-dim ladder."""
    ops = hp_operators(N)
    gen = (-spec.eta) * ops.Jplus + np.conj(spec.eta) * ops.Jminus
    return expm(gen)


def rotated_operators(N: int, p: float, phi: float) -> PseudoSpinSet:
    """Primed operator set whose top-rung eigenvector is |N, p, phi>.

    Built literally from the closed-form combinations

        J3'    = (2p-1) J3 + sqrt(p(1-p)) (e^(i phi) J+ + e^(-i phi) J-)
        Jplus' = e^(-i phi) (p e^(i phi) J+ - (1-p) e^(-i phi) J- - 2 sqrt(p(1-p)) J3)

    which coincide with conjugation of the unprimed set by the rotation
    operator at the matching Bloch angles.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    ops = hp_operators(N)
    root = math.sqrt(p * (1.0 - p))
    ephi = cmath.exp(1j * phi)
    j3p = (2.0 * p - 1.0) * ops.J3 + root * (ephi * ops.Jplus + np.conj(ephi) * ops.Jminus)
    jplusp = np.conj(ephi) * (
        p * ephi * ops.Jplus
        - (1.0 - p) * np.conj(ephi) * ops.Jminus
        - 2.0 * root * ops.J3
    )
    jminusp = adjoint(jplusp)
    jsqp = j3p @ j3p + 0.5 * (jplusp @ jminusp + jminusp @ jplusp)
    return PseudoSpinSet(N, j3p, jplusp, jminusp, jsqp)


def link_operator(N: int, a: GbsParams, b: GbsParams) -> OperatorMatrix:
    """Unitary T = R(b) R(a)^(-1) carrying |N,p,phi> onto |N,p',phi'>."""
    if a.N != N or b.N != N:
        raise ValueError(f"parameter sets must share N={N}, got {a.N} and {b.N}")
    ra = rotation_operator(N, RotationSpec.from_gbs(a))
    rb = rotation_operator(N, RotationSpec.from_gbs(b))
    return rb @ adjoint(ra)  # R is unitary, so the inverse is the adjoint


def composition_angles(a: BlochAngles, b: BlochAngles) -> tuple[float, float, complex]:
    """Closed-form composite angles (Theta, Phi) and scalar phase for R(b) R(a)^(-1).

    Theta = sqrt(theta^2 + theta'^2 - 2 theta theta' cos(varphi - varphi')),
    tan(Phi) from the vector difference of the two axis directions, and
    phase = exp(i (theta theta'/4) sin(varphi - varphi')). The formula is a
    small-angle composition law: exact for coincident or collinear axes,
    approximate otherwise. Use composition_residual to quantify the gap.
    """
    th, ph = a.theta, a.varphi
    thp, php = b.theta, b.varphi
    arg = th * th + thp * thp - 2.0 * th * thp * math.cos(ph - php)
    big_theta = math.sqrt(max(arg, 0.0))
    y = thp * math.sin(php) - th * math.sin(ph)
    x = thp * math.cos(php) - th * math.cos(ph)
    big_phi = math.atan2(y, x) if (x != 0.0 or y != 0.0) else 0.0
    phase = cmath.exp(1j * (th * thp / 4.0) * math.sin(ph - php))
    return big_theta, big_phi, phase


def composition_residual(N: int, a: BlochAngles, b: BlochAngles) -> float:
    """Frobenius distance between T = R(b) R(a)^(-1) and phase * R(Theta, Phi).

    Diagnostic only: reports how far the closed-form composition law is
    from the exact operator product for the given pair of directions.
    """
    ops = hp_operators(N)
    ra = rotation_operator(N, RotationSpec.from_angles(a))
    rb = rotation_operator(N, RotationSpec.from_angles(b))
    t = rb @ adjoint(ra)
    big_theta, big_phi, phase = composition_angles(a, b)
    # Theta may exceed pi, so build the generator directly instead of
    # round-tripping through BlochAngles validation
    eta = (big_theta / 2.0) * cmath.exp(-1j * big_phi)
    r_comp = expm((-eta) * ops.Jplus + np.conj(eta) * ops.Jminus)
    return float(np.linalg.norm(t.entries - phase * r_comp.entries))
