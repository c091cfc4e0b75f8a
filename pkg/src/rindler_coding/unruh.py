"""Fermionic Unruh channel in the single-mode approximation.

Each Minkowski qubit is split into a region-I particle mode and a region-II
antiparticle mode by the isometry

    |0>_M -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
    |1>_M -> |1>_I |0>_II

Two routes to the region-reduced two-qubit channels are provided: the brute
force one (dilate to 16 dimensions, then partial trace) and closed-form
coefficient maps for the three pairings with a known formula. The brute
force route is the reference the closed forms are checked against.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .hilbert import A_I, A_II, B_I, B_II, partial_trace, validate_density_matrix
from .xstate import XCoefficients

R_MAX = math.pi / 4
_R_SLACK = 1e-12


class RegionPair(enum.Enum):
    """Which Rindler wedge each partner is observed in (Alice first)."""

    I_I = "I-I"
    II_II = "II-II"
    I_II = "I-II"
    II_I = "II-I"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "RegionPair":
        for pair in cls:
            if token in (pair.value, pair.name):
                return pair
        valid = ", ".join(p.value for p in cls)
        raise ValueError(f"unknown region token {token!r} (expected one of {valid})")

    @property
    def kept_modes(self) -> tuple[int, int]:
        return _KEPT[self]


_KEPT = {
    RegionPair.I_I: (A_I, B_I),
    RegionPair.II_II: (A_II, B_II),
    RegionPair.I_II: (A_I, B_II),
    RegionPair.II_I: (A_II, B_I),
}


def check_rindler_angle(r: float, name: str = "r") -> float:
    r = float(r)
    if not (-_R_SLACK <= r <= R_MAX + _R_SLACK):
        raise ValueError(f"{name}={r!r} outside [0, pi/4]")
    return min(max(r, 0.0), R_MAX)


def rindler_angle_from_accel(x: float) -> float:
    """Rindler angle for the ratio x = omega * c / a, via tan r = exp(-pi x).

    ``x = 0`` is infinite acceleration (r = pi/4); large ``x`` tends to the
    inertial limit r = 0.
    """
    x = float(x)
    if not x >= 0.0:
        raise ValueError(f"acceleration ratio must be >= 0, got {x!r}")
    return math.atan(math.exp(-math.pi * x))


def unruh_isometry(r: float) -> np.ndarray:
    """4x2 isometry from one Minkowski qubit into (region I, region II)."""
    r = check_rindler_angle(r)
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def accelerate_pair(rho: np.ndarray, ra: float, rb: float) -> np.ndarray:
    """Dilate a two-qubit state to the 16-dim register (A_I, A_II, B_I, B_II)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit state, got shape {rho.shape}")
    # V_a (x) V_b already lands in (A_I, A_II, B_I, B_II) order
    v = np.kron(unruh_isometry(ra), unruh_isometry(rb))
    return v @ rho @ v.conj().T


def reduce_to_region(full: np.ndarray, pair: RegionPair) -> np.ndarray:
    return partial_trace(full, list(pair.kept_modes))


def channel_oracle(rho: np.ndarray, ra: float, rb: float, pair: RegionPair) -> np.ndarray:
    """Region-reduced channel by explicit dilation and partial trace."""
    return reduce_to_region(accelerate_pair(rho, ra, rb), pair)


def channel_closed_form(
    coeffs: XCoefficients, ra: float, rb: float, pair: RegionPair
) -> XCoefficients:
    """Region-reduced X-state coefficients.

    I-I, II-II and I-II use analytic maps. II-I has no analytic map here and
    is computed by the dilation route.
    """
    ra = check_rindler_angle(ra, "ra")
    rb = check_rindler_angle(rb, "rb")
    if pair is RegionPair.II_I:
        return XCoefficients.from_matrix(channel_oracle(coeffs.matrix(), ra, rb, pair))

    a = coeffs
    ca, sa = math.cos(ra), math.sin(ra)
    cb, sb = math.cos(rb), math.sin(rb)
    ca2, sa2, cb2, sb2 = ca * ca, sa * sa, cb * cb, sb * sb

    if pair is RegionPair.I_I:
        return XCoefficients(
            a11=a.a11 * ca2 * cb2,
            a22=ca2 * (a.a11 * sb2 + a.a22),
            a33=cb2 * (a.a11 * sa2 + a.a33),
            a44=sa2 * (a.a11 * sb2 + a.a22) + a.a33 * sb2 + a.a44,
            a14=a.a14 * ca * cb,
            a23=a.a23 * ca * cb,
        )
    if pair is RegionPair.II_II:
        # b22 needs the a11 term: Alice ends in 0 from either Minkowski 0 (cos^2) or 1
        return XCoefficients(
            a11=(a.a22 + a.a11 * cb2) * ca2 + a.a33 * cb2 + a.a44,
            a22=(a.a33 + a.a11 * ca2) * sb2,
            a33=(a.a22 + a.a11 * cb2) * sa2,
            a44=a.a11 * sa2 * sb2,
            a14=a.a14 * sa * sb,
            a23=a.a23 * sa * sb,
        )
    # I-II: Bob's qubit flips between the Minkowski and anti-particle bases,
    # so the inner and outer coherences trade places
    return XCoefficients(
        a11=(a.a22 + a.a11 * cb2) * ca2,
        a22=a.a11 * ca2 * sb2,
        a33=(a.a22 + a.a11 * cb2) * sa2 + a.a33 * cb2 + a.a44,
        a44=(a.a33 + a.a11 * sa2) * sb2,
        a14=a.a23 * ca * sb,
        a23=a.a14 * ca * sb,
    )


def region_channel(params_or_coeffs, ra: float, rb: float, pair: RegionPair) -> np.ndarray:
    """Validated 4x4 density matrix for the given region pairing (closed-form route)."""
    coeffs = params_or_coeffs
    if not isinstance(coeffs, XCoefficients):
        coeffs = XCoefficients.from_params(coeffs)
    out = channel_closed_form(coeffs, ra, rb, pair).matrix()
    return validate_density_matrix(out, f"{pair.token} channel")
