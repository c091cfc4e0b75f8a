"""Two-qubit X-states: the Bell-diagonal family and its closed-form spectrum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import validate_density_matrix

PHYSICAL_SLACK = 1e-12
_X_PATTERN = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 1, 0],
        [1, 0, 0, 1],
    ],
    dtype=bool,
)


@dataclass(frozen=True)
class XStateParams:
    """Correlation triple (c_x, c_y, c_z) of a Bell-diagonal state."""

    c_x: float
    c_y: float
    c_z: float

    def __post_init__(self):
        for name in ("c_x", "c_y", "c_z"):
            v = getattr(self, name)
            if not np.isfinite(v) or abs(v) > 1.0 + PHYSICAL_SLACK:
                raise ValueError(f"{name}={v!r} outside [-1, 1]")
        cx, cy, cz = self.c_x, self.c_y, self.c_z
        if 1.0 + cz < abs(cx - cy) - PHYSICAL_SLACK:
            raise ValueError(
                f"unphysical c-triple ({cx}, {cy}, {cz}): violates 1 + c_z >= |c_x - c_y|"
            )
        if 1.0 - cz < abs(cx + cy) - PHYSICAL_SLACK:
            raise ValueError(
                f"unphysical c-triple ({cx}, {cy}, {cz}): violates 1 - c_z >= |c_x + c_y|"
            )

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c_x, self.c_y, self.c_z)


MES = XStateParams(-1.0, -1.0, -1.0)
PES = XStateParams(-0.9, -0.8, -0.7)


@dataclass(frozen=True)
class XCoefficients:
    """Real X-form entries: populations a11..a44 and coherences a14 = a41, a23 = a32."""

    a11: float
    a22: float
    a33: float
    a44: float
    a14: float
    a23: float

    @classmethod
    def from_params(cls, p: XStateParams) -> "XCoefficients":
        cx, cy, cz = p.as_tuple()
        return cls(
            a11=(1 + cz) / 4,
            a22=(1 - cz) / 4,
            a33=(1 - cz) / 4,
            a44=(1 + cz) / 4,
            a14=(cx - cy) / 4,
            a23=(cx + cy) / 4,
        )

    @classmethod
    def from_matrix(cls, m: np.ndarray, tol: float = 1e-12) -> "XCoefficients":
        """Read the coefficients of a real X-form matrix; raise if it is not one."""
        m = np.asarray(m)
        check_x_form(m, tol)
        if np.max(np.abs(m.imag), initial=0.0) > tol:
            raise ValueError("X-form matrix has complex coherences")
        r = m.real
        return cls(r[0, 0], r[1, 1], r[2, 2], r[3, 3], r[0, 3], r[1, 2])

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.a11, self.a22, self.a33, self.a44
        m[0, 3] = m[3, 0] = self.a14
        m[1, 2] = m[2, 1] = self.a23
        return m

    def as_array(self) -> np.ndarray:
        return np.array([self.a11, self.a22, self.a33, self.a44, self.a14, self.a23])

    @property
    def trace(self) -> float:
        return self.a11 + self.a22 + self.a33 + self.a44


COEFF_NAMES = ("a11", "a22", "a33", "a44", "a14", "a23")


def check_x_form(m: np.ndarray, tol: float = 1e-12) -> None:
    m = np.asarray(m)
    if m.shape != (4, 4):
        raise ValueError(f"X-form matrix must be 4x4, got {m.shape}")
    stray = np.max(np.abs(m[~_X_PATTERN]))
    if stray > tol:
        raise ValueError(f"not an X-form matrix (off-pattern entry of magnitude {stray:.3e})")


def x_state_from_c(p: XStateParams) -> np.ndarray:
    """Bell-diagonal 4x4 density matrix for the correlation triple ``p``."""
    return validate_density_matrix(XCoefficients.from_params(p).matrix(), "x-state")


def x_state_eigenvalues(m: XCoefficients | np.ndarray) -> np.ndarray:
    """Closed-form spectrum of an X-form matrix, descending.

    The matrix splits into the outer block on |00>, |11> and the inner block on
    |01>, |10>; each 2x2 block is diagonalized analytically.
    """
    if isinstance(m, XCoefficients):
        m = m.matrix()
    m = np.asarray(m, dtype=complex)
    check_x_form(m)
    out = _block_eigs(m[0, 0].real, m[3, 3].real, m[0, 3], m[3, 0])
    inner = _block_eigs(m[1, 1].real, m[2, 2].real, m[1, 2], m[2, 1])
    lam = np.array([*out, *inner])
    return -np.sort(-lam)


def _block_eigs(d1, d2, off12, off21):
    mean = 0.5 * (d1 + d2)
    # off12 * off21 = |off|^2 for a Hermitian block
    radius = 0.5 * np.sqrt((d1 - d2) ** 2 + 4.0 * (off12 * off21).real)
    return mean + radius, mean - radius
