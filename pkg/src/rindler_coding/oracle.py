"""Cross-checks of the closed-form region channels against the 16-dim dilation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coding import UNIFORM, capacity, decoded_information_closed_form, holevo_batch, pauli_encode
from .unruh import R_MAX, RegionPair, channel_closed_form, channel_oracle
from .xstate import COEFF_NAMES, MES, PES, XCoefficients, XStateParams

CLOSED_FORM_PAIRS = (RegionPair.I_I, RegionPair.II_II, RegionPair.I_II)
ORACLE_TOL = 1e-12
TWIRL_TOL = 1e-10


def random_c_triples(n: int, seed: int) -> list[XStateParams]:
    """``n`` physical correlation triples, uniform over the tetrahedron of valid states."""
    rng = np.random.default_rng(seed)
    out: list[XStateParams] = []
    while len(out) < n:
        cx, cy, cz = rng.uniform(-1.0, 1.0, size=3)
        if 1 + cz >= abs(cx - cy) and 1 - cz >= abs(cx + cy):
            out.append(XStateParams(float(cx), float(cy), float(cz)))
    return out


def check_states(n_random: int = 20, seed: int = 0) -> list[XStateParams]:
    return [MES, PES, *random_c_triples(n_random, seed)]


@dataclass
class Offender:
    c: XStateParams
    r_a: float
    r_b: float
    coefficient: str
    error: float


@dataclass
class OracleReport:
    max_error: dict[RegionPair, float] = field(default_factory=dict)
    worst: dict[RegionPair, Offender] = field(default_factory=dict)
    points: int = 0

    @property
    def overall(self) -> float:
        return max(self.max_error.values(), default=0.0)

    def passed(self, tol: float = ORACLE_TOL) -> bool:
        return self.overall <= tol


def oracle_check(grid: int = 9, n_random: int = 20, seed: int = 0) -> OracleReport:
    """Closed-form vs dilation coefficients over a grid x grid acceleration mesh."""
    if grid < 2:
        raise ValueError(f"grid size must be >= 2, got {grid}")
    rs = np.linspace(0.0, R_MAX, grid)
    report = OracleReport(max_error={p: 0.0 for p in CLOSED_FORM_PAIRS})
    for params in check_states(n_random, seed):
        coeffs = XCoefficients.from_params(params)
        rho = coeffs.matrix()
        for ra in rs:
            for rb in rs:
                report.points += 1
                for pair in CLOSED_FORM_PAIRS:
                    fast = channel_closed_form(coeffs, ra, rb, pair).as_array()
                    slow = XCoefficients.from_matrix(channel_oracle(rho, ra, rb, pair)).as_array()
                    diff = np.abs(fast - slow)
                    k = int(np.argmax(diff))
                    if pair not in report.worst or diff[k] > report.worst[pair].error:
                        report.worst[pair] = Offender(params, float(ra), float(rb), COEFF_NAMES[k], float(diff[k]))
                    report.max_error[pair] = max(report.max_error[pair], float(diff[k]))
    return report


def twirl_check(grid: int = 9, n_random: int = 20, seed: int = 0) -> float:
    """Largest pairwise gap between capacity, closed-form decoded information and
    the explicit Holevo quantity, over every region pairing and grid point."""
    rs = np.linspace(0.0, R_MAX, grid)
    closed, encoded = [], []
    for params in check_states(n_random, seed):
        coeffs = XCoefficients.from_params(params)
        for ra in rs:
            for rb in rs:
                for pair in RegionPair:
                    b = channel_closed_form(coeffs, ra, rb, pair)
                    rho = b.matrix()
                    closed.append((capacity(rho), decoded_information_closed_form(b)))
                    encoded.append([m for _, m in pauli_encode(rho, UNIFORM)])
    chi = holevo_batch(np.array(UNIFORM.probabilities), np.array(encoded))
    c, d = np.array(closed).T
    return float(max(np.max(np.abs(c - d)), np.max(np.abs(c - chi)), np.max(np.abs(d - chi))))
