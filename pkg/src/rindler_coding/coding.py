"""Dense-coding figures of merit for a two-qubit channel (Alice's qubit first).

All entropies are in bits. The capacity is the standard dense-coding
capacity log2(2) + S(rho_B) - S(rho_AB); the decoded information is the
Holevo quantity of the Pauli-encoded ensemble.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .hilbert import (
    PSD_TOL,
    entropy_from_eigenvalues,
    hermitian_eigenvalues,
    partial_trace,
    validate_density_matrix,
)
from .xstate import XCoefficients, check_x_form, x_state_eigenvalues

LOG2_D = 1.0
PROB_TOL = 1e-12

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_I, PAULI_X, PAULI_Y, PAULI_Z)
_ALICE_PAULIS = tuple(np.kron(u, PAULI_I) for u in PAULIS)


@dataclass(frozen=True)
class EncodingEnsemble:
    """Probabilities for Alice applying I, X, Y, Z to her qubit."""

    probabilities: tuple[float, float, float, float] = (0.25, 0.25, 0.25, 0.25)

    def __post_init__(self):
        p = tuple(float(v) for v in self.probabilities)
        if len(p) != 4:
            raise ValueError(f"need 4 probabilities, got {len(p)}")
        if min(p) < 0.0:
            raise ValueError(f"negative probability in {p}")
        if abs(sum(p) - 1.0) > PROB_TOL:
            raise ValueError(f"probabilities sum to {sum(p)!r}, expected 1")
        object.__setattr__(self, "probabilities", p)

    @property
    def encoders(self) -> tuple[np.ndarray, ...]:
        return PAULIS


UNIFORM = EncodingEnsemble()


@dataclass(frozen=True)
class InfoReport:
    capacity_bits: float
    decoded_bits: float
    entropy_joint_bits: float
    entropy_bob_bits: float
    negativity: float


def _is_x_form(m: np.ndarray) -> bool:
    try:
        check_x_form(m)
    except ValueError:
        return False
    return True


def _clamp_bits(v: float, hi: float) -> float:
    if -PSD_TOL <= v < 0.0:
        return 0.0
    if hi < v <= hi + PSD_TOL:
        return hi
    return float(v)


def joint_entropy(rho: np.ndarray) -> float:
    """S(rho_AB); closed-form spectrum for X-form input, Jacobi otherwise."""
    if _is_x_form(rho):
        return entropy_from_eigenvalues(np.clip(x_state_eigenvalues(rho), 0.0, None))
    return entropy_from_eigenvalues(np.clip(hermitian_eigenvalues(rho), 0.0, None))


def bob_entropy(rho: np.ndarray) -> float:
    rho_b = partial_trace(rho, [1])
    return entropy_from_eigenvalues(np.clip(hermitian_eigenvalues(rho_b), 0.0, None))


def capacity(rho: np.ndarray) -> float:
    """Dense-coding capacity in bits, in [0, 2]."""
    rho = validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"capacity needs a two-qubit state, got shape {rho.shape}")
    return _clamp_bits(LOG2_D + bob_entropy(rho) - joint_entropy(rho), 2.0)


def pauli_encode(rho: np.ndarray, ens: EncodingEnsemble = UNIFORM) -> list[tuple[float, np.ndarray]]:
    """The ensemble {p_i, (U_i x I) rho (U_i x I)^dagger}."""
    rho = validate_density_matrix(rho)
    out = []
    if ens.encoders is PAULIS:
        lifted = _ALICE_PAULIS
    else:
        lifted = tuple(np.kron(u, PAULI_I) for u in ens.encoders)
    for p, w in zip(ens.probabilities, lifted):
        out.append((p, w @ rho @ w.conj().T))
    return out


def average_coded_state(encoded: Sequence[tuple[float, np.ndarray]]) -> np.ndarray:
    probs = np.array([p for p, _ in encoded], dtype=float)
    if abs(probs.sum() - 1.0) > PROB_TOL:
        raise ValueError(f"ensemble probabilities sum to {probs.sum()!r}, expected 1")
    return sum(p * m for p, m in encoded)


def holevo_information(encoded: Sequence[tuple[float, np.ndarray]]) -> float:
    """chi = S(sum p_i rho_i) - sum p_i S(rho_i), by explicit eigensolves."""
    average_coded_state(encoded)
    probs = np.array([p for p, _ in encoded], dtype=float)
    states = np.stack([m for _, m in encoded])
    return float(holevo_batch(probs, states[None])[0])


def holevo_batch(probs: np.ndarray, states: np.ndarray) -> np.ndarray:
    """Holevo quantities for a stack of ensembles sharing one probability vector.

    ``states`` has shape (N, k, d, d); all N * (k + 1) eigensolves run as a
    single batched Jacobi call.
    """
    probs = np.asarray(probs, dtype=float)
    states = np.asarray(states, dtype=complex)
    rho_cod = np.einsum("k,nkij->nij", probs, states)
    stack = np.concatenate([rho_cod[:, None], states], axis=1)
    evals = np.clip(hermitian_eigenvalues(stack), 0.0, None)
    s = entropy_from_eigenvalues(evals)
    chi = s[:, 0] - s[:, 1:] @ probs
    hi = float(np.log2(states.shape[-1]))
    return np.array([_clamp_bits(v, hi) for v in chi])


def decoded_information_closed_form(coeffs: XCoefficients | np.ndarray) -> float:
    """Holevo quantity of the uniform Pauli ensemble for an X-form channel.

    The uniform twirl leaves I/2 (x) rho_B, whose spectrum is
    (1 +- |(b11 + b33) - (b22 + b44)|) / 4, each twice.
    """
    m = coeffs.matrix() if isinstance(coeffs, XCoefficients) else np.asarray(coeffs)
    check_x_form(m)
    d = np.diagonal(m).real
    bias = abs((d[0] + d[2]) - (d[1] + d[3]))
    lam_plus, lam_minus = 0.25 * (1 + bias), 0.25 * (1 - bias)
    s_cod = entropy_from_eigenvalues([lam_plus, lam_plus, lam_minus, lam_minus])
    s_joint = entropy_from_eigenvalues(np.clip(x_state_eigenvalues(m), 0.0, None))
    return _clamp_bits(s_cod - s_joint, 2.0)


def partial_transpose(rho: np.ndarray) -> np.ndarray:
    """Transpose Bob's (second) qubit."""
    t = np.asarray(rho).reshape(2, 2, 2, 2)
    return t.transpose(0, 3, 2, 1).reshape(4, 4)


def negativity(rho: np.ndarray) -> float:
    rho = validate_density_matrix(rho)
    evals = hermitian_eigenvalues(partial_transpose(rho))
    return float(-np.sum(evals[evals < 0.0]))


def info_report(rho: np.ndarray) -> InfoReport:
    """All figures of merit for one channel; X-form channels use closed forms."""
    rho = validate_density_matrix(rho)
    if _is_x_form(rho):
        decoded = decoded_information_closed_form(rho)
    else:
        decoded = holevo_information(pauli_encode(rho))
    s_joint = joint_entropy(rho)
    s_bob = bob_entropy(rho)
    return InfoReport(
        capacity_bits=_clamp_bits(LOG2_D + s_bob - s_joint, 2.0),
        decoded_bits=decoded,
        entropy_joint_bits=s_joint,
        entropy_bob_bits=s_bob,
        negativity=negativity(rho),
    )
