"""Dense linear algebra for small qubit registers.

Matrices are plain ``numpy`` complex arrays. Qubit factors are labelled by
integer position with qubit 0 the most significant bit of the basis index;
for the four-mode Rindler register the order is ``(A_I, A_II, B_I, B_II)``
so that ``b = 8*a_I + 4*a_II + 2*b_I + b_II``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

A_I, A_II, B_I, B_II = 0, 1, 2, 3

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
JACOBI_TOL = 1e-13
ENTROPY_FLOOR = 1e-14

_MAX_SWEEPS = 60


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product with ``a``'s indices most significant."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def num_qubits(m: np.ndarray) -> int:
    dim = m.shape[-1]
    n = dim.bit_length() - 1
    if m.ndim < 2 or m.shape[-2] != dim or (1 << n) != dim:
        raise ValueError(f"expected a square matrix of dimension 2**n, got shape {m.shape}")
    return n


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    return bool(np.max(np.abs(m - np.swapaxes(m, -1, -2).conj()), initial=0.0) <= tol)


def validate_density_matrix(rho, name: str = "rho") -> np.ndarray:
    """Return ``rho`` as a complex array, raising ``ValueError`` if it is not a state.

    Checks Hermiticity and unit trace to 1e-12 and the smallest eigenvalue
    against -1e-10. The eigenvalue is only computed for the error message.
    """
    m = np.asarray(rho, dtype=complex)
    num_qubits(m)
    if m.ndim != 2:
        raise ValueError(f"{name}: expected a single matrix, got shape {m.shape}")
    herm_err = float(np.max(np.abs(m - m.conj().T)))
    if herm_err > HERMITIAN_TOL:
        raise ValueError(f"{name}: not Hermitian (max |M - M^dagger| = {herm_err:.3e})")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"{name}: trace is {tr.real:.15g}, expected 1")
    if not is_psd(m):
        lo = hermitian_eigenvalues(m)[-1]
        raise ValueError(f"{name}: not positive semidefinite (min eigenvalue {lo:.3e})")
    return m


def is_psd(m: np.ndarray, tol: float = PSD_TOL) -> bool:
    """True iff the smallest eigenvalue of Hermitian ``m`` is >= -tol.

    Cholesky on M + tol*I succeeds exactly when that shifted matrix is
    positive definite, which is cheaper than a full eigensolve.
    """
    shifted = m + tol * np.eye(m.shape[-1])
    try:
        np.linalg.cholesky(shifted)
    except np.linalg.LinAlgError:
        return False
    return True


def partial_trace(rho: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """Reduce ``rho`` onto the qubits in ``keep``, in the listed order.

    >>> bell = np.array([[0, 0, 0, 0], [0, .5, -.5, 0], [0, -.5, .5, 0], [0, 0, 0, 0]])
    >>> np.allclose(partial_trace(bell, [0]), np.eye(2) / 2)
    True
    """
    m = np.asarray(rho, dtype=complex)
    n = num_qubits(m)
    keep = [int(k) for k in keep]
    if not keep:
        raise ValueError("keep must name at least one qubit")
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate qubit labels in keep={keep}")
    for k in keep:
        if not 0 <= k < n:
            raise ValueError(f"qubit label {k} out of range for a {n}-qubit state")

    traced = [q for q in range(n) if q not in keep]
    t = m.reshape([2] * (2 * n))
    # ket axes 0..n-1, bra axes n..2n-1
    perm = keep + traced + [n + q for q in keep] + [n + q for q in traced]
    d_keep, d_traced = 1 << len(keep), 1 << len(traced)
    t = t.transpose(perm).reshape(d_keep, d_traced, d_keep, d_traced)
    return np.einsum("ajbj->ab", t)


def _jacobi_diagonalize(a: np.ndarray) -> np.ndarray:
    """Cyclic complex Jacobi sweeps on a stack of Hermitian matrices.

    Returns the (unsorted) real diagonal after convergence. All matrices in the
    stack receive the same (p, q) pivot sequence; a pivot whose element is
    already zero gets the identity rotation.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[-1]
    batch = a.shape[0]
    rows = np.arange(batch)
    mask = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(a[:, mask]) ** 2, axis=-1))
        if np.all(off < JACOBI_TOL):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                g = np.abs(apq)
                active = g > 0.0
                if not active.any():
                    continue
                safe_g = np.where(active, g, 1.0)
                phase = np.where(active, apq / safe_g, 1.0)
                theta = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe_g)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                c = np.where(active, c, 1.0)
                s = np.where(active, s, 0.0)
                # J = D(phase) R(c, s): columns p, q of the identity replaced
                jp_p, jp_q = c, -s * phase.conj()
                jq_p, jq_q = s, c * phase.conj()
                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = col_p * jp_p[:, None] + col_q * jp_q[:, None]
                a[:, :, q] = col_p * jq_p[:, None] + col_q * jq_q[:, None]
                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = row_p * jp_p[:, None] + row_q * jp_q.conj()[:, None]
                a[:, q, :] = row_p * jq_p[:, None] + row_q * jq_q.conj()[:, None]
                a[rows, p, q] = 0.0
                a[rows, q, p] = 0.0
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")
    return np.real(np.diagonal(a, axis1=-2, axis2=-1))


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix (or stack of them), descending.

    Uses cyclic Jacobi rotations, which are plenty fast for dimension <= 16 and
    accurate to near machine precision for tiny eigenvalues.
    """
    a = np.asarray(m, dtype=complex)
    num_qubits(a)
    if not is_hermitian(a):
        raise ValueError("matrix is not Hermitian within 1e-12")
    stack = a.reshape(-1, a.shape[-2], a.shape[-1])
    evals = _jacobi_diagonalize(stack)
    evals = -np.sort(-evals, axis=-1)
    return evals.reshape(a.shape[:-1])


def entropy_from_eigenvalues(evals) -> float | np.ndarray:
    """Shannon entropy in bits of a spectrum (last axis), with 0 log 0 = 0."""
    lam = np.asarray(evals, dtype=float)
    if np.any(lam < -PSD_TOL):
        raise ValueError(f"negative eigenvalue {lam.min():.3e} below -1e-10")
    lam = np.where(lam > ENTROPY_FLOOR, lam, 1.0)
    s = -np.sum(lam * np.log2(lam), axis=-1)
    # -0.0 and roundoff noise from pure states
    s = np.maximum(s, 0.0)
    return float(s) if np.ndim(s) == 0 else s


def von_neumann_entropy(rho: np.ndarray) -> float:
    """S(rho) = -Tr rho log2 rho, in bits."""
    m = validate_density_matrix(rho)
    return entropy_from_eigenvalues(hermitian_eigenvalues(m))


def random_density_matrix(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Normalized G G^dagger with complex Gaussian G (Ginibre ensemble)."""
    k = dim if rank is None else rank
    g = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
