"""Input validation helpers for states and state batches."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, InvalidState


def check_unit_vector(v, dim=None, tol=1e-8):
    """Validate and return a 1-D complex unit vector."""
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1:
        raise InvalidState(f"expected a vector, got ndim {arr.ndim}")
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatch(f"vector length {arr.shape[0]}, expected {dim}")
    norm = np.linalg.norm(arr)
    if abs(norm - 1.0) > tol:
        raise InvalidState(f"vector norm {norm:.6g} is not 1")
    return arr


def check_density_matrix(rho, dim=None, tol=1e-10):
    """Validate a density matrix: Hermitian, PSD up to tol, unit trace.

    Returns the hermitized copy (rho + rho^dag)/2 so downstream
    eigensolvers see an exactly Hermitian array.
    """
    arr = np.asarray(rho, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidState(f"expected a square matrix, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatch(f"matrix side {arr.shape[0]}, expected {dim}")
    scale = max(1.0, float(np.linalg.norm(arr)))
    if np.linalg.norm(arr - arr.conj().T) > tol * scale:
        raise InvalidState("matrix is not Hermitian within tolerance")
    herm = (arr + arr.conj().T) / 2.0
    if abs(np.trace(herm).real - 1.0) > max(tol, 1e-10) or abs(np.trace(herm).imag) > tol:
        raise InvalidState(f"trace {np.trace(herm):.6g} is not 1")
    evals = np.linalg.eigvalsh(herm)
    floor = -max(tol, 1e-10)
    if evals.min() < floor:
        raise InvalidState(f"negative eigenvalue {evals.min():.3e}")
    return herm


def check_state_batch(x, dim, tol=1e-8):
    """Validate a (k, dim) batch of unit state vectors, rows normalized."""
    arr = np.asarray(x, dtype=complex)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2:
        raise InvalidState(f"expected a 2-D batch, got ndim {arr.ndim}")
    if arr.shape[1] != dim:
        raise DimensionMismatch(f"state length {arr.shape[1]}, expected {dim}")
    norms = np.linalg.norm(arr, axis=1)
    bad = np.abs(norms - 1.0) > tol
    if bad.any():
        raise InvalidState(f"rows {np.nonzero(bad)[0].tolist()} are not unit vectors")
    return arr
