"""Operator-map correspondence on V(x)V and spectral Kraus decompositions.

Conventions, fixed once and used everywhere:

* product basis is row-major with the first factor as the major index,
  (v(x)w)[i*n + k] = v_i w_k;
* the reference entangled vector is the unnormalized phi = sum_i e_i(x)e_i,
  with squared norm n;
* the Kraus operator attached to an eigenvector f of A is T = unvec(f)^T
  scaled by the square root of the eigenvalue.  The transpose makes the
  channel action sum_a T_a rho T_a^dag equal tr_1[(rho^T (x) I) A] for
  every A, and gives the normalization sum_a T_a T_a^dag = tr_1[A].

All conjugations are entrywise in this one basis; operators carry a
``basis_tag`` and combining different tags is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import DimensionMismatch, NotPSD

STANDARD_BASIS = "standard"


@dataclass(frozen=True)
class PositiveOperator:
    """Hermitian PSD matrix on V(x)V, with the basis it is written in."""

    matrix: np.ndarray
    basis_tag: str = STANDARD_BASIS

    @property
    def n(self):
        side = isqrt(self.matrix.shape[0])
        if side * side != self.matrix.shape[0]:
            raise DimensionMismatch(f"side {self.matrix.shape[0]} is not a square")
        return side


@dataclass(frozen=True)
class KrausSet:
    """Spectral Kraus operators with their eigenvalues already absorbed."""

    operators: tuple
    weights: tuple
    basis_tag: str = STANDARD_BASIS


def _as_matrix(a):
    return a.matrix if isinstance(a, PositiveOperator) else np.asarray(a)


def maximally_entangled_vector(n):
    """The unnormalized vector sum_i e_i(x)e_i, squared norm n."""
    return np.eye(n, dtype=complex).reshape(-1)


def jamiolkowski_forward(kraus, n):
    """Operator A = sum_a (I(x)T_a) |phi)(phi| (I(x)T_a^dag) on V(x)V."""
    a = np.zeros((n * n, n * n), dtype=complex)
    for t in kraus.operators:
        if t.shape != (n, n):
            raise DimensionMismatch(f"Kraus operator shape {t.shape}, expected {(n, n)}")
        w = t.T.reshape(-1)  # (I (x) T) phi
        a += np.outer(w, w.conj())
    return PositiveOperator((a + a.conj().T) / 2.0, kraus.basis_tag)


def kraus_from(a, rank_tol=1e-10):
    """Spectral Kraus decomposition of a PSD operator on V(x)V.

    Eigenvalues below ``rank_tol`` times the largest magnitude eigenvalue
    are treated as zero; clearly negative ones raise.

    Raises
    ------
    NotPSD
        Minimum eigenvalue below -1e-8 times the operator norm.
    """
    mat = _as_matrix(a)
    n = isqrt(mat.shape[0])
    if n * n != mat.shape[0] or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatch(f"operator shape {mat.shape} is not (n^2, n^2)")
    evals, vecs = np.linalg.eigh((mat + mat.conj().T) / 2.0)
    scale = max(1.0, float(np.abs(evals).max(initial=0.0)))
    if evals.min(initial=0.0) < -1e-8 * scale:
        raise NotPSD(f"eigenvalue {evals.min():.3e} on operator of norm {scale:.3e}")
    ops = []
    weights = []
    for lam, f in zip(evals, vecs.T):
        if lam <= rank_tol * scale:
            continue
        t = np.sqrt(lam) * f.reshape(n, n).T
        # eigenvector phase is arbitrary; pin the largest entry real positive
        pivot = t.ravel()[np.argmax(np.abs(t))]
        t = t * (pivot.conj() / abs(pivot))
        ops.append(t)
        weights.append(float(lam))
    tag = a.basis_tag if isinstance(a, PositiveOperator) else STANDARD_BASIS
    return KrausSet(tuple(ops), tuple(weights), tag)


def partial_trace_first(a):
    """Trace over the first tensor factor, (n^2, n^2) -> (n, n)."""
    mat = _as_matrix(a)
    n = isqrt(mat.shape[0])
    return np.einsum("ikil->kl", mat.reshape(n, n, n, n))


def inverse_jamiolkowski_apply(a, rho):
    """Channel action tr_1[(rho^T (x) I) A] of the operator A on rho."""
    mat = _as_matrix(a)
    rho = np.asarray(rho)
    n = rho.shape[0]
    if rho.shape != (n, n):
        raise DimensionMismatch(f"state shape {rho.shape} is not square")
    if mat.shape[0] != n * n:
        raise DimensionMismatch(
            f"operator side {mat.shape[0]} does not match state dimension {n}")
    return partial_trace_first(np.kron(rho.T, np.eye(n)) @ mat)


def is_proportional_trace_preserving(a, tol=1e-9):
    """Check tr_1[A] = c I; returns (True, c) or (False, None)."""
    mat = _as_matrix(a)
    marginal = partial_trace_first(mat)
    n = marginal.shape[0]
    c = complex(np.trace(marginal)) / n
    if np.linalg.norm(marginal - c * np.eye(n)) <= tol * max(1.0, np.linalg.norm(mat)):
        return True, float(c.real)
    return False, None


def matrix_element_via_kraus(kraus, v1, v2, v3, v4):
    """Matrix element (v1(x)v2 | A | v3(x)v4) from the Kraus operators of A.

    Computes sum_a (v1 | T_a^T K v2)(K v3 | T_a^dag v4) with K the
    entrywise conjugation.  The transpose in the first slot is required
    for general A; it drops out exactly when A is supported on the
    symmetric subspace, where every T_a is a symmetric matrix.
    """
    total = 0.0 + 0.0j
    for t in kraus.operators:
        total += (v1.conj() @ t.T @ v2.conj()) * (v3 @ t.conj().T @ v4)
    return total
