"""Extraction of the antiunitary operator that witnesses classicality.

When the symmetric square splits into the top component plus a single
trivial line, that line pulls back to a symmetric unit vector on V(x)V.
Its spectral Kraus operator traces down to I/N, so after rescaling by
sqrt(N) it becomes a symmetric unitary T, and theta(v) = T conj(v) is an
invariant antiunitary whose expectation |(v| T conj(v))| vanishes exactly
on the classical pure states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .choi import (PositiveOperator, STANDARD_BASIS, is_proportional_trace_preserving,
                   kraus_from)
from .errors import NotAdmissible, RescaleFailure
from .repkit import sample_group_element


@dataclass(frozen=True)
class AntiunitaryDetector:
    """Antiunitary v -> T conj(v) in the fixed basis; T is symmetric unitary."""

    T: np.ndarray
    basis_tag: str = STANDARD_BASIS

    @property
    def dim(self):
        return self.T.shape[0]


def lifted_complement(dec, emb):
    """The complement of the top component, pulled back to V(x)V."""
    comp = sum(dec.projectors[i] for i in range(len(dec.projectors))
               if i != dec.top_index)
    down = emb.iso.conj().T
    lifted = down @ comp @ emb.iso
    return PositiveOperator((lifted + lifted.conj().T) / 2.0)


def extract_theta(dec, emb, tol=1e-9):
    """Build the detector from a decomposition with a rank-one trivial complement.

    Parameters
    ----------
    dec : SymDecomposition
        Must be theta-admissible (complement_rank == 1, trivial action).
    emb : SymmetricEmbedding
    tol : float
        Tolerance for the trace-down, unitarity and symmetry checks.

    Raises
    ------
    NotAdmissible
        complement_rank differs from 1.
    RescaleFailure
        The complement does not trace down to I/N, or the rescaled
        operator fails unitarity or symmetry (signals an upstream
        decomposition problem).
    """
    if dec.complement_rank != 1:
        raise NotAdmissible(
            f"complement rank {dec.complement_rank}, detector needs exactly 1")
    a = lifted_complement(dec, emb)
    kraus = kraus_from(a)
    if len(kraus.operators) != 1:
        raise RescaleFailure(
            f"lifted complement has Kraus rank {len(kraus.operators)}, expected 1")
    n = emb.n
    ok, c = is_proportional_trace_preserving(a, tol)
    if not ok or abs(c - 1.0 / n) > tol:
        raise RescaleFailure("lifted complement does not trace down to I/N")
    t = np.sqrt(n) * kraus.operators[0]
    loose = tol * max(1.0, np.sqrt(n))
    if np.linalg.norm(t.conj().T @ t - np.eye(n)) > loose:
        raise RescaleFailure("rescaled detector is not unitary")
    if np.linalg.norm(t - t.T) > loose:
        raise RescaleFailure("rescaled detector is not symmetric")
    return AntiunitaryDetector(t, a.basis_tag)


def theta_expectation(theta, v):
    """|(v | T conj(v))| for a unit vector v; zero exactly on classical states."""
    return float(abs(np.vdot(v, theta.T @ np.conj(v))))


def verify_k_invariance(theta, rep, samples=50, seed=0):
    """Max over sampled group elements U of ||U^dag T conj(U) - T||.

    Deterministic for a given seed; an invariant detector stays below
    1e-9 while a generic unitary lands around 0.1 or more.
    """
    t = theta.T
    dev = 0.0
    for i in range(samples):
        u = sample_group_element(rep, [seed, i])
        dev = max(dev, float(np.linalg.norm(u.conj().T @ t @ np.conj(u) - t)))
    return dev
