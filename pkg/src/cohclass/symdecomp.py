"""Quadratic Casimir on the symmetric square and its isotypic decomposition.

The symmetric square of the carrier space is coordinatized through an
isometry whose rows are e_i(x)e_i followed by (e_i(x)e_j + e_j(x)e_i)/sqrt(2)
in lex order, so all operators downstream act on D = N(N+1)/2 coordinates.

The Casimir is assembled per simple factor: generators are orthonormalized
in the trace form of the given matrices, the resulting structure constants
yield the Killing form on the abstract algebra, and the ratio between the
two forms fixes the normalization.  With that choice the eigenvalue on a
spin-j component of an su2 factor is j(j+1)/2, and eigenvalues of distinct
factors are directly comparable.

Distinct components of a product group can share the same total Casimir
value, so clustering runs on a generically weighted sum of the per-factor
operators (weights sqrt(p_f/2) for the f-th prime p_f, rationally
independent) and only the reported values are totals.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ClusterAmbiguity, ConstructionFailure

# enough primes for any realistic number of simple factors
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class SymmetricEmbedding:
    """Isometry from symmetric-square coordinates into V(x)V.

    ``iso`` has shape (D, n^2) with D = n(n+1)/2, orthonormal rows; the
    pulled-back projector ``iso.conj().T @ iso`` is the symmetrizer.
    """

    n: int
    iso: np.ndarray

    @property
    def dim_out(self):
        return self.iso.shape[0]


@dataclass(frozen=True)
class SymDecomposition:
    """Isotypic decomposition of the Casimir on the symmetric square.

    ``eigenvalues`` are total Casimir values per component, largest first
    (for products two components can tie in total; they are still kept
    apart by the per-factor clustering).  ``top_index`` is always the
    component with maximal value, ``complement_rank`` is D minus its rank.
    """

    eigenvalues: tuple
    dims: tuple
    projectors: tuple
    top_index: int
    complement_rank: int


def symmetric_embedding(n):
    """Build the SymmetricEmbedding for dimension n."""
    pairs = list(combinations(range(n), 2))
    d = n + len(pairs)
    iso = np.zeros((d, n * n), dtype=complex)
    for i in range(n):
        iso[i, i * n + i] = 1.0
    for r, (i, j) in enumerate(pairs):
        iso[n + r, i * n + j] = 1.0 / np.sqrt(2.0)
        iso[n + r, j * n + i] = 1.0 / np.sqrt(2.0)
    return SymmetricEmbedding(n, iso)


def symmetric_square_action(rep, emb=None):
    """Push each generator X forward to iso (X(x)I + I(x)X) iso^dag on V∨V."""
    if emb is None:
        emb = symmetric_embedding(rep.dim)
    eye = np.eye(rep.dim)
    down = emb.iso.conj().T
    return [emb.iso @ (np.kron(g, eye) + np.kron(eye, g)) @ down for g in rep.generators]


def casimir_factors(rep, emb=None):
    """Per-factor Casimir operators on the symmetric square.

    Returns
    -------
    tuple of ndarray
        One Hermitian PSD (D, D) matrix per entry of ``rep.factor_boundaries``;
        a factor represented by zero (trivially acting) generators
        contributes the zero matrix.
    """
    if emb is None:
        emb = symmetric_embedding(rep.dim)
    pushed = symmetric_square_action(rep, emb)
    d = emb.dim_out
    out = []
    for a, b in rep.factor_boundaries:
        block = rep.generators[a:b]
        gram = np.array([[-np.trace(x @ y) for y in block] for x in block]).real
        if np.linalg.norm(gram) < 1e-14:
            out.append(np.zeros((d, d)))
            continue
        w, q = np.linalg.eigh(gram)
        if w.min() < 1e-12 * w.max():
            raise ConstructionFailure("linearly dependent generators within a factor")
        inv_sqrt = q @ np.diag(w ** -0.5) @ q.T
        nb = len(block)
        xhat = [sum(inv_sqrt[j, k] * block[j] for j in range(nb)) for k in range(nb)]
        yhat = [sum(inv_sqrt[j, k] * pushed[a + j] for j in range(nb)) for k in range(nb)]
        f = np.empty((nb, nb, nb))
        for c in range(nb):
            for i in range(nb):
                for j in range(nb):
                    val = -np.trace(xhat[c] @ (xhat[i] @ xhat[j] - xhat[j] @ xhat[i]))
                    f[c, i, j] = val.real
        killing = np.einsum("cad,dbc->ab", f, f)
        kappa = -np.trace(killing) / nb
        if kappa <= 0 or np.linalg.norm(killing + kappa * np.eye(nb)) > 1e-8 * kappa * nb:
            raise ConstructionFailure("Killing form is not a negative multiple of identity")
        lf = np.zeros((d, d), dtype=complex)
        for y in yhat:
            lf -= y @ y
        lf /= kappa
        out.append((lf + lf.conj().T) / 2.0)
    return tuple(out)


def casimir_on_symmetric_square(rep, emb=None):
    """Total Casimir operator L on the symmetric square, Hermitian (D, D)."""
    return sum(casimir_factors(rep, emb))


def decompose(L, generators, cluster_tol=1e-8):
    """Cluster the Casimir spectrum into isotypic components.

    Parameters
    ----------
    L : ndarray or sequence of ndarray
        Total Casimir matrix, or the per-factor matrices from
        ``casimir_factors`` (preferred for products, where distinct
        components can collide in total value).
    generators : sequence of ndarray
        Symmetric-square generator images, used for a cheap intertwiner
        sanity check on the projectors.
    cluster_tol : float
        Gap threshold, relative to the spectral range of the clustered
        operator.

    Raises
    ------
    ClusterAmbiguity
        Two clusters closer than 10x the absolute gap threshold.
    """
    if isinstance(L, np.ndarray):
        factors = [L]
    else:
        factors = list(L)
    for f in factors:
        if np.linalg.norm(f - f.conj().T) > 1e-8 * max(1.0, np.linalg.norm(f)):
            raise ConstructionFailure("Casimir input is not Hermitian")
    weights = [np.sqrt(_PRIMES[i] / 2.0) for i in range(len(factors))]
    mix = sum(w * f for w, f in zip(weights, factors))
    evals, evecs = np.linalg.eigh(mix)
    d = mix.shape[0]
    spread = float(evals[-1] - evals[0])
    gap = cluster_tol * max(1.0, spread)
    # split the sorted spectrum wherever consecutive values are separated
    clusters = []
    start = 0
    for i in range(1, d):
        if evals[i] - evals[i - 1] > gap:
            clusters.append((start, i))
            start = i
    clusters.append((start, d))
    for (_, e_prev), (s_next, _) in zip(clusters, clusters[1:]):
        if evals[s_next] - evals[e_prev - 1] < 10.0 * gap:
            raise ClusterAmbiguity(
                f"cluster separation {evals[s_next] - evals[e_prev - 1]:.3e} "
                f"below 10x threshold {gap:.3e}")
    entries = []
    for s, e in clusters:
        basis = evecs[:, s:e]
        proj = basis @ basis.conj().T
        proj = (proj + proj.conj().T) / 2.0
        per_factor = tuple(
            float(np.mean(np.einsum("ij,jk,ki->i", basis.conj().T, f, basis).real))
            for f in factors)
        entries.append((sum(per_factor), per_factor, e - s, proj))
    entries.sort(key=lambda t: (t[0], t[1]), reverse=True)
    eigenvalues = tuple(t[0] for t in entries)
    dims = tuple(t[2] for t in entries)
    projectors = tuple(t[3] for t in entries)
    dev = max(
        (np.linalg.norm(p @ y - y @ p) for p in projectors for y in generators),
        default=0.0)
    if dev > 1e-6:
        raise ConstructionFailure(f"projector fails to commute with a generator ({dev:.3e})")
    return SymDecomposition(eigenvalues, dims, projectors, 0, d - dims[0])


def is_theta_admissible(dec, generators, tol=1e-9):
    """Whether the complement of the top component is a single trivial line.

    True iff ``complement_rank == 1`` and every symmetric-square generator
    annihilates that line.
    """
    if dec.complement_rank != 1:
        return False
    comp = sum(dec.projectors[i] for i in range(len(dec.projectors)) if i != dec.top_index)
    col = int(np.argmax(np.linalg.norm(comp, axis=0)))
    w = comp[:, col]
    w = w / np.linalg.norm(w)
    for y in generators:
        if np.linalg.norm(y @ w) > tol * max(1.0, np.linalg.norm(y)):
            return False
    return True
