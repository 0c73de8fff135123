"""Construction of the supported unitary group representations.

A representation is stored concretely: a tuple of anti-Hermitian generator
matrices, indices of a commuting (Cartan) subset, raising and lowering
operators where the family provides a triangular decomposition, and the
index ranges of the simple factors.  The exceptional families (g2, spin7)
carry generators only; they have no raising operators here and
consequently no highest weight vector routine.

Supported families
------------------
su2                  spin s = two_s / 2, dimension two_s + 1
suN_fundamental      defining representation of su(n), dimension n
suN_antisym_square   su(n) on the antisymmetric square, dimension n(n-1)/2
product              tensor product of previously supported factors
g2_fundamental       7-dimensional representation via octonion derivations
spin7_spinor         8-dimensional spinor representation via Clifford algebra
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations

import numpy as np
from scipy.linalg import expm

from . import _octonion
from .errors import ConstructionFailure, DegenerateKernel, UnsupportedSpec

FAMILIES = (
    "su2",
    "suN_fundamental",
    "suN_antisym_square",
    "product",
    "g2_fundamental",
    "spin7_spinor",
)


@dataclass(frozen=True)
class RepSpec:
    """Parameters selecting one representation.

    Exactly one of the parameter slots is meaningful per family: ``two_s``
    for su2, ``n`` for the su(n) families, ``factors`` for products.
    """

    family: str
    two_s: int | None = None
    n: int | None = None
    factors: tuple["RepSpec", ...] = ()


@dataclass(frozen=True)
class Representation:
    """A concretely built representation.

    Attributes
    ----------
    spec : RepSpec
        The request this was built from.
    dim : int
        Dimension of the carrier space.
    generators : tuple of ndarray
        Anti-Hermitian matrices spanning the represented Lie algebra.
    cartan_indices : tuple of int
        Indices into ``generators`` of a maximal commuting subset, empty
        for families built without a weight basis.
    raising, lowering : tuple of ndarray
        Nilpotent triangular operators, ``lowering[k] == raising[k].conj().T``.
        Empty for g2 and spin7.
    factor_boundaries : tuple of (int, int)
        Half-open index ranges into ``generators``, one per simple factor.
    """

    spec: RepSpec
    dim: int
    generators: tuple
    cartan_indices: tuple
    raising: tuple
    lowering: tuple
    factor_boundaries: tuple


def _su2_parts(two_s):
    dim = two_s + 1
    s = two_s / 2.0
    m = s - np.arange(dim)  # weights in decreasing order
    sz = np.diag(m).astype(complex)
    sp = np.zeros((dim, dim), dtype=complex)
    for col in range(1, dim):
        mm = m[col]
        sp[col - 1, col] = np.sqrt(s * (s + 1) - mm * (mm + 1))
    sm = sp.conj().T
    sx = (sp + sm) / 2.0
    sy = (sp - sm) / 2.0j
    gens = (1j * sx, 1j * sy, 1j * sz)
    return gens, (2,), (sp,), (sm,)


def _sun_parts(n):
    gens = []
    for i, j in combinations(range(n), 2):
        e = np.zeros((n, n), dtype=complex)
        e[i, j] = 1.0
        gens.append(e - e.T)
    for i, j in combinations(range(n), 2):
        e = np.zeros((n, n), dtype=complex)
        e[i, j] = 1.0
        gens.append(1j * (e + e.T))
    cartan = []
    for k in range(n - 1):
        d = np.zeros((n, n), dtype=complex)
        d[k, k] = 1j
        d[k + 1, k + 1] = -1j
        cartan.append(len(gens))
        gens.append(d)
    raising = []
    lowering = []
    for i, j in combinations(range(n), 2):
        e = np.zeros((n, n), dtype=complex)
        e[i, j] = 1.0
        raising.append(e)
        lowering.append(e.conj().T)
    return tuple(gens), tuple(cartan), tuple(raising), tuple(lowering)


def antisym_isometry(n):
    """Isometry from the antisymmetric square onto C^(n^2), rows (ei ej - ej ei)/sqrt(2)."""
    pairs = list(combinations(range(n), 2))
    iso = np.zeros((len(pairs), n * n), dtype=complex)
    for r, (i, j) in enumerate(pairs):
        iso[r, i * n + j] = 1.0 / np.sqrt(2.0)
        iso[r, j * n + i] = -1.0 / np.sqrt(2.0)
    return iso


def _lift_to_antisym(mat, iso, n):
    eye = np.eye(n)
    return iso @ (np.kron(mat, eye) + np.kron(eye, mat)) @ iso.conj().T


def _kron_embed(mat, dims, which):
    ops = [np.eye(d, dtype=complex) for d in dims]
    ops[which] = mat
    return reduce(np.kron, ops)


def build_representation(spec, tol=1e-10):
    """Build and structurally validate a representation.

    Parameters
    ----------
    spec : RepSpec
        Family and parameters.
    tol : float
        Absolute tolerance for the structural self-checks.

    Returns
    -------
    Representation

    Raises
    ------
    UnsupportedSpec
        Unknown family or parameters outside the supported range.
    ConstructionFailure
        A built representation failed anti-Hermiticity, closure,
        commutation or nilpotency checks.
    """
    rep = _dispatch(spec)
    _validate_structure(rep, tol)
    return rep


def _dispatch(spec):
    if not isinstance(spec, RepSpec):
        raise UnsupportedSpec(f"expected RepSpec, got {type(spec).__name__}")
    fam = spec.family
    if fam == "su2":
        if not isinstance(spec.two_s, int) or spec.two_s < 0:
            raise UnsupportedSpec(f"su2 needs integer two_s >= 0, got {spec.two_s!r}")
        gens, cartan, raising, lowering = _su2_parts(spec.two_s)
        return Representation(spec, spec.two_s + 1, gens, cartan, raising, lowering,
                              ((0, len(gens)),))
    if fam == "suN_fundamental":
        if not isinstance(spec.n, int) or spec.n < 2:
            raise UnsupportedSpec(f"suN_fundamental needs integer n >= 2, got {spec.n!r}")
        gens, cartan, raising, lowering = _sun_parts(spec.n)
        return Representation(spec, spec.n, gens, cartan, raising, lowering,
                              ((0, len(gens)),))
    if fam == "suN_antisym_square":
        if not isinstance(spec.n, int) or spec.n < 2:
            raise UnsupportedSpec(f"suN_antisym_square needs integer n >= 2, got {spec.n!r}")
        n = spec.n
        gens, cartan, raising, lowering = _sun_parts(n)
        iso = antisym_isometry(n)
        lift = lambda m: _lift_to_antisym(m, iso, n)
        return Representation(spec, n * (n - 1) // 2,
                              tuple(lift(g) for g in gens), cartan,
                              tuple(lift(r) for r in raising),
                              tuple(lift(l) for l in lowering),
                              ((0, len(gens)),))
    if fam == "product":
        if not spec.factors:
            raise UnsupportedSpec("product needs at least one factor")
        parts = [_dispatch(f) for f in spec.factors]
        return _assemble_product(spec, parts)
    if fam == "g2_fundamental":
        gens = tuple(g.astype(complex) for g in _octonion.g2_generators())
        return Representation(spec, 7, gens, (), (), (), ((0, len(gens)),))
    if fam == "spin7_spinor":
        gens = tuple(g.astype(complex) for g in _octonion.spin7_generators())
        return Representation(spec, 8, gens, (), (), (), ((0, len(gens)),))
    raise UnsupportedSpec(f"unknown family {fam!r}")


def _assemble_product(spec, parts):
    dims = [p.dim for p in parts]
    dim = int(np.prod(dims))
    generators = []
    cartan = []
    raising = []
    lowering = []
    boundaries = []
    for which, part in enumerate(parts):
        offset = len(generators)
        lifted = [_kron_embed(g, dims, which) for g in part.generators]
        generators.extend(lifted)
        cartan.extend(offset + k for k in part.cartan_indices)
        raising.extend(_kron_embed(r, dims, which) for r in part.raising)
        lowering.extend(_kron_embed(l, dims, which) for l in part.lowering)
        boundaries.extend((offset + a, offset + b) for a, b in part.factor_boundaries)
    return Representation(spec, dim, tuple(generators), tuple(cartan),
                          tuple(raising), tuple(lowering), tuple(boundaries))


def _validate_structure(rep, tol):
    dim = rep.dim
    for k, g in enumerate(rep.generators):
        if g.shape != (dim, dim):
            raise ConstructionFailure(f"generator {k} has shape {g.shape}, dim is {dim}")
        if np.linalg.norm(g + g.conj().T) > tol * max(1.0, np.linalg.norm(g)):
            raise ConstructionFailure(f"generator {k} is not anti-Hermitian")
    flat = np.array([g.ravel() for g in rep.generators])
    # orthonormal row basis of the algebra, for closure residuals
    q = np.linalg.svd(flat, full_matrices=False)[2]
    for (a, ga), (b, gb) in combinations(enumerate(rep.generators), 2):
        comm = (ga @ gb - gb @ ga).ravel()
        resid = comm - q.conj().T @ (q @ comm)
        if np.linalg.norm(resid) > tol * max(1.0, np.linalg.norm(comm)):
            raise ConstructionFailure(f"commutator [{a},{b}] leaves the algebra span")
    for a, b in combinations(rep.cartan_indices, 2):
        comm = rep.generators[a] @ rep.generators[b] - rep.generators[b] @ rep.generators[a]
        if np.linalg.norm(comm) > tol:
            raise ConstructionFailure(f"cartan generators {a}, {b} do not commute")
    if len(rep.raising) != len(rep.lowering):
        raise ConstructionFailure("raising/lowering length mismatch")
    for k, (r, l) in enumerate(zip(rep.raising, rep.lowering)):
        if np.linalg.norm(l - r.conj().T) > tol * max(1.0, np.linalg.norm(r)):
            raise ConstructionFailure(f"lowering {k} is not the adjoint of raising {k}")
        if r.shape[0] and np.abs(np.linalg.eigvals(r)).max() > tol * max(1.0, np.linalg.norm(r)):
            raise ConstructionFailure(f"raising operator {k} is not nilpotent")


def sample_group_element(rep, seed):
    """Pseudorandom group element exp(sum_a c_a X_a), c ~ N(0, 1), as a unitary matrix."""
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(len(rep.generators))
    x = np.zeros((rep.dim, rep.dim), dtype=complex)
    for c, g in zip(coeffs, rep.generators):
        x += c * g
    return expm(x)


def highest_weight_vector(rep, tol=1e-10):
    """Unit vector spanning the joint kernel of the raising operators.

    The overall phase is fixed by making the largest-magnitude entry real
    and positive.

    Raises
    ------
    UnsupportedSpec
        The family carries no raising operators (g2, spin7).
    DegenerateKernel
        The joint kernel is not one dimensional.
    """
    if not rep.raising:
        raise UnsupportedSpec(
            f"family {rep.spec.family!r} has no triangular decomposition here")
    stack = np.vstack(rep.raising)
    s, vh = np.linalg.svd(stack)[1:]
    rank = int(np.sum(s > tol * max(1.0, s[0])))
    kdim = rep.dim - rank
    if kdim != 1:
        raise DegenerateKernel(f"joint kernel has dimension {kdim}, expected 1")
    v = vh[rank].conj()
    k = int(np.argmax(np.abs(v)))
    v = v * (np.conj(v[k]) / np.abs(v[k]))
    return v / np.linalg.norm(v)
