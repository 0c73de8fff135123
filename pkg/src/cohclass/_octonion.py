"""Octonion multiplication and the matrix algebras derived from it.

Basis is 1 = e0 and imaginary units e1..e7.  The product is fixed by the
Fano-plane triples below: for each cyclic triple (a, b, c),

    ea eb = ec,   eb ec = ea,   ec ea = eb,

units anticommute off the triples, and ei^2 = -1.  Everything else in this
module (left/right multiplication matrices, Clifford gammas, the derivation
algebra) is generated from that single table, so the conventions cannot
drift apart.
"""

from functools import cache
from itertools import combinations

import numpy as np

# Index triples (a, b, c) with ea eb = ec, closed under cyclic rotation.
FANO_TRIPLES = (
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 7),
    (5, 6, 1),
    (6, 7, 2),
    (7, 1, 3),
)


@cache
def multiplication_table():
    """Structure tensor M with ei ej = sum_k M[i, j, k] ek, shape (8, 8, 8)."""
    m = np.zeros((8, 8, 8))
    for j in range(8):
        m[0, j, j] = 1.0
        m[j, 0, j] = 1.0
    for i in range(1, 8):
        m[i, i, 0] = -1.0
    for triple in FANO_TRIPLES:
        for r in range(3):
            a, b, c = triple[r], triple[(r + 1) % 3], triple[(r + 2) % 3]
            m[a, b, c] = 1.0
            m[b, a, c] = -1.0
    return m


def octonion_multiply(a, b):
    """Product of two octonions given as coefficient 8-vectors."""
    return np.einsum("ijk,i,j->k", multiplication_table(), a, b)


@cache
def left_mult_matrices():
    """L[i] with (L[i] b) = ei * b as 8-vectors; tuple of real (8, 8) arrays."""
    m = multiplication_table()
    # (L_i)_{kj} = coefficient of ek in ei ej
    return tuple(m[i].T.copy() for i in range(8))


@cache
def right_mult_matrices():
    """R[i] with (R[i] a) = a * ei; tuple of real (8, 8) arrays."""
    m = multiplication_table()
    return tuple(m[:, i, :].T.copy() for i in range(8))


def clifford_gammas():
    """Left multiplications by e1..e7, satisfying Gi Gj + Gj Gi = -2 delta_ij."""
    return left_mult_matrices()[1:]


def spin7_generators():
    """The 21 real antisymmetric operators Gi Gj / 2, i < j, acting on all of O."""
    gammas = clifford_gammas()
    return tuple(
        0.5 * gammas[i] @ gammas[j] for i, j in combinations(range(7), 2)
    )


def three_form():
    """Associative 3-form phi[i, j, k] = <ei, ej ek> on imaginary indices, shape (7, 7, 7)."""
    m = multiplication_table()
    return m[1:, 1:, 1:].transpose(2, 0, 1).copy()


@cache
def g2_generators():
    """A basis of the derivation algebra restricted to the imaginary octonions.

    Candidate derivations are D_{x,y} = [Lx, Ly] + [Lx, Ry] + [Rx, Ry] for
    basis pairs x = ei, y = ej with i < j.  The 21 candidates span a
    14-dimensional space; the first 14 that are linearly independent in lex
    order of (i, j) are kept.

    Returns
    -------
    tuple of ndarray
        14 real antisymmetric (7, 7) matrices.
    """
    left = left_mult_matrices()
    right = right_mult_matrices()
    picked = []
    flat = []
    for i, j in combinations(range(1, 8), 2):
        lx, ly = left[i], left[j]
        rx, ry = right[i], right[j]
        d = (lx @ ly - ly @ lx) + (lx @ ry - ry @ lx) + (rx @ ry - ry @ rx)
        # derivations kill the identity and preserve Im O
        d = d[1:, 1:]
        trial = np.vstack(flat + [d.ravel()])
        if np.linalg.matrix_rank(trial, tol=1e-8) == len(flat) + 1:
            picked.append(d.copy())
            flat.append(d.ravel())
        if len(picked) == 14:
            break
    return tuple(picked)
