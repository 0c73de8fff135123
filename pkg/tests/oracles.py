"""Independent reference implementations used only to check the package.

Nothing here imports from cohclass; expected values in the tests come from
these routines or from hand computations frozen as literals.
"""

import numpy as np

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def wootters_concurrence(rho):
    """Two-qubit concurrence from the spin-flipped spectrum."""
    flip = np.kron(_SIGMA_Y, _SIGMA_Y)
    tilde = flip @ rho.conj() @ flip
    evals = np.linalg.eigvals(rho @ tilde)
    lam = np.sort(np.sqrt(np.clip(evals.real, 0.0, None)))[::-1]
    return max(0.0, float(lam[0] - lam[1:].sum()))


def su2_symmetric_square_dims(two_s):
    """Component dimensions of the symmetric square of the spin-s module.

    Derived purely by weight counting: the multiplicity of doubled total
    weight M over unordered weight pairs, differenced to give irreducible
    multiplicities.  Returns dims sorted descending.
    """
    weights = [two_s - 2 * i for i in range(two_s + 1)]
    counts = {}
    for i in range(len(weights)):
        for j in range(i, len(weights)):
            m = weights[i] + weights[j]
            counts[m] = counts.get(m, 0) + 1
    dims = []
    top = 2 * two_s
    for j in range(top, -1, -2):
        mult = counts.get(j, 0) - counts.get(j + 2, 0)
        dims.extend([j + 1] * mult)
    return sorted(dims, reverse=True)


def symmetrizer(n):
    """(I + SWAP)/2 on C^n (x) C^n, built from the swap directly."""
    swap = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            swap[i * n + j, j * n + i] = 1.0
    return (np.eye(n * n) + swap) / 2.0


def haar_state(rng, n):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def random_density(rng, n, rank=None):
    k = rank or n
    g = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
