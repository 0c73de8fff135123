import numpy as np
import pytest

from cohclass import (DimensionMismatch, KrausSet, NotPSD, PositiveOperator,
                      inverse_jamiolkowski_apply, is_proportional_trace_preserving,
                      jamiolkowski_forward, kraus_from, matrix_element_via_kraus,
                      maximally_entangled_vector, partial_trace_first)

from oracles import haar_state, random_density, symmetrizer


def _random_psd(rng, side, rank):
    g = rng.standard_normal((side, rank)) + 1j * rng.standard_normal((side, rank))
    return g @ g.conj().T


def test_entangled_vector_norm():
    phi = maximally_entangled_vector(3)
    assert abs(np.vdot(phi, phi) - 3.0) < 1e-14
    assert np.allclose(phi.reshape(3, 3), np.eye(3))


def test_identity_channel_forward():
    n = 3
    a = jamiolkowski_forward(KrausSet((np.eye(n, dtype=complex),), (1.0,)), n)
    phi = maximally_entangled_vector(n)
    assert np.linalg.norm(a.matrix - np.outer(phi, phi.conj())) < 1e-14


def test_identity_channel_round_trip():
    n = 3
    phi = maximally_entangled_vector(n)
    ks = kraus_from(PositiveOperator(np.outer(phi, phi.conj())))
    assert len(ks.operators) == 1
    assert abs(ks.weights[0] - n) < 1e-12
    assert np.linalg.norm(ks.operators[0] - np.eye(n)) < 1e-10


@pytest.mark.parametrize("n,rank", [(2, 1), (2, 4), (3, 2), (4, 5)])
def test_operator_round_trip(n, rank):
    rng = np.random.default_rng(100 * n + rank)
    a = _random_psd(rng, n * n, rank)
    ks = kraus_from(a)
    assert len(ks.operators) == rank
    back = jamiolkowski_forward(ks, n)
    assert np.linalg.norm(back.matrix - a) < 1e-10 * max(1.0, np.linalg.norm(a))


def test_spectral_operators_are_orthogonal():
    rng = np.random.default_rng(5)
    ks = kraus_from(_random_psd(rng, 9, 4))
    for i, t in enumerate(ks.operators):
        for j, u in enumerate(ks.operators):
            inner = np.trace(t.conj().T @ u)
            want = ks.weights[i] if i == j else 0.0
            assert abs(inner - want) < 1e-10


def test_kraus_phase_is_deterministic():
    rng = np.random.default_rng(6)
    a = _random_psd(rng, 9, 3)
    first = kraus_from(a)
    second = kraus_from(a.copy())
    for t, u in zip(first.operators, second.operators):
        assert np.array_equal(t, u)
        pivot = t.ravel()[np.argmax(np.abs(t))]
        assert abs(pivot.imag) < 1e-12 and pivot.real > 0


def test_not_psd_raises():
    bad = np.diag([1.0, 1.0, 1.0, -0.5])
    with pytest.raises(NotPSD):
        kraus_from(bad)


def test_shape_checks():
    with pytest.raises(DimensionMismatch):
        kraus_from(np.eye(5))  # 5 is not a perfect square
    with pytest.raises(DimensionMismatch):
        inverse_jamiolkowski_apply(np.eye(9), np.eye(2))
    with pytest.raises(DimensionMismatch):
        jamiolkowski_forward(KrausSet((np.eye(3, dtype=complex),), (1.0,)), 2)


def test_flat_operator_gives_trace_channel():
    # A = identity on V(x)V corresponds to rho -> tr(rho) I
    n = 3
    rng = np.random.default_rng(7)
    rho = random_density(rng, n)
    out = inverse_jamiolkowski_apply(np.eye(n * n), rho)
    assert np.linalg.norm(out - np.eye(n)) < 1e-12
    ks = kraus_from(np.eye(n * n))
    summed = sum(t @ rho @ t.conj().T for t in ks.operators)
    assert np.linalg.norm(summed - np.eye(n)) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kraus_action_matches_operator_action(n):
    rng = np.random.default_rng(40 + n)
    a = _random_psd(rng, n * n, n + 1)
    ks = kraus_from(a)
    for _ in range(5):
        rho = random_density(rng, n)
        via_kraus = sum(t @ rho @ t.conj().T for t in ks.operators)
        direct = inverse_jamiolkowski_apply(a, rho)
        assert np.linalg.norm(via_kraus - direct) < 1e-9


def test_normalization_marginal():
    # sum_a T_a T_a^dag equals the first-factor marginal of A
    rng = np.random.default_rng(9)
    a = _random_psd(rng, 16, 6)
    ks = kraus_from(a)
    summed = sum(t @ t.conj().T for t in ks.operators)
    assert np.linalg.norm(summed - partial_trace_first(a)) < 1e-10


def test_proportional_trace_preserving():
    n = 3
    phi = maximally_entangled_vector(n)
    ok, c = is_proportional_trace_preserving(np.outer(phi, phi.conj()))
    assert ok and abs(c - 1.0) < 1e-12
    rng = np.random.default_rng(10)
    ok, c = is_proportional_trace_preserving(_random_psd(rng, 9, 2))
    assert not ok and c is None


def test_symmetric_support_gives_symmetric_kraus():
    n = 4
    rng = np.random.default_rng(11)
    s = symmetrizer(n)
    a = s @ _random_psd(rng, n * n, 5) @ s
    ks = kraus_from(a)
    for t in ks.operators:
        assert np.linalg.norm(t - t.T) < 1e-9


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matrix_element_identity_general(n):
    # holds for arbitrary PSD A thanks to the transpose in the first slot
    rng = np.random.default_rng(60 + n)
    a = _random_psd(rng, n * n, n)
    ks = kraus_from(a)
    for _ in range(10):
        v1, v2, v3, v4 = (haar_state(rng, n) for _ in range(4))
        direct = np.conj(np.kron(v1, v2)) @ a @ np.kron(v3, v4)
        assert abs(matrix_element_via_kraus(ks, v1, v2, v3, v4) - direct) < 1e-9


def test_matrix_element_transpose_free_on_symmetric_support():
    # with symmetric T the first-slot transpose can be dropped
    n = 3
    rng = np.random.default_rng(12)
    s = symmetrizer(n)
    a = s @ _random_psd(rng, n * n, 4) @ s
    ks = kraus_from(a)
    v1, v2, v3, v4 = (haar_state(rng, n) for _ in range(4))
    direct = np.conj(np.kron(v1, v2)) @ a @ np.kron(v3, v4)
    plain = sum((v1.conj() @ t @ v2.conj()) * (v3 @ t.conj().T @ v4)
                for t in ks.operators)
    assert abs(plain - direct) < 1e-9


def test_basis_tag_carried_through():
    rng = np.random.default_rng(13)
    a = PositiveOperator(_random_psd(rng, 4, 2), basis_tag="rotated")
    ks = kraus_from(a)
    assert ks.basis_tag == "rotated"
    assert jamiolkowski_forward(ks, 2).basis_tag == "rotated"
