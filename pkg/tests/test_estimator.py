import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from cohclass import (ClassicalityAnalyzer, DimensionMismatch, InvalidState,
                      RepSpec, orbit_classical_states)

from conftest import FAMILY_SPECS, build_pipeline
from oracles import haar_state, random_density


def fitted(name="spin1", **kw):
    return ClassicalityAnalyzer(FAMILY_SPECS[name], **kw).fit()


def test_params_round_trip():
    est = ClassicalityAnalyzer({"family": "su2", "two_s": 2}, tol=1e-9, seed=3)
    params = est.get_params()
    assert params["tol"] == 1e-9 and params["seed"] == 3
    est2 = clone(est)
    assert est2.get_params() == params


def test_unfitted_raises():
    est = ClassicalityAnalyzer(FAMILY_SPECS["spin1"])
    with pytest.raises(NotFittedError):
        est.transform(np.eye(3))
    with pytest.raises(NotFittedError):
        est.measure(np.eye(3) / 3.0)


def test_fit_exposes_pipeline_facts():
    est = fitted("two_qubits")
    ctx = build_pipeline("two_qubits")
    assert est.dim_ == 4
    assert est.component_dims_ == ctx.dec.dims
    assert est.complement_rank_ == 1
    assert est.theta_exists_
    assert np.array_equal(est.theta_.T, ctx.theta.T)
    assert est.invariance_deviation_ < 1e-9
    assert est.casimir_eigenvalues_ == ctx.dec.eigenvalues


def test_fit_accepts_spec_objects_and_dicts():
    a = ClassicalityAnalyzer(RepSpec("su2", two_s=2)).fit()
    b = ClassicalityAnalyzer({"family": "su2", "two_s": 2}).fit()
    assert a.dim_ == b.dim_ == 3


def test_inadmissible_family_has_no_detector():
    est = fitted("spin32")
    assert not est.theta_exists_
    assert est.theta_ is None
    assert est.invariance_deviation_ is None


def test_transform_values():
    est = fitted("spin1")
    plus = np.array([1.0, 0.0, 1.0]) / np.sqrt(2)
    out = est.transform(np.stack([np.eye(3)[0], plus]))
    assert out.shape == (2, 1)
    assert out[0, 0] < 1e-12
    assert abs(out[1, 0] - 1.0 / np.sqrt(3)) < 1e-12


def test_transform_validates_input():
    est = fitted("spin1")
    with pytest.raises(DimensionMismatch):
        est.transform(np.eye(4))
    with pytest.raises(InvalidState):
        est.transform(2.0 * np.eye(3))


def test_predict_separates_classes():
    est = fitted("two_qubits")
    classical = np.stack(orbit_classical_states(est.rep_, 5, seed=31))
    rng = np.random.default_rng(32)
    generic = np.stack([haar_state(rng, 4) for _ in range(5)])
    assert est.predict(classical).all()
    assert not est.predict(generic).any()


def test_predict_threshold_override():
    est = fitted("spin1", classical_tol=2.0)
    assert est.predict(np.eye(3)).all()  # everything below a huge threshold


def test_fit_transform_shape():
    est = ClassicalityAnalyzer(FAMILY_SPECS["spin1"])
    out = est.fit_transform(np.eye(3))
    assert out.shape == (3, 1)


def test_measure_kinds():
    est = fitted("spin1")
    vec = est.measure(np.eye(3)[1])
    assert vec.kind == "pure_value"
    assert abs(vec.value - 1.0 / np.sqrt(3)) < 1e-12
    dm = est.measure(np.eye(3) / 3.0)
    assert dm.kind == "exact_roof"
    assert dm.value < 1e-10


def test_measure_search_route_when_no_detector():
    est = fitted("spin32")
    res = est.measure(np.eye(4) / 4.0, iters=120, restarts=3)
    assert res.kind == "upper_bound"
    assert res.value < 1e-6


def test_measure_seed_defaults_to_estimator_seed():
    rng = np.random.default_rng(33)
    rho = random_density(rng, 4)
    est = fitted("spin32", seed=9)
    a = est.measure(rho, iters=60, restarts=2)
    b = est.measure(rho, iters=60, restarts=2, seed=9)
    assert a.value == b.value
