"""JSON file formats: representation specs, density matrices, state sets, reports.

Every file carries a top-level ``"schema": 1``.  Matrices and vectors are
stored as row-major ``re``/``im`` float arrays, so files are diffable and
language neutral.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ParseError
from .repkit import RepSpec
from .validation import check_density_matrix

SCHEMA = 1


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def _require_schema(data, path):
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise ParseError(f"{path}: missing or unsupported 'schema' (want {SCHEMA})")


def _opt_int(data, key):
    val = data.get(key)
    if val is None:
        return None
    if isinstance(val, bool) or not isinstance(val, int):
        raise ParseError(f"field {key!r} must be an integer, got {val!r}")
    return val


def spec_from_dict(data):
    """RepSpec from a plain dict; nested 'factors' parse recursively."""
    if not isinstance(data, dict):
        raise ParseError(f"spec entry must be an object, got {type(data).__name__}")
    family = data.get("family")
    if not isinstance(family, str):
        raise ParseError("spec needs a string 'family' field")
    raw = data.get("factors")
    factors = ()
    if raw is not None:
        if not isinstance(raw, list):
            raise ParseError("'factors' must be a list")
        factors = tuple(spec_from_dict(f) for f in raw)
    return RepSpec(family, two_s=_opt_int(data, "two_s"), n=_opt_int(data, "n"),
                   factors=factors)


def spec_to_dict(spec):
    """Inverse of spec_from_dict, omitting unused parameter slots."""
    out = {"family": spec.family}
    if spec.two_s is not None:
        out["two_s"] = spec.two_s
    if spec.n is not None:
        out["n"] = spec.n
    if spec.factors:
        out["factors"] = [spec_to_dict(f) for f in spec.factors]
    return out


def load_rep_spec(path):
    data = _load_json(path)
    _require_schema(data, path)
    return spec_from_dict(data)


def matrix_to_obj(mat):
    arr = np.asarray(mat)
    return {"re": arr.real.tolist(), "im": arr.imag.tolist()}


def obj_to_array(obj, where, ndim):
    if not isinstance(obj, dict) or "re" not in obj or "im" not in obj:
        raise ParseError(f"{where}: expected an object with 're' and 'im'")
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: non-numeric array data") from exc
    if re.shape != im.shape or re.ndim != ndim:
        raise ParseError(f"{where}: shapes re{re.shape} / im{im.shape} invalid")
    return re + 1j * im


def load_density(path, tol=1e-8):
    """Load and validate a density matrix file; returns the (dim, dim) array."""
    data = _load_json(path)
    _require_schema(data, path)
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"{path}: 'dim' must be a positive integer")
    arr = obj_to_array(data, path, ndim=2)
    if arr.shape != (dim, dim):
        raise ParseError(f"{path}: matrix shape {arr.shape} does not match dim {dim}")
    return check_density_matrix(arr, tol=tol)


def density_to_obj(rho):
    arr = np.asarray(rho)
    return {"schema": SCHEMA, "dim": arr.shape[0], **matrix_to_obj(arr)}


def states_to_obj(kind, dim, seed, states):
    """State collection document; states may be vectors or density matrices."""
    return {
        "schema": SCHEMA,
        "kind": kind,
        "dim": dim,
        "seed": seed,
        "count": len(states),
        "states": [matrix_to_obj(s) for s in states],
    }


def load_states(path):
    """Load a state collection; returns (kind, list of arrays)."""
    data = _load_json(path)
    _require_schema(data, path)
    kind = data.get("kind")
    dim = data.get("dim")
    raw = data.get("states")
    if not isinstance(raw, list):
        raise ParseError(f"{path}: 'states' must be a list")
    ndim = 1 if kind == "classical-pure" else 2
    states = [obj_to_array(s, f"{path}[{i}]", ndim) for i, s in enumerate(raw)]
    for i, s in enumerate(states):
        if s.shape[0] != dim:
            raise ParseError(f"{path}[{i}]: dimension {s.shape[0]}, header says {dim}")
    return kind, states


def dumps(obj):
    """Canonical serialization: sorted keys, indented, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
