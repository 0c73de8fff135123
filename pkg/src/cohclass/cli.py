"""Command line interface.

Subcommands
-----------
analyze SPEC            decomposition facts and detector existence
measure SPEC RHO        nonclassicality of a density matrix file
sample SPEC             emit classical or random states
validate SPEC           run the invariant suite for a family

A single ``--tol`` flag (default 1e-10) feeds every check through fixed
multipliers: structural checks at tol, eigenvalue clustering at 100 x tol,
detector extraction and zero-set thresholds at 10 x tol.  All tolerances
in force are echoed in the report.

Exit codes: 0 success, 2 validation failure, 3 input error, 4 numerically
ambiguous spectrum.  Errors are emitted as JSON objects on stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__, io
from .classicality import (classical_mixtures, f1_pure, f1_roof_exact,
                           f1_roof_upper_bound, hs_random_densities,
                           orbit_classical_states)
from .choi import (jamiolkowski_forward, kraus_from, matrix_element_via_kraus,
                   partial_trace_first)
from .detector import (extract_theta, lifted_complement, theta_expectation,
                       verify_k_invariance)
from .errors import CohclassError, DimensionMismatch
from .repkit import build_representation, highest_weight_vector, sample_group_element
from .symdecomp import (casimir_factors, decompose, is_theta_admissible,
                        symmetric_embedding, symmetric_square_action)


@dataclass
class ClassicalityReport:
    """Everything one analysis produces, serializable as a single JSON document."""

    rep_spec: dict
    dim: int
    casimir: dict
    theta_exists: bool
    theta_matrix: dict | None
    measure: dict | None
    diagnostics: dict

    def as_dict(self):
        return {
            "schema": io.SCHEMA,
            "rep_spec": self.rep_spec,
            "dim": self.dim,
            "casimir": self.casimir,
            "theta_exists": self.theta_exists,
            "theta_matrix": self.theta_matrix,
            "measure": self.measure,
            "diagnostics": self.diagnostics,
        }


class _Pipeline:
    """Build everything an analysis needs once, with consistent tolerances."""

    def __init__(self, spec, tol, seed, invariance_samples=50):
        self.spec = spec
        self.tol = tol
        self.seed = seed
        self.rep = build_representation(spec, tol=tol)
        self.emb = symmetric_embedding(self.rep.dim)
        self.gens = symmetric_square_action(self.rep, self.emb)
        self.factors = casimir_factors(self.rep, self.emb)
        self.dec = decompose(self.factors, self.gens, cluster_tol=100 * tol)
        self.admissible = is_theta_admissible(self.dec, self.gens, tol=10 * tol)
        self.theta = None
        self.invariance_deviation = None
        if self.admissible:
            self.theta = extract_theta(self.dec, self.emb, tol=10 * tol)
            self.invariance_deviation = verify_k_invariance(
                self.theta, self.rep, invariance_samples, seed)

    def report(self, measure=None, extra_diag=None):
        diag = {
            "tol": self.tol,
            "cluster_tol": 100 * self.tol,
            "theta_tol": 10 * self.tol,
            "zero_tol": 10 * self.tol,
            "seed": self.seed,
            "invariance_samples": 50,
            "max_invariance_deviation": self.invariance_deviation,
        }
        if extra_diag:
            diag.update(extra_diag)
        return ClassicalityReport(
            rep_spec=io.spec_to_dict(self.spec),
            dim=self.rep.dim,
            casimir={
                "eigenvalues": [float(e) for e in self.dec.eigenvalues],
                "dims": list(self.dec.dims),
                "top_index": self.dec.top_index,
                "complement_rank": self.dec.complement_rank,
            },
            theta_exists=self.admissible,
            theta_matrix=io.matrix_to_obj(self.theta.T) if self.theta else None,
            measure=measure,
            diagnostics=diag,
        )


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _measure_to_obj(result):
    obj = {"value": result.value, "kind": result.kind}
    if result.mu_spectrum is not None:
        obj["mu_spectrum"] = list(result.mu_spectrum)
    if result.decomposition_found is not None:
        obj["decomposition"] = [
            {"weight": w, "state": io.matrix_to_obj(u)}
            for w, u in result.decomposition_found
        ]
    return obj


def cmd_analyze(args):
    spec = io.load_rep_spec(args.spec)
    pipe = _Pipeline(spec, args.tol, args.seed)
    _emit(io.dumps(pipe.report().as_dict()), args.out)
    return 0


def cmd_measure(args):
    spec = io.load_rep_spec(args.spec)
    rho = io.load_density(args.rho, tol=1e-8)
    pipe = _Pipeline(spec, args.tol, args.seed)
    if rho.shape[0] != pipe.rep.dim:
        raise DimensionMismatch(
            f"state dim {rho.shape[0]}, representation dim {pipe.rep.dim}")
    if pipe.theta is not None:
        result = f1_roof_exact(rho, pipe.theta)
        extra = {}
    else:
        result = f1_roof_upper_bound(rho, pipe.dec, pipe.emb, iters=args.iters,
                                     restarts=args.restarts, seed=args.seed)
        extra = {"iters": args.iters, "restarts": args.restarts}
    report = pipe.report(measure=_measure_to_obj(result), extra_diag=extra)
    _emit(io.dumps(report.as_dict()), args.out)
    return 0


def cmd_sample(args):
    spec = io.load_rep_spec(args.spec)
    rep = build_representation(spec, tol=args.tol)
    if args.kind == "classical-pure":
        states = orbit_classical_states(rep, args.count, args.seed)
    elif args.kind == "classical-mixed":
        states = classical_mixtures(rep, args.count, args.seed)
    else:
        states = hs_random_densities(rep.dim, args.count, args.seed)
    obj = io.states_to_obj(args.kind, rep.dim, args.seed, states)
    _emit(io.dumps(obj), args.out)
    return 0


def _validate_checks(pipe):
    """Yield (name, passed, detail) over the full invariant suite."""
    rep, emb, gens, dec = pipe.rep, pipe.emb, pipe.gens, pipe.dec
    d = emb.dim_out
    rng = np.random.default_rng(pipe.seed)

    total = sum(dec.projectors)
    dev = float(np.linalg.norm(total - np.eye(d)))
    cross = max(
        (float(np.linalg.norm(dec.projectors[i] @ dec.projectors[j]))
         for i in range(len(dec.projectors)) for j in range(i + 1, len(dec.projectors))),
        default=0.0)
    yield ("projector_algebra", dev < 1e-9 and cross < 1e-10,
           f"sum-to-identity {dev:.2e}, max cross product {cross:.2e}")

    inter = max((float(np.linalg.norm(p @ y - y @ p))
                 for p in dec.projectors for y in gens), default=0.0)
    yield ("projector_intertwines", inter < 1e-9, f"max commutator {inter:.2e}")

    if rep.raising:
        v0 = highest_weight_vector(rep)
        t = emb.iso @ np.kron(v0, v0)
        res = float(np.linalg.norm(dec.projectors[dec.top_index] @ t - t))
        rot = max(
            f1_pure(dec, emb, sample_group_element(rep, [pipe.seed, i]) @ v0)
            for i in range(20))
        yield ("coherent_orbit_in_top", res < 1e-10 and rot < 10 * pipe.tol,
               f"residual {res:.2e}, rotated f1 max {rot:.2e}")

    n = rep.dim
    worst_rt = 0.0
    worst_me = 0.0
    for _ in range(10):
        g = rng.standard_normal((n * n, n * n)) + 1j * rng.standard_normal((n * n, n * n))
        a = g @ g.conj().T
        a /= np.linalg.norm(a)
        ks = kraus_from(a)
        rebuilt = jamiolkowski_forward(ks, n).matrix
        worst_rt = max(worst_rt, float(np.linalg.norm(rebuilt - a)))
        vs = [rng.standard_normal(n) + 1j * rng.standard_normal(n) for _ in range(4)]
        lhs = np.kron(vs[0], vs[1]).conj() @ a @ np.kron(vs[2], vs[3])
        rhs = matrix_element_via_kraus(ks, *vs)
        worst_me = max(worst_me, float(abs(lhs - rhs)))
    yield ("kraus_round_trip", worst_rt < 1e-10, f"max reconstruction error {worst_rt:.2e}")
    yield ("matrix_element_identity", worst_me < 1e-9, f"max deviation {worst_me:.2e}")

    if pipe.admissible:
        a0 = lifted_complement(dec, emb)
        marg = partial_trace_first(a0)
        dev = float(np.linalg.norm(marg - np.eye(n) / n))
        yield ("complement_traces_to_identity", dev < 1e-10, f"deviation {dev:.2e}")

        t = pipe.theta.T
        uni = float(np.linalg.norm(t.conj().T @ t - np.eye(n)))
        sym = float(np.linalg.norm(t - t.T))
        yield ("theta_unitary_symmetric", uni < 1e-9 and sym < 1e-9,
               f"unitarity {uni:.2e}, symmetry {sym:.2e}")
        yield ("theta_invariance", pipe.invariance_deviation < 1e-9,
               f"max deviation {pipe.invariance_deviation:.2e}")

        if rep.raising:
            zero = max(
                theta_expectation(pipe.theta,
                                  sample_group_element(rep, [pipe.seed, 100 + i])
                                  @ highest_weight_vector(rep))
                for i in range(20))
            yield ("theta_vanishes_on_classical", zero < 1e-9, f"max expectation {zero:.2e}")


def cmd_validate(args):
    spec = io.load_rep_spec(args.spec)
    pipe = _Pipeline(spec, args.tol, args.seed)
    checks = [{"name": name, "passed": bool(ok), "detail": detail}
              for name, ok, detail in _validate_checks(pipe)]
    passed = all(c["passed"] for c in checks)
    obj = {
        "schema": io.SCHEMA,
        "rep_spec": io.spec_to_dict(spec),
        "passed": passed,
        "checks": checks,
    }
    _emit(io.dumps(obj), args.out)
    return 0 if passed else 2


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cohclass",
        description="Classicality analysis of states under compact group representations")
    parser.add_argument("--version", action="version", version=f"cohclass {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-10,
                       help="base tolerance; documented multipliers derive the rest")
        p.add_argument("--seed", type=int, default=0, help="seed for all sampling")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("analyze", help="decomposition facts and detector existence")
    p.add_argument("spec", help="representation spec JSON file")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("measure", help="nonclassicality of a density matrix")
    p.add_argument("spec", help="representation spec JSON file")
    p.add_argument("rho", help="density matrix JSON file")
    common(p)
    p.add_argument("--iters", type=int, default=200,
                   help="iteration cap per search stage (bound search only)")
    p.add_argument("--restarts", type=int, default=8,
                   help="number of search starts (bound search only)")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sample", help="emit classical or random states")
    p.add_argument("spec", help="representation spec JSON file")
    common(p)
    p.add_argument("--kind", required=True,
                   choices=["classical-pure", "classical-mixed", "random-mixed"])
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("validate", help="run the invariant suite for a family")
    p.add_argument("spec", help="representation spec JSON file")
    common(p)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CohclassError as exc:
        err = {"schema": io.SCHEMA, "error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(io.dumps(err))
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
