from types import SimpleNamespace

import pytest

from cohclass import (RepSpec, build_representation, casimir_factors, decompose,
                      extract_theta, is_theta_admissible, isotropic_classical_states,
                      orbit_classical_states, symmetric_embedding,
                      symmetric_square_action)

FAMILY_SPECS = {
    "trivial": RepSpec("su2", two_s=0),
    "spin_half": RepSpec("su2", two_s=1),
    "spin1": RepSpec("su2", two_s=2),
    "spin32": RepSpec("su2", two_s=3),
    "spin2": RepSpec("su2", two_s=4),
    "su3_fund": RepSpec("suN_fundamental", n=3),
    "su4_asym": RepSpec("suN_antisym_square", n=4),
    "two_qubits": RepSpec("product", factors=(RepSpec("su2", two_s=1),
                                              RepSpec("su2", two_s=1))),
    "qubit_qutrit": RepSpec("product", factors=(RepSpec("su2", two_s=1),
                                                RepSpec("su2", two_s=2))),
    "spin1_pair": RepSpec("product", factors=(RepSpec("su2", two_s=2),
                                              RepSpec("su2", two_s=2))),
    "g2": RepSpec("g2_fundamental"),
    "spin7": RepSpec("spin7_spinor"),
}

# families whose symmetric square is top plus a single trivial line
ADMISSIBLE = ("spin1", "two_qubits", "su4_asym", "g2", "spin7")

_CACHE = {}


def build_pipeline(name):
    """Build (and cache for the session) everything tests need for one family."""
    if name not in _CACHE:
        spec = FAMILY_SPECS[name]
        rep = build_representation(spec)
        emb = symmetric_embedding(rep.dim)
        gens = symmetric_square_action(rep, emb)
        dec = decompose(casimir_factors(rep, emb), gens)
        admissible = is_theta_admissible(dec, gens)
        theta = extract_theta(dec, emb) if admissible else None
        _CACHE[name] = SimpleNamespace(name=name, spec=spec, rep=rep, emb=emb,
                                       gens=gens, dec=dec, admissible=admissible,
                                       theta=theta)
    return _CACHE[name]


@pytest.fixture(scope="session")
def built():
    return build_pipeline


def classical_states(ctx, count, seed):
    """Classical pure states for any family: orbit samples, or isotropic
    vectors for the real-basis families without a highest weight vector."""
    if ctx.rep.raising:
        return orbit_classical_states(ctx.rep, count, seed)
    return isotropic_classical_states(ctx.rep.dim, count, seed)


_ACCEPTANCE_LINES = []


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
