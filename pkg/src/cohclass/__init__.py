"""Classicality detection for states carrying compact group representations.

The pipeline: build a concrete unitary representation (repkit), decompose
the Casimir on its symmetric square (symdecomp), pull the trivial
complement back through the operator-map correspondence (choi) into an
antiunitary detector when one exists (detector), and evaluate pure-state
and convex-roof nonclassicality measures (classicality).  A command line
(cli) and an estimator facade (estimator) sit on top.
"""

__version__ = "0.1.0"

from .errors import (ClusterAmbiguity, CohclassError, ConstructionFailure,
                     DegenerateKernel, DimensionMismatch, InvalidState,
                     NotAdmissible, NotPSD, ParseError, RescaleFailure,
                     UnsupportedSpec)
from .repkit import (RepSpec, Representation, build_representation,
                     highest_weight_vector, sample_group_element)
from .symdecomp import (SymDecomposition, SymmetricEmbedding, casimir_factors,
                        casimir_on_symmetric_square, decompose,
                        is_theta_admissible, symmetric_embedding,
                        symmetric_square_action)
from .choi import (KrausSet, PositiveOperator, inverse_jamiolkowski_apply,
                   is_proportional_trace_preserving, jamiolkowski_forward,
                   kraus_from, matrix_element_via_kraus,
                   maximally_entangled_vector, partial_trace_first)
from .detector import (AntiunitaryDetector, extract_theta, lifted_complement,
                       theta_expectation, verify_k_invariance)
from .classicality import (DensityMatrix, MeasureResult, as_density_matrix,
                           classical_mixtures, complement_forms, f1_pure,
                           f1_roof_exact, f1_roof_upper_bound,
                           hs_random_densities, is_pure_classical,
                           isotropic_classical_states, orbit_classical_states,
                           pure_measure)
from .validation import check_density_matrix, check_state_batch, check_unit_vector
from .estimator import ClassicalityAnalyzer

__all__ = [
    "AntiunitaryDetector", "ClassicalityAnalyzer", "ClusterAmbiguity",
    "CohclassError", "ConstructionFailure", "DegenerateKernel", "DensityMatrix",
    "DimensionMismatch", "InvalidState", "KrausSet", "MeasureResult",
    "NotAdmissible", "NotPSD", "ParseError", "PositiveOperator", "RepSpec",
    "Representation", "RescaleFailure", "SymDecomposition", "SymmetricEmbedding",
    "UnsupportedSpec", "as_density_matrix", "build_representation",
    "casimir_factors", "casimir_on_symmetric_square", "check_density_matrix",
    "check_state_batch", "check_unit_vector", "classical_mixtures",
    "complement_forms", "decompose", "extract_theta", "f1_pure", "f1_roof_exact",
    "f1_roof_upper_bound", "highest_weight_vector", "hs_random_densities",
    "inverse_jamiolkowski_apply", "is_proportional_trace_preserving",
    "is_pure_classical", "is_theta_admissible", "isotropic_classical_states",
    "jamiolkowski_forward", "kraus_from", "lifted_complement",
    "matrix_element_via_kraus",
    "maximally_entangled_vector", "orbit_classical_states",
    "partial_trace_first", "pure_measure", "sample_group_element",
    "symmetric_embedding", "symmetric_square_action", "theta_expectation",
    "verify_k_invariance",
]
