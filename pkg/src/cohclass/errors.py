"""Exception types shared across the package.

Every error carries an ``exit_code`` so the command line layer can map
failures onto its documented exit statuses without a registry:

* 2 -- construction or internal consistency failure,
* 3 -- bad input (files, specs, states),
* 4 -- numerically ambiguous spectrum, rerun with different tolerances.
"""


class CohclassError(Exception):
    """Base class for all package errors."""

    exit_code = 2


class UnsupportedSpec(CohclassError):
    """Representation request outside the supported families or parameter ranges."""

    exit_code = 3


class ConstructionFailure(CohclassError):
    """A built representation failed its structural self-checks."""

    exit_code = 2


class DegenerateKernel(CohclassError):
    """Joint kernel of the raising operators is not one dimensional."""

    exit_code = 2


class ClusterAmbiguity(CohclassError):
    """Casimir eigenvalue clusters too close to separate at the working tolerance."""

    exit_code = 4


class NotPSD(CohclassError):
    """Matrix expected to be positive semidefinite has a clearly negative eigenvalue."""

    exit_code = 3


class NotAdmissible(CohclassError):
    """Decomposition does not support an antiunitary detector."""

    exit_code = 2


class RescaleFailure(CohclassError):
    """Candidate detector could not be rescaled to a unitary."""

    exit_code = 2


class InvalidState(CohclassError):
    """State vector or density matrix violates its defining constraints."""

    exit_code = 3


class DimensionMismatch(CohclassError):
    """Operands with incompatible dimensions."""

    exit_code = 3


class ParseError(CohclassError):
    """Malformed input file."""

    exit_code = 3
