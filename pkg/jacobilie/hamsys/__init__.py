"""
Hamiltonian vector fields, Jacobi brackets, Vessiot-Guldberg closure and
the catalogued Jacobi-Lie Hamiltonian systems.
"""

from jacobilie.hamsys.closure import LieSystemReport, closure_check, match_algebra
from jacobilie.hamsys.examples import (
    check_example_manifold,
    find_hamiltonian,
    lie_system_of,
    verify_example,
)
from jacobilie.hamsys.fields import (
    commutator,
    hamiltonian_of,
    hamiltonian_vf,
    jacobi_bracket,
    jacobi_identity_check,
    reeb_derivative,
)

__all__ = [
    "LieSystemReport",
    "closure_check",
    "match_algebra",
    "check_example_manifold",
    "find_hamiltonian",
    "lie_system_of",
    "verify_example",
    "commutator",
    "hamiltonian_of",
    "hamiltonian_vf",
    "jacobi_bracket",
    "jacobi_identity_check",
    "reeb_derivative",
]
