"""
Lie algebra layer: the catalog, structure checks, the adjoint
representation and automorphism families.
"""

from jacobilie.liealg.automorphisms import (
    automorphism_defects,
    automorphism_family,
    branch_admits,
    is_automorphism,
    matrix_identities_check,
    random_instance,
)
from jacobilie.liealg.catalog import catalog, get_algebra
from jacobilie.liealg.structure import (
    AdjointRepresentation,
    adjoint,
    check_structure,
    frame_constants,
)

__all__ = [
    "automorphism_defects",
    "automorphism_family",
    "branch_admits",
    "is_automorphism",
    "matrix_identities_check",
    "random_instance",
    "catalog",
    "get_algebra",
    "AdjointRepresentation",
    "adjoint",
    "check_structure",
    "frame_constants",
]
