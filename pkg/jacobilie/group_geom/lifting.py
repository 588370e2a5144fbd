"""Lifting algebra-level structures to left-invariant structures on the group."""

from jacobilie.errors import DimensionMismatch
from jacobilie.models import GroupJacobiStructure, JacobiPair
from jacobilie.models.geometry import Vielbein


def lift_to_group(structure: JacobiPair, vielbein: Vielbein) -> GroupJacobiStructure:
    """
    Contract the structure with the frame:

        Λ^{mu nu} = e_a^mu e_b^nu Λ^{ab},   E^mu = e_a^mu E^a

    Raises:
        DimensionMismatch: If the dimensions differ
    """
    if structure.dim != vielbein.dim:
        raise DimensionMismatch(
            f"{structure.dim}-dimensional structure on {vielbein.dim}-dimensional group {vielbein.group}"
        )
    frame = vielbein.inv_e
    lam = frame * structure.lam * frame.T
    reeb = frame * structure.reeb_column()
    return GroupJacobiStructure(lam=lam, reeb=tuple(reeb), group=vielbein.group)
