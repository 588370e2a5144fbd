"""
Group-level geometry: vielbeins, lifting, Schouten-Nijenhuis brackets and
the Jacobi manifold predicates.
"""

from jacobilie.group_geom.lifting import lift_to_group
from jacobilie.group_geom.manifold import coordinate_jacobi_residuals, is_jacobi_manifold
from jacobilie.group_geom.multivector import schouten_el, schouten_ll, wedge
from jacobilie.group_geom.vielbein import maurer_cartan_check, maurer_cartan_constants, vielbein_catalog

__all__ = [
    "lift_to_group",
    "coordinate_jacobi_residuals",
    "is_jacobi_manifold",
    "schouten_el",
    "schouten_ll",
    "wedge",
    "maurer_cartan_check",
    "maurer_cartan_constants",
    "vielbein_catalog",
]
