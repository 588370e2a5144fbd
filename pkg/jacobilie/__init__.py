"""
JacobiLie - Jacobi structures on real low-dimensional Lie groups.

Symbolic verification of algebra-level Jacobi structures, their lift to the
group through left-invariant frames, and the Jacobi-Lie Hamiltonian systems
built on top of them.
"""

__version__ = "1.0.0"
