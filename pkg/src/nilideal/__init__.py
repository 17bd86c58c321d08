"""Exact combinatorics of ad-nilpotent and abelian ideals of Borel subalgebras.

Everything is reduced to positive-root combinatorics over exact integers:
root posets, their dual order ideals and antichains, labelled staircase
diagrams, and nonnegative lattice paths, together with the closed-form
counting formulas that every enumeration is cross-checked against.
"""

from .rootsystem import RootSystem, build, cartan_matrix, validate_type_rank

__version__ = "0.1.0"

__all__ = [
    "RootSystem",
    "build",
    "cartan_matrix",
    "validate_type_rank",
    "__version__",
]
