"""Finite d-Boolean algebras, d-frames and their bitopological duality.

Layers, bottom up: ``lattice`` (posets, bounded distributive lattices,
prime ideals — the classical oracle layer), ``dlattice`` (d-lattices,
d-complements, d-Boolean algebras), ``ideals`` (d-ideals and the ideal
frame), ``bitop`` (finite bitopological spaces), ``duality`` (spectra,
round trips, counterexample search), ``cli`` (command-line surface).

Everything is exact and exhaustive at desk scale: structures are capped at
64 elements per coordinate, subsets are bitmasks, and all predicates are
full scans.
"""

from .dlattice import DBooleanAlgebra, DLattice, bool_dlattice, lambda_of_dislat, omega_of_lattice
from .lattice import FiniteLattice, FinitePoset, birkhoff, build_lattice

__all__ = [
    "DBooleanAlgebra",
    "DLattice",
    "FiniteLattice",
    "FinitePoset",
    "birkhoff",
    "bool_dlattice",
    "build_lattice",
    "lambda_of_dislat",
    "omega_of_lattice",
]
