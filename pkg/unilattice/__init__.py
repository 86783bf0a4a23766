"""
UniLattice
Finite bounded-lattice toolkit for uninorm constructions and their characterizations
"""

__version__ = "1.0.0"
__author__ = "UniLattice Team"
