"""
Command-line surface: lattice files, rendering and the argument parser.
"""

from .lattice_file import (
    LatticeFile,
    lattice_from_file,
    load_fixture,
    load_lattice,
    parse_lattice_file,
    read_lattice_file,
    serialize_lattice,
)
from .render import cayley_frame, export_dot, hasse_graph, render_cayley_table

__all__ = [
    "LatticeFile",
    "lattice_from_file",
    "load_fixture",
    "load_lattice",
    "parse_lattice_file",
    "read_lattice_file",
    "serialize_lattice",
    "cayley_frame",
    "export_dot",
    "hasse_graph",
    "render_cayley_table",
]
