"""Monochromatic vertex-disconnection colorings: exact solver, block composition, catalog and scans."""

from .blocks import Block, BlockDecomposition, block_cut_order, decompose
from .catalog import CatalogEntry, CatalogStore, find_isomorphic, find_isomorphism, load_store
from .coloring import Coloring, format_coloring, parse_coloring
from .compose import mvd_bounds, mvd_compose, solve
from .errors import CapacityError, DomainError, FormatError, InputError, IntegrityError, MvdError
from .families import UNDEFINED, FamilySpec, block_bound, emax, f_v, generate, mvd_formula
from .graph import Graph, from_adjacency_matrix, from_edge_list, kappa_plus, load_graph
from .scan import scan_extremal, scan_property
from .solver import has_monochromatic_cut, is_mvd_coloring, mvd_exact

__all__ = [
    "Block", "BlockDecomposition", "CapacityError", "CatalogEntry", "CatalogStore", "Coloring",
    "DomainError", "FamilySpec", "FormatError", "Graph", "InputError", "IntegrityError", "MvdError",
    "UNDEFINED", "block_bound", "block_cut_order", "decompose", "emax", "f_v", "find_isomorphic",
    "find_isomorphism", "format_coloring", "from_adjacency_matrix", "from_edge_list", "generate",
    "has_monochromatic_cut", "is_mvd_coloring", "kappa_plus", "load_graph", "load_store",
    "mvd_bounds", "mvd_compose", "mvd_exact", "mvd_formula", "parse_coloring", "scan_extremal",
    "scan_property", "solve",
]
