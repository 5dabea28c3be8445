"""obk: ribbon surfaces, their sums, open books and Seifert data, all in exact arithmetic."""

__version__ = "0.1.0"

from .errors import ObkError
from .surface import RibbonSurface, build_surface, parse_surface, primitive_s_surface
from .patching import SumSpec, abstract_sum, make_patch
from .mapclass import MappingClass, dehn_twist, compose, homology_basis
from .openbook import AbstractOpenBook, open_book_sum, primitive_open_book
from .embedded import LeftFirst, RightFirst, alexander, embedded_sum, seifert_matrix_bennequin
from .braid import BraidWord, parse_braid, stallings_open_book
from .plumbgraph import PlumbingGraph, e8_graph, lattice_report, milnor_graph

__all__ = [
    "ObkError",
    "RibbonSurface",
    "build_surface",
    "parse_surface",
    "primitive_s_surface",
    "SumSpec",
    "abstract_sum",
    "make_patch",
    "MappingClass",
    "dehn_twist",
    "compose",
    "homology_basis",
    "AbstractOpenBook",
    "open_book_sum",
    "primitive_open_book",
    "LeftFirst",
    "RightFirst",
    "alexander",
    "embedded_sum",
    "seifert_matrix_bennequin",
    "BraidWord",
    "parse_braid",
    "stallings_open_book",
    "PlumbingGraph",
    "e8_graph",
    "lattice_report",
    "milnor_graph",
]
