"""Polynomial commutator algebras of PBW type: reduction, constraints, Casimirs."""

from .coeffring import ParamPoly, RatFunc, clear_denominators
from .freealg import NCPoly, find_degree_map, word_compare
from .parsing import ParseError, format_algebra, parse_algebra_file, parse_expression
from .relations import RelationSet, ReductionError, bracket, normal_form, validate

__version__ = "0.1.0"
