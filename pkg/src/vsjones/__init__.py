"""Kauffman-Jones bracket and its enhanced, parity-refined version for virtual singular links."""
from .diagram import (Crossing, CrossingKind, Diagram, DiagramError, counts, disjoint_union,
                      link_components, parse, serialize, validate)
from .evaluator import (InvariantResult, bracket, check_singular_identity, invariants, r_poly,
                        split, state_table)
from .fixtures import BUILTIN, fixture, random_diagram
from .laurent import HLaurent, LaurentPoly
from .skein import bracket_skein

__version__ = "0.1.0"
