"""Regular languages over group alphabets: free reduction, positive-cone checks
for free groups, and geodesics in graph products."""

from .automata import Automaton, InputError, word
from .freegroup import GroupAlphabet, GroupElement, ReducedLang, benois_reduce, free_reduce
from .conecheck import ConeVerdict, RefuteConfig, Violation, check_cone_axioms, pumping_witness
from .graphprod import GraphPresentation, geo_automaton, is_geodesic, raag_presentation

__version__ = "0.1.0"

__all__ = [
    "Automaton", "InputError", "word",
    "GroupAlphabet", "GroupElement", "ReducedLang", "benois_reduce", "free_reduce",
    "ConeVerdict", "RefuteConfig", "Violation", "check_cone_axioms", "pumping_witness",
    "GraphPresentation", "geo_automaton", "is_geodesic", "raag_presentation",
]
