"""Irreducible components of representation varieties of truncated path algebras."""

from .components import (
    Component,
    HypothesisViolated,
    classify,
    generic_top,
    hereditary_generic_layering,
    minimal_pairs,
    rad_soc_pairs,
)
from .layers import LayeredPair, dominance_leq, enumerate_realizable, is_realizable, pair_leq
from .quiver import Arrow, CyclicQuiverError, Quiver, QuiverError, load_quiver, opposite, parse_quiver
from .repcalc import Representation, endo_dim, radical_layering, socle_layering
from .skeleta import Skeleton, build_presentation, critical_paths, enumerate_skeleta, instantiate
from .socle import c_layers, generic_socle, generic_socle_layering

__all__ = [
    "Arrow", "Component", "CyclicQuiverError", "HypothesisViolated", "LayeredPair", "Quiver",
    "QuiverError", "Representation", "Skeleton", "build_presentation", "c_layers", "classify",
    "critical_paths", "dominance_leq", "endo_dim", "enumerate_realizable", "enumerate_skeleta",
    "generic_socle", "generic_socle_layering", "generic_top", "hereditary_generic_layering",
    "instantiate", "is_realizable", "load_quiver", "minimal_pairs", "opposite", "pair_leq",
    "parse_quiver", "rad_soc_pairs", "radical_layering", "socle_layering",
]
