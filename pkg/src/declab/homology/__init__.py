"""Integer homology of simplicial sets through Smith normal form."""

from .chains import ChainComplex, ChainMapError, chain_map, normalized_chains
from .checks import unit_homology, verify_retraction
from .groups import AbGroup, HomologyDegree, InducedMap, homology, homology_degrees, induced, is_homology_iso
from .matrix import MatrixZ, bareiss_det
from .snf import BACKEND, SNF, SNFError, available_backends, snf

__all__ = [
    "AbGroup",
    "BACKEND",
    "ChainComplex",
    "ChainMapError",
    "HomologyDegree",
    "InducedMap",
    "MatrixZ",
    "SNF",
    "SNFError",
    "available_backends",
    "bareiss_det",
    "chain_map",
    "homology",
    "homology_degrees",
    "induced",
    "is_homology_iso",
    "normalized_chains",
    "snf",
    "unit_homology",
    "verify_retraction",
]
