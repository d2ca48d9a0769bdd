"""Décalage and its adjoints: ``σ_! ⊣ Dec ⊣ T``."""

from .dec import Dec, DecSimplex, LevelMap, NatIso, dec, dec_simplex, identity_level_map
from .shriek import (
    ABiSSet,
    ASSet,
    SigmaAShriek,
    SigmaShriek,
    check_pi0_identification,
    column_components,
    counit_iso,
    counit_sigma,
    iota2_shriek,
    iota_shriek,
    path_index_map,
    row_components,
    sigma_a_shriek,
    sigma_shriek,
    sigma_shriek_composite,
    two_route_agreement,
    verify_counit,
)
from .total import (
    CellizedSSet,
    Cotensor,
    Hom,
    Total,
    adjunction_check,
    cellize,
    comparison,
    constant_path,
    path_space,
    total,
    unit,
    unit_map,
    verify_comparison,
)
