from .bisimplicial import (
    BiSimplex,
    BiSimplicialObject,
    BiSMap,
    BiSSet,
    binondeg,
    external_product,
    hom_bisset,
)
from .builders import (
    POINT,
    ProductSSet,
    StandardSimplex,
    StandardSimplexLike,
    boundary,
    canonical_map,
    collapse_to_point,
    constant_map,
    disjoint_union,
    horn,
    inclusion,
    point,
    product,
    product_map,
    quotient,
    quotient_map,
    simplex,
    sphere,
    tensor,
)
from .core import (
    FinSetQuot,
    Simplex,
    SimplicialObject,
    SMap,
    SSet,
    UnionFind,
    ValidationError,
    coequalizer,
    compose_maps,
    hom_sset,
    identity_map,
    nondeg,
    pi0,
    pi0_map,
    verify_split_fork,
)
from .fileformat import FormatError, parse_sset, print_sset


def level(X: SimplicialObject, n: int) -> list:
    return X.level(n)


def act(X: SimplicialObject, beta, s):
    return X.act(beta, s)


def level2(Y: BiSimplicialObject, k: int, l: int) -> list:
    return Y.level2(k, l)


def act2(Y: BiSimplicialObject, a1, a2, b):
    return Y.act2(a1, a2, b)
