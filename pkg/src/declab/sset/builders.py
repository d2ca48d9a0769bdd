"""Constructors for the finite simplicial sets used as test corpus."""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from itertools import combinations

from ..ordinal import OrdinalMap, compose, constant, ez_factor
from .core import SimplicialObject, Simplex, SMap, SSet, ValidationError, nondeg


def vertex_name(vertices: Iterable[int]) -> str:
    return "[" + ",".join(str(v) for v in vertices) + "]"


class StandardSimplexLike(SSet):
    """A simplicial subset of ``Δ[n]``; cells are named by their vertex lists."""

    def __init__(self, n: int, faces_kept: Iterable[tuple[int, ...]]) -> None:
        self.n = n
        keep = sorted(set(faces_kept), key=lambda t: (len(t), t))
        cells: dict[int, list] = {}
        faces: dict[str, list[Simplex]] = {}
        self.vertices_of: dict[str, tuple[int, ...]] = {}
        for t in keep:
            name = vertex_name(t)
            self.vertices_of[name] = t
            d = len(t) - 1
            cells.setdefault(d, []).append(name)
            if d > 0:
                faces[name] = [nondeg(vertex_name(t[:i] + t[i + 1 :]), d - 1) for i in range(d + 1)]
        super().__init__(cells, faces)

    def simplex_of_map(self, gamma: OrdinalMap) -> Simplex:
        """The simplex ``gamma: [k] -> [n]``; its image must be a kept face."""
        delta, eta = ez_factor(gamma)
        name = vertex_name(delta.values)
        if name not in self.cell_dim:
            raise ValidationError(f"{gamma!r} is not a simplex of this subset")
        return Simplex(name, eta)

    def map_of_simplex(self, s: Simplex) -> OrdinalMap:
        verts = self.vertices_of[s.cell]
        return OrdinalMap(s.dim, self.n, tuple(verts[v] for v in s.deg.values))


class StandardSimplex(StandardSimplexLike):
    """``Δ[n]``, whose ``k``-simplices are the monotone maps ``[k] -> [n]``."""

    def __init__(self, n: int) -> None:
        subsets = [t for d in range(n + 1) for t in combinations(range(n + 1), d + 1)]
        super().__init__(n, subsets)

    @property
    def top(self) -> Simplex:
        return nondeg(vertex_name(range(self.n + 1)), self.n)

    def induced(self, other: "StandardSimplex", beta: OrdinalMap) -> SMap:
        """The map ``Δ[beta.dom] -> Δ[beta.cod]`` induced by ``beta`` (``self`` is the source)."""
        return SMap(
            self,
            other,
            {c: other.simplex_of_map(compose(beta, self.map_of_simplex(self.cell(c)))) for c in self.all_cells()},
        )


def simplex(n: int) -> StandardSimplex:
    return StandardSimplex(n)


def boundary(n: int) -> StandardSimplexLike:
    subsets = [t for d in range(n) for t in combinations(range(n + 1), d + 1)]
    return StandardSimplexLike(n, subsets)


def horn(n: int, k: int) -> StandardSimplexLike:
    """``Λ^k[n]``: the boundary minus the face opposite vertex ``k``."""
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} outside [0, {n}]")
    missing = tuple(v for v in range(n + 1) if v != k)
    subsets = [t for d in range(n) for t in combinations(range(n + 1), d + 1) if t != missing]
    return StandardSimplexLike(n, subsets)


def disjoint_union(X: SSet, Y: SSet) -> SSet:
    def tag(side: str, c: Hashable) -> str:
        return f"{side}:{c}"

    cells: dict[int, list] = {}
    faces: dict[str, list[Simplex]] = {}
    for side, Z in (("L", X), ("R", Y)):
        for n, cs in Z.cells.items():
            for c in cs:
                cells.setdefault(n, []).append(tag(side, c))
                faces[tag(side, c)] = [Simplex(tag(side, f.cell), f.deg) for f in Z.faces.get(c, ())]
    return SSet(cells, faces)


def simplex_name(s: Simplex) -> str:
    if s.is_nondegenerate:
        return str(s.cell)
    return f"{s.cell}^{'.'.join(str(v) for v in s.deg.values)}"


class ProductSSet(SSet):
    """Levelwise product ``X × Y`` with nondegenerate cells extracted per dimension.

    A pair ``(x, y)`` of ``n``-simplices is degenerate iff both coordinates are
    degenerate along a common codegeneracy.
    """

    def __init__(self, X: SSet, Y: SSet) -> None:
        self.left, self.right = X, Y
        self.components: dict[str, tuple[Simplex, Simplex]] = {}
        self._cell_of: dict[tuple[Simplex, Simplex], str] = {}
        cells: dict[int, list] = {}
        pending: list[tuple[str, Simplex, Simplex]] = []
        top = X.dimension + Y.dimension
        for n in range(top + 1):
            for x in X.level(n):
                for y in Y.level(n):
                    if _joint_collapse(x.deg, y.deg):
                        continue
                    name = f"({simplex_name(x)}|{simplex_name(y)})"
                    cells.setdefault(n, []).append(name)
                    self.components[name] = (x, y)
                    self._cell_of[(x, y)] = name
                    pending.append((name, x, y))
        faces: dict[str, list[Simplex]] = {}
        for name, x, y in pending:
            n = x.dim
            if n > 0:
                faces[name] = [self.pair(X.face(i, x), Y.face(i, y)) for i in range(n + 1)]
        super().__init__(cells, faces)

    def pair(self, x: Simplex, y: Simplex) -> Simplex:
        """Normal form of the product simplex with coordinates ``x`` and ``y``."""
        n = x.dim
        if y.dim != n:
            raise ValueError("coordinates of a product simplex must have equal dimension")
        xv, yv = x.deg.values, y.deg.values
        eta_vals, section, cur = [0], [0], 0
        for r in range(n):
            if not (xv[r] == xv[r + 1] and yv[r] == yv[r + 1]):
                cur += 1
                section.append(r + 1)
            eta_vals.append(cur)
        eta = OrdinalMap(n, cur, tuple(eta_vals))
        sec = OrdinalMap(cur, n, tuple(section))
        x0 = self.left.act(sec, x) if cur != n else x
        y0 = self.right.act(sec, y) if cur != n else y
        return Simplex(self._cell_of[(x0, y0)], eta)

    def unpair(self, s: Simplex) -> tuple[Simplex, Simplex]:
        x0, y0 = self.components[s.cell]
        return self.left.act(s.deg, x0), self.right.act(s.deg, y0)

    def projections(self) -> tuple[SMap, SMap]:
        return (
            SMap(self, self.left, {c: xy[0] for c, xy in self.components.items()}),
            SMap(self, self.right, {c: xy[1] for c, xy in self.components.items()}),
        )


def _joint_collapse(a: OrdinalMap, b: OrdinalMap) -> bool:
    av, bv = a.values, b.values
    return any(av[r] == av[r + 1] and bv[r] == bv[r + 1] for r in range(a.dom))


def product(X: SSet, Y: SSet) -> ProductSSet:
    return ProductSSet(X, Y)


def tensor(X: SSet, K: SSet) -> ProductSSet:
    """Tensor of ``X`` with ``K``; for set-valued objects this is the product."""
    return ProductSSet(X, K)


def canonical_map(T: ProductSSet) -> SMap:
    """The canonical map ``X × K -> X``."""
    return T.projections()[0]


def product_map(P: ProductSSet, Q: ProductSSet, f: SMap, g: SMap) -> SMap:
    """``f × g: P -> Q`` for maps between the factors."""
    return SMap(P, Q, {c: Q.pair(f(x), g(y)) for c, (x, y) in P.components.items()})


POINT = "*"


def quotient(X: SSet, A: SSet | Iterable[Hashable]) -> SSet:
    """Collapse the face-closed subcomplex ``A`` of ``X`` to a single vertex."""
    sub = set(A.all_cells() if isinstance(A, SSet) else A)
    if not sub:
        raise ValidationError("cannot collapse an empty subcomplex")
    missing = sub - set(X.cell_dim)
    if missing:
        raise ValidationError(f"subcomplex cells {sorted(map(str, missing))} not in the space")
    for c in sub:
        for f in X.faces.get(c, ()):
            if f.cell not in sub:
                raise ValidationError(f"subcomplex is not face-closed: {c!r} has face {f.cell!r}")
    if POINT in X.cell_dim and POINT not in sub:
        raise ValidationError(f"cell id {POINT!r} is reserved for the collapsed point")
    cells: dict[int, list] = {0: [POINT]}
    faces: dict[Hashable, list[Simplex]] = {}
    for n, cs in X.cells.items():
        for c in cs:
            if c in sub:
                continue
            cells.setdefault(n, []).append(c)
            if n > 0:
                faces[c] = [
                    Simplex(POINT, constant(n - 1, 0, 0)) if f.cell in sub else f for f in X.faces[c]
                ]
    return SSet(cells, faces)


def quotient_map(X: SSet, A: SSet, Q: SSet) -> SMap:
    sub = set(A.all_cells())
    return SMap(
        X,
        Q,
        {c: Simplex(POINT, constant(X.cell_dim[c], 0, 0)) if c in sub else X.cell(c) for c in X.all_cells()},
    )


def sphere(n: int) -> SSet:
    return quotient(simplex(n), boundary(n))


def point() -> StandardSimplex:
    return simplex(0)


def constant_map(X: SSet, Y: SimplicialObject, vertex) -> SMap:
    """The map sending all of ``X`` to the given vertex of ``Y``."""
    return SMap(X, Y, {c: Y.act(constant(X.cell_dim[c], 0, 0), vertex) for c in X.all_cells()})


def inclusion(A: SSet, X: SSet) -> SMap:
    """Inclusion of a simplicial subset sharing cell ids."""
    return SMap(A, X, {c: X.cell(c) for c in A.all_cells()})


def collapse_to_point(X: SSet) -> SMap:
    P = point()
    return SMap(X, P, {c: Simplex("[0]", constant(X.cell_dim[c], 0, 0)) for c in X.all_cells()})


__all__ = [
    "ProductSSet",
    "StandardSimplex",
    "StandardSimplexLike",
    "boundary",
    "canonical_map",
    "collapse_to_point",
    "constant_map",
    "disjoint_union",
    "horn",
    "inclusion",
    "point",
    "product",
    "product_map",
    "quotient",
    "quotient_map",
    "simplex",
    "sphere",
    "tensor",
]
