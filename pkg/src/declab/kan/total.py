"""The total simplicial set ``T = σ_*``, cotensors, the unit and the comparison map.

``(T Y)_n`` is computed as the set of bisimplicial maps ``Dec Δ[n] -> Y``, and
``(X^K)_n`` as the set of simplicial maps ``Δ[n] × K -> X``.  Elements of both
are ``(n, images)`` with ``images`` listed in the cell order of the source.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, NamedTuple

from ..ordinal import OrdinalMap, compose, surjections
from ..results import CheckResult, CutoffExceeded
from ..sset.bisimplicial import BiSimplicialObject, BiSSet, hom_bisset
from ..sset.builders import ProductSSet, StandardSimplex, product, simplex
from ..sset.core import SimplicialObject, Simplex, SMap, SSet, hom_sset
from .dec import Dec, LevelMap, dec, dec_simplex
from .shriek import sigma_shriek


class Hom(NamedTuple):
    n: int
    images: tuple


@lru_cache(maxsize=None)
def _simplex(n: int) -> StandardSimplex:
    return simplex(n)


class Total(SimplicialObject):
    """``σ_* Y`` via corepresentability: ``(σ_* Y)_n = Hom(Dec Δ[n], Y)``."""

    def __init__(self, Y: BiSimplicialObject, *, limit: int | None = None) -> None:
        super().__init__()
        self.Y = Y
        self.limit = limit

    def _level(self, n: int) -> list:
        D = dec_simplex(n)
        return [Hom(n, m.key()) for m in hom_bisset(D, self.Y, limit=self.limit)]

    def dim(self, x: Hom) -> int:
        return x.n

    def evaluate(self, x: Hom, b) -> Any:
        """Value of the map ``x`` on a bisimplex ``b`` of ``Dec Δ[n]``."""
        D = dec_simplex(x.n)
        return self.Y.act2(b.hdeg, b.vdeg, x.images[D.position[b.cell]])

    def act(self, beta: OrdinalMap, x: Hom) -> Hom:
        if beta.cod != x.n:
            raise ValueError(f"cannot act by {beta!r} on level {x.n}")
        src, tgt = dec_simplex(beta.dom), dec_simplex(beta.cod)
        bv = beta.values
        out = []
        for u, v in src.all_cells():
            b = tgt.bisimplex_of(tuple(bv[r] for r in u), tuple(bv[r] for r in v))
            out.append(self.evaluate(x, b))
        return Hom(beta.dom, tuple(out))


def total(Y: BiSimplicialObject, n: int) -> list[Hom]:
    return Total(Y).level(n)


class Cotensor(SimplicialObject):
    """``X^K`` with ``(X^K)_n = Hom(Δ[n] × K, X)``."""

    def __init__(self, X: SimplicialObject, K: SSet, *, limit: int | None = None) -> None:
        super().__init__()
        self.X, self.K = X, K
        self.limit = limit
        self._prisms: dict[int, ProductSSet] = {}

    def prism(self, n: int) -> ProductSSet:
        if n not in self._prisms:
            with self._lock:
                self._prisms.setdefault(n, product(_simplex(n), self.K))
        return self._prisms[n]

    def _level(self, n: int) -> list:
        P = self.prism(n)
        return [Hom(n, m.key()) for m in hom_sset(P, self.X, limit=self.limit)]

    def dim(self, x: Hom) -> int:
        return x.n

    def as_map(self, x: Hom) -> SMap:
        P = self.prism(x.n)
        return SMap(P, self.X, dict(zip(P.all_cells(), x.images)))

    def evaluate(self, x: Hom, s: Simplex) -> Any:
        return self.X.act(s.deg, x.images[self._position(x.n)[s.cell]])

    def _position(self, n: int) -> dict:
        return self._cached(("pos", n), lambda: {c: i for i, c in enumerate(self.prism(n).all_cells())})

    def act(self, beta: OrdinalMap, x: Hom) -> Hom:
        """Precomposition with ``β × id: Δ[m] × K -> Δ[n] × K``."""
        if beta.cod != x.n:
            raise ValueError(f"cannot act by {beta!r} on level {x.n}")
        src, tgt = self.prism(beta.dom), self.prism(beta.cod)
        dn = tgt.left
        out = []
        for c in src.all_cells():
            s0, k0 = src.components[c]
            moved = dn.simplex_of_map(compose(beta, src.left.map_of_simplex(s0)))
            out.append(self.evaluate(x, tgt.pair(moved, k0)))
        return Hom(beta.dom, tuple(out))

    def precompose(self, other: "Cotensor", g: SMap) -> LevelMap:
        """``X^{K'} -> X^K`` induced by ``g: K -> K'`` (``self`` is ``X^{K'}``)."""

        def fn(x: Hom) -> Hom:
            src, tgt = other.prism(x.n), self.prism(x.n)
            return Hom(x.n, tuple(self.evaluate(x, tgt.pair(s0, g(k0))) for s0, k0 in (src.components[c] for c in src.all_cells())))

        return LevelMap(self, other, fn, 0, "precompose")


def path_space(X: SimplicialObject, *, limit: int | None = None) -> Cotensor:
    return Cotensor(X, simplex(1), limit=limit)


def unit(X: SimplicialObject, n: int):
    """``X_n -> (T Dec X)_n``: ``x`` goes to ``Dec`` of its classifying map ``Δ[n] -> X``."""
    D = dec_simplex(n)

    def fn(x) -> Hom:
        return Hom(n, tuple(X.act(OrdinalMap(len(u) + len(v) - 1, n, u + v), x) for u, v in D.all_cells()))

    return fn


def unit_map(X: SimplicialObject, T: Total, cutoff: int) -> LevelMap:
    return LevelMap(X, T, lambda x: unit(X, X.dim(x))(x), cutoff, "unit")


def constant_path(X: SimplicialObject, C: Cotensor, n: int):
    """``x ↦ x ∘ pr``: the map ``X^{Δ[0]} -> X^{Δ[1]}`` induced by ``Δ[1] -> Δ[0]``."""
    P = C.prism(n)

    def fn(x) -> Hom:
        return Hom(n, tuple(X.act(P.left.map_of_simplex(P.components[c][0]), x) for c in P.all_cells()))

    return fn


def comparison(X: SimplicialObject, T: Total, C: Cotensor):
    """``(T Dec X)_n -> (X^{Δ[1]})_n``, transposing through the counit isomorphism.

    A map ``φ: Dec Δ[n] -> Dec X`` goes to ``ε_X ∘ σ_!(φ) ∘ θ^{-1}`` where ``θ`` is
    the identification ``σ_! Dec Δ[n] ≅ Δ[n] × Δ[1]``.  On a simplex
    ``(γ, f_i)`` this reads: interior ``i`` evaluates ``φ`` on ``γ`` split after
    position ``i``; ``i = -1`` and ``i = k`` evaluate ``φ`` on ``s_0 γ``,
    ``s_k γ`` and apply ``d_0``, ``d_{k+1}``.
    """

    def fn(phi: Hom) -> Hom:
        n = phi.n
        D, P = dec_simplex(n), C.prism(n)
        interval = P.right
        out = []
        for c in P.all_cells():
            g0, f0 = P.components[c]
            gamma = P.left.map_of_simplex(g0).values
            f = interval.map_of_simplex(f0).values
            k = len(gamma) - 1
            i = f.count(0) - 1
            if i == -1:
                y = T.evaluate(phi, D.bisimplex_of(gamma[:1], gamma))
                out.append(X.face(0, y))
            elif i == k:
                y = T.evaluate(phi, D.bisimplex_of(gamma, gamma[-1:]))
                out.append(X.face(k + 1, y))
            else:
                out.append(T.evaluate(phi, D.bisimplex_of(gamma[: i + 1], gamma[i + 1 :])))
        return Hom(n, tuple(out))

    return fn


def verify_comparison(X: SimplicialObject, top: int, *, limit: int | None = None) -> CheckResult:
    """Bijectivity, naturality and unit compatibility of the comparison up to level ``top``."""
    T, C = Total(dec(X), limit=limit), path_space(X, limit=limit)
    comp = LevelMap(T, C, comparison(X, T, C), top, "comparison")
    res = comp.check_bijective()
    if not res:
        return res
    res = comp.check_natural()
    if not res:
        return res
    for n in range(top + 1):
        eta, const = unit(X, n), constant_path(X, C, n)
        for x in X.level(n):
            ux = eta(x)
            if ux not in T.index(n):
                return CheckResult.fail(reason="unit image is not a bisimplicial map", level=n, x=x)
            if comp(ux) != const(x):
                return CheckResult.fail(reason="unit does not match Δ[1] -> Δ[0]", level=n, x=x)
    return CheckResult(True, stats={"sizes": [len(T.level(n)) for n in range(top + 1)]})


def cellize(S: SimplicialObject, top: int, *, prefix: str = "c") -> "CellizedSSet":
    return CellizedSSet(S, top, prefix=prefix)


class CellizedSSet(SSet):
    """A cell presentation of a level-queryable ``S`` whose nondegenerate simplices stop by ``top``."""

    def __init__(self, S: SimplicialObject, top: int, *, prefix: str = "c") -> None:
        self.source = S
        if S.nondegenerate(top + 1):
            raise CutoffExceeded(f"nondegenerate simplices above level {top}")
        self.cell_of: dict[Any, str] = {}
        self.element_of: dict[str, Any] = {}
        cells: dict[int, list] = {}
        for n in range(top + 1):
            for pos, e in enumerate(S.nondegenerate(n)):
                name = f"{prefix}{n}_{pos}"
                cells.setdefault(n, []).append(name)
                self.cell_of[e] = name
                self.element_of[name] = e
        self._ez: dict[Any, Simplex] = {}
        for n in range(top + 1):
            for m in range(n + 1):
                for eta in surjections(n, m):
                    for z in S.nondegenerate(m):
                        e = S.act(eta, z)
                        if e in self._ez:
                            raise ValueError(f"element {e!r} has two normal forms")
                        self._ez[e] = Simplex(self.cell_of[z], eta)
        faces = {}
        for name, e in self.element_of.items():
            n = S.dim(e)
            if n > 0:
                faces[name] = [self._ez[S.face(i, e)] for i in range(n + 1)]
        super().__init__(cells, faces)

    def simplex_of(self, e: Any) -> Simplex:
        return self._ez[e]


def adjunction_check(Y: BiSSet, X: SSet, *, limit: int | None = None) -> CheckResult:
    """Transposition gives a bijection ``Hom(σ_! Y, X) ≅ Hom(Y, Dec X)``."""
    top = max((p + q for p, q in Y.cells), default=-1) + 1
    S = sigma_shriek(Y)
    cells = cellize(S, top)
    left = hom_sset(cells, X, limit=limit)
    right = {m.key() for m in hom_bisset(Y, dec(X), limit=limit)}
    order = Y.all_cells()
    transposed = set()
    for f in left:
        key = tuple(f(cells.simplex_of((p, q, Y.cell(c)))) for c in order for p, q in [Y.bidegree[c]])
        if key in transposed:
            return CheckResult.fail(reason="transpose not injective")
        transposed.add(key)
    if transposed != right:
        return CheckResult.fail(reason="transpose not surjective", left=len(left), right=len(right))
    return CheckResult(True, stats={"maps": len(left)})


__all__ = [
    "CellizedSSet",
    "Cotensor",
    "Dec",
    "Hom",
    "Total",
    "adjunction_check",
    "cellize",
    "comparison",
    "constant_path",
    "path_space",
    "total",
    "unit",
    "unit_map",
    "verify_comparison",
]
