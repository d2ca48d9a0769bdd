"""Décalage, the cellular model of ``Dec Δ[n]``, and level-preserving maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable

from ..ordinal import OrdinalMap, all_generators, ez_factor, ordinal_sum_map
from ..results import CheckResult
from ..sset.bisimplicial import BiSimplex, BiSimplicialObject, BiSSet, binondeg
from ..sset.core import SimplicialObject


class Dec(BiSimplicialObject):
    """``Dec X`` with ``(Dec X)_{k,l} = X_{k+1+l}``; structure maps through the ordinal sum."""

    def __init__(self, X: SimplicialObject) -> None:
        super().__init__()
        self.base = X
        self._acts: dict = {}

    def _level2(self, k: int, l: int) -> list:
        return self.base.level(k + 1 + l)

    def act2(self, a1: OrdinalMap, a2: OrdinalMap, y: Any) -> Any:
        key = (a1, a2, y)
        hit = self._acts.get(key)
        if hit is None:
            hit = self._acts[key] = self.base.act(ordinal_sum_map(a1, a2), y)
        return hit

    def __repr__(self) -> str:
        return f"Dec({self.base!r})"


def dec(X: SimplicialObject) -> Dec:
    return Dec(X)


class DecSimplex(BiSSet):
    """Cell presentation of ``Dec Δ[n]``.

    A ``(k, l)``-bisimplex is a pair of monotone maps ``u: [k] -> [n]``,
    ``v: [l] -> [n]`` with ``u(k) <= v(0)``; it is nondegenerate iff both are
    injective.  Cells are the pairs ``(u, v)`` of strictly increasing tuples.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        cells: dict[tuple[int, int], list] = {}
        hfaces, vfaces = {}, {}
        verts = range(n + 1)
        for k in range(n + 1):
            for l in range(n + 1 - k):
                for u in combinations(verts, k + 1):
                    for v in combinations(verts, l + 1):
                        if u[-1] > v[0]:
                            continue
                        c = (u, v)
                        cells.setdefault((k, l), []).append(c)
                        if k > 0:
                            hfaces[c] = [binondeg((u[:i] + u[i + 1 :], v), k - 1, l) for i in range(k + 1)]
                        if l > 0:
                            vfaces[c] = [binondeg((u, v[:j] + v[j + 1 :]), k, l - 1) for j in range(l + 1)]
        super().__init__(cells, hfaces, vfaces)
        self.position = {c: i for i, c in enumerate(self.all_cells())}

    def bisimplex_of(self, u: tuple[int, ...], v: tuple[int, ...]) -> BiSimplex:
        d1, e1 = ez_factor(OrdinalMap(len(u) - 1, self.n, tuple(u)))
        d2, e2 = ez_factor(OrdinalMap(len(v) - 1, self.n, tuple(v)))
        return BiSimplex((d1.values, d2.values), e1, e2)

    def maps_of(self, b: BiSimplex) -> tuple[tuple[int, ...], tuple[int, ...]]:
        u, v = b.cell
        return tuple(u[r] for r in b.hdeg.values), tuple(v[r] for r in b.vdeg.values)

    def total_map(self, b: BiSimplex) -> OrdinalMap:
        """The simplex ``[k+1+l] -> [n]`` of ``Δ[n]`` that ``b`` is in ``Dec Δ[n]``."""
        u, v = self.maps_of(b)
        return OrdinalMap(len(u) + len(v) - 1, self.n, u + v)


@lru_cache(maxsize=None)
def dec_simplex(n: int) -> DecSimplex:
    return DecSimplex(n)


@dataclass
class LevelMap:
    """A levelwise map between simplicial objects, checked on levels ``<= cutoff``."""

    source: SimplicialObject
    target: SimplicialObject
    fn: Callable[[Any], Any]
    cutoff: int
    name: str = "map"
    _tables: dict[int, dict] = field(default_factory=dict, repr=False)

    def __call__(self, x: Any) -> Any:
        return self.fn(x)

    def table(self, n: int) -> dict:
        if n not in self._tables:
            self._tables[n] = {x: self.fn(x) for x in self.source.level(n)}
        return self._tables[n]

    def check_natural(self, top: int | None = None) -> CheckResult:
        """Commutation with every coface and codegeneracy between levels ``<= top``."""
        top = self.cutoff if top is None else top
        for beta in all_generators(top):
            tab_k, tab_l = self.table(beta.cod), self.table(beta.dom)
            for x, fx in tab_k.items():
                lhs = tab_l[self.source.act(beta, x)]
                rhs = self.target.act(beta, fx)
                if lhs != rhs:
                    return CheckResult.fail(check=self.name, beta=beta, level=beta.cod, lhs=lhs, rhs=rhs)
        return CheckResult(True)

    def check_bijective(self, top: int | None = None) -> CheckResult:
        top = self.cutoff if top is None else top
        for n in range(top + 1):
            images = list(self.table(n).values())
            tgt = set(self.target.level(n))
            if len(set(images)) != len(images):
                return CheckResult.fail(check=self.name, level=n, reason="not injective")
            if set(images) != tgt:
                return CheckResult.fail(check=self.name, level=n, reason="not surjective")
        return CheckResult(True)


@dataclass
class NatIso:
    """Finite witness of a natural isomorphism: levelwise bijections up to a cutoff."""

    map: LevelMap

    @property
    def cutoff(self) -> int:
        return self.map.cutoff

    def bijection(self, n: int) -> dict:
        return self.map.table(n)

    def verify(self) -> CheckResult:
        res = self.map.check_bijective()
        if not res:
            return res
        return self.map.check_natural()


def identity_level_map(X: SimplicialObject, cutoff: int) -> LevelMap:
    return LevelMap(X, X, lambda x: x, cutoff, "identity")


__all__ = [
    "Dec",
    "DecSimplex",
    "LevelMap",
    "NatIso",
    "dec",
    "dec_simplex",
    "identity_level_map",
]
