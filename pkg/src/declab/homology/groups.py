"""Homology groups via Smith normal form, and the maps they receive."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..sset.core import SimplicialObject
from .chains import ChainComplex, chain_map, normalized_chains
from .matrix import MatrixZ
from .snf import snf


@dataclass(frozen=True)
class AbGroup:
    """``Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m`` with ``t_1 | t_2 | ... | t_m``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(t <= 1 for t in self.torsion):
            raise ValueError(f"torsion coefficients must exceed 1, got {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    def to_json(self, n: int) -> dict:
        return {"n": n, "rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) or "0"


Z = AbGroup(1)
ZERO = AbGroup(0)


@dataclass(frozen=True)
class HomologyDegree:
    """``H_n`` together with the coordinates that present it.

    ``cycles`` has a basis of ``ker ∂_n`` as columns and ``proj`` recovers
    coordinates in that basis.  After the change of basis ``U`` the
    boundaries become diagonal; ``gens`` lists the surviving coordinates as
    ``(index, order)`` with order 0 for a free generator.
    """

    n: int
    group: AbGroup
    cycles: MatrixZ
    proj: MatrixZ
    U: MatrixZ
    Uinv: MatrixZ
    gens: tuple[tuple[int, int], ...]

    def coords(self, z) -> list[int]:
        """Class of the cycle ``z`` in generator coordinates (torsion ones reduced)."""
        y = self.U.apply(self.proj.apply(list(z)))
        return [y[i] % d if d else y[i] for i, d in self.gens]

    def representative(self, g: int) -> list[int]:
        """A cycle representing the ``g``-th generator."""
        i = self.gens[g][0]
        return self.cycles.apply(list(self.Uinv.column(i)))


def homology_degrees(C: ChainComplex, D: int | None = None) -> list[HomologyDegree]:
    D = C.top - 1 if D is None else D
    if D >= C.top:
        raise ValueError(f"complex reaches degree {C.top}; homology needs ∂ up to {D + 1}")
    out = []
    for n in range(D + 1):
        s = snf(C.boundaries[n])
        r = s.rank
        cycles = s.V.take(cols=slice(r, None))
        proj = s.Vinv.take(rows=slice(r, None))
        rel = snf(proj @ C.boundaries[n + 1])
        inv = rel.invariants
        k = cycles.cols
        gens = tuple((i, d) for i, d in enumerate(inv) if d > 1) + tuple((i, 0) for i in range(len(inv), k))
        group = AbGroup(k - len(inv), tuple(d for d in inv if d > 1))
        out.append(HomologyDegree(n, group, cycles, proj, rel.U, rel.Uinv, gens))
    return out


def homology(X: SimplicialObject, D: int) -> list[AbGroup]:
    """``H_0 .. H_D`` of ``X`` with integer coefficients."""
    C = normalized_chains(X, D)
    C.check()
    return [h.group for h in homology_degrees(C, D)]


@dataclass(frozen=True)
class InducedMap:
    chain: tuple[MatrixZ, ...]
    homology: tuple[MatrixZ, ...]
    source: tuple[AbGroup, ...]
    target: tuple[AbGroup, ...]

    def is_iso(self) -> bool:
        """Isomorphism in every computed degree.

        Equal isomorphism types plus surjectivity suffice, since a surjective
        endomorphism of a finitely generated abelian group is injective.
        """
        for M, src, tgt in zip(self.homology, self.source, self.target):
            if src != tgt or not _surjective(M, tgt.torsion + (0,) * tgt.rank):
                return False
        return True


def _surjective(M: MatrixZ, orders: tuple[int, ...]) -> bool:
    """Image of ``M`` plus the relations ``order_i * e_i`` span all generators."""
    k = M.rows
    if k == 0:
        return True
    rel = MatrixZ.diag(list(orders), k, k)
    inv = snf(M.hstack(rel)).invariants
    return len(inv) == k and all(d == 1 for d in inv)


def induced(f: Any, D: int, *, source: SimplicialObject | None = None, target: SimplicialObject | None = None) -> InducedMap:
    """Chain and homology matrices of a simplicial map through degree ``D``.

    ``f`` is any callable with ``source`` and ``target`` attributes (a
    simplicial map or a checked levelwise map).  Homology matrices use the
    generator coordinates of :class:`HomologyDegree`.
    """
    src = normalized_chains(source or f.source, D)
    tgt = normalized_chains(target or f.target, D)
    src.check()
    tgt.check()
    F = chain_map(f, src, tgt)
    hs, ht = homology_degrees(src, D), homology_degrees(tgt, D)
    mats = []
    for n in range(D + 1):
        cols = [ht[n].coords(F[n].apply(hs[n].representative(g))) for g in range(len(hs[n].gens))]
        rows = len(ht[n].gens)
        mats.append(MatrixZ(rows, len(cols), [[c[r] for c in cols] for r in range(rows)]))
    return InducedMap(tuple(F), tuple(mats), tuple(h.group for h in hs), tuple(h.group for h in ht))


def is_homology_iso(f: Any, D: int) -> bool:
    ind = f if isinstance(f, InducedMap) else induced(f, D)
    return ind.is_iso()
