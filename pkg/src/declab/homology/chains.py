"""Normalized integer chains of a simplicial set and induced chain maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from ..sset.core import SimplicialObject
from .matrix import MatrixZ


class ChainMapError(ArithmeticError):
    """A levelwise map failed to commute with the boundary."""


@dataclass(frozen=True)
class ChainComplex:
    """Bases of nondegenerate simplices in degrees ``0..top`` with boundary matrices.

    ``boundaries[n]`` is ``∂_n: C_n -> C_{n-1}``; ``∂_0`` is the zero map to the
    zero group.
    """

    space: Any
    bases: tuple[tuple, ...]
    boundaries: tuple[MatrixZ, ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def index(self, n: int) -> dict:
        if n not in self._index:
            self._index[n] = {c: i for i, c in enumerate(self.bases[n])}
        return self._index[n]

    def rank(self, n: int) -> int:
        return len(self.bases[n])

    def check(self) -> None:
        for n in range(1, self.top + 1):
            if not (self.boundaries[n - 1] @ self.boundaries[n]).is_zero():
                raise ChainMapError(f"∂∂ != 0 in degree {n}")


def normalized_chains(X: SimplicialObject, D: int) -> ChainComplex:
    """Chains through degree ``D + 1`` so that homology through ``D`` is determined.

    Degenerate faces contribute zero.
    """
    top = D + 1
    bases = tuple(tuple(X.nondegenerate(n)) for n in range(top + 1))
    idx = [{c: i for i, c in enumerate(b)} for b in bases]
    mats = [MatrixZ(0, len(bases[0]))]
    for n in range(1, top + 1):
        rows = [[0] * len(bases[n]) for _ in bases[n - 1]]
        for j, c in enumerate(bases[n]):
            for i in range(n + 1):
                r = idx[n - 1].get(X.face(i, c))
                if r is not None:
                    rows[r][j] += -1 if i % 2 else 1
        mats.append(MatrixZ(len(bases[n - 1]), len(bases[n]), rows))
    return ChainComplex(X, bases, tuple(mats))


def chain_map(f: Callable[[Any], Any], source: ChainComplex, target: ChainComplex) -> list[MatrixZ]:
    """Matrices of ``f`` on normalized chains, checked against both boundaries.

    A nondegenerate simplex whose image is degenerate maps to zero.
    """
    top = min(source.top, target.top)
    mats = []
    for n in range(top + 1):
        tidx = target.index(n)
        rows = [[0] * source.rank(n) for _ in range(target.rank(n))]
        for j, c in enumerate(source.bases[n]):
            r = tidx.get(f(c))
            if r is not None:
                rows[r][j] = 1
        mats.append(MatrixZ(target.rank(n), source.rank(n), rows))
    for n in range(1, top + 1):
        if target.boundaries[n] @ mats[n] != mats[n - 1] @ source.boundaries[n]:
            raise ChainMapError(f"map does not commute with ∂ in degree {n}")
    return mats
