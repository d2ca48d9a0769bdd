"""Morphisms of the simplex category and its augmentation.

An object ``[n]`` is represented by the integer ``n >= -1``; ``[-1]`` is the
empty order.  A morphism is an :class:`OrdinalMap`, a weakly monotone map
stored as its tuple of values (empty for the map out of ``[-1]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence


class CompositionError(ValueError):
    """Raised when two ordinal maps are not composable."""


@dataclass(frozen=True, slots=True)
class OrdinalMap:
    """A weakly monotone map ``[dom] -> [cod]`` in the augmented simplex category."""

    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dom < -1 or self.cod < -1:
            raise ValueError(f"ordinals must be >= -1, got [{self.dom}] -> [{self.cod}]")
        if len(self.values) != self.dom + 1:
            raise ValueError(f"map out of [{self.dom}] needs {self.dom + 1} values")
        if self.cod == -1 and self.dom != -1:
            raise ValueError("only the empty map targets [-1]")
        prev = 0
        for v in self.values:
            if v < prev or v > self.cod:
                raise ValueError(f"values {self.values} not monotone into [{self.cod}]")
            prev = v

    def __call__(self, r: int) -> int:
        return self.values[r]

    def __repr__(self) -> str:
        return f"OrdinalMap([{self.dom}]->[{self.cod}], {self.values})"

    @property
    def is_identity(self) -> bool:
        return self.dom == self.cod and self.values == tuple(range(self.dom + 1))

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.cod + 1

    def flat(self) -> list[int]:
        """Flat serialization ``[l, k, v0, ..., vl]``."""
        return [self.dom, self.cod, *self.values]

    @classmethod
    def from_flat(cls, seq: Sequence[int]) -> "OrdinalMap":
        dom, cod, *values = seq
        return cls(dom, cod, tuple(values))


def ordinal_map(values: Sequence[int], cod: int) -> OrdinalMap:
    return OrdinalMap(len(values) - 1, cod, tuple(values))


@lru_cache(maxsize=None)
def identity(n: int) -> OrdinalMap:
    return OrdinalMap(n, n, tuple(range(n + 1)))


def empty_map(k: int) -> OrdinalMap:
    """The unique map ``[-1] -> [k]``."""
    return OrdinalMap(-1, k, ())


def compose(g: OrdinalMap, f: OrdinalMap) -> OrdinalMap:
    """Return ``g . f`` (apply ``f`` first)."""
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose {g!r} after {f!r}")
    gv = g.values
    return OrdinalMap(f.dom, g.cod, tuple(gv[v] for v in f.values))


def ordinal_sum_obj(k: int, l: int) -> int:
    return k + 1 + l


def ordinal_sum_map(b1: OrdinalMap, b2: OrdinalMap) -> OrdinalMap:
    """Concatenate ``b1`` and ``b2``, shifting the second block past ``cod(b1)``."""
    shift = b1.cod + 1
    return OrdinalMap(
        b1.dom + 1 + b2.dom,
        b1.cod + 1 + b2.cod,
        b1.values + tuple(v + shift for v in b2.values),
    )


def split_index(beta: OrdinalMap, i: int) -> int:
    """Largest ``j`` with ``beta(j) <= i``, or -1 if there is none."""
    j = -1
    for r, v in enumerate(beta.values):
        if v <= i:
            j = r
        else:
            break
    return j


def split_at(beta: OrdinalMap, i: int) -> tuple[int, OrdinalMap, OrdinalMap]:
    """Decompose ``beta`` as the ordinal sum of a map into ``[i]`` and a map into ``[k-i-1]``.

    Returns ``(j, b1, b2)`` with ``b1: [j] -> [i]``, ``b2: [l-j-1] -> [k-i-1]`` and
    ``ordinal_sum_map(b1, b2) == beta``.  The decomposition is unique.
    """
    k = beta.cod
    if not -1 <= i <= k:
        raise ValueError(f"split point {i} outside [-1, {k}]")
    j = split_index(beta, i)
    b1 = OrdinalMap(j, i, beta.values[: j + 1])
    b2 = OrdinalMap(beta.dom - j - 1, k - i - 1, tuple(v - i - 1 for v in beta.values[j + 1 :]))
    return j, b1, b2


def coface(n: int, i: int) -> OrdinalMap:
    """``d^i: [n-1] -> [n]``, the injection skipping ``i``."""
    if not 0 <= i <= n:
        raise ValueError(f"coface index {i} outside [0, {n}]")
    return OrdinalMap(n - 1, n, tuple(r if r < i else r + 1 for r in range(n)))


def codegeneracy(n: int, i: int) -> OrdinalMap:
    """``s^i: [n+1] -> [n]``, the surjection hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} outside [0, {n}]")
    return OrdinalMap(n + 1, n, tuple(r if r <= i else r - 1 for r in range(n + 2)))


def constant(l: int, k: int, value: int) -> OrdinalMap:
    return OrdinalMap(l, k, (value,) * (l + 1))


def ez_factor(beta: OrdinalMap) -> tuple[OrdinalMap, OrdinalMap]:
    """Epi-mono factorization ``beta = delta . eta`` with ``delta`` injective, ``eta`` surjective."""
    if beta.dom == -1:
        return beta, identity(-1)
    image: list[int] = []
    eta: list[int] = []
    for v in beta.values:
        if not image or image[-1] != v:
            image.append(v)
        eta.append(len(image) - 1)
    m = len(image) - 1
    return OrdinalMap(m, beta.cod, tuple(image)), OrdinalMap(beta.dom, m, tuple(eta))


def enumerate_maps(l: int, k: int) -> list[OrdinalMap]:
    """All weakly monotone maps ``[l] -> [k]``, lexicographic in values."""
    return list(_maps(l, k))


@lru_cache(maxsize=None)
def _maps(l: int, k: int) -> tuple[OrdinalMap, ...]:
    if l == -1:
        return (empty_map(k),)
    if k == -1:
        return ()
    return tuple(OrdinalMap(l, k, vals) for vals in combinations_with_replacement(range(k + 1), l + 1))


@lru_cache(maxsize=None)
def surjections(n: int, m: int) -> tuple[OrdinalMap, ...]:
    """All monotone surjections ``[n] -> [m]``; identity first when ``n == m``."""
    out = []
    # a surjection is determined by the m positions r where eta(r+1) = eta(r) + 1
    for jumps in combinations(range(n), m):
        vals, cur, js = [], 0, set(jumps)
        for r in range(n + 1):
            vals.append(cur)
            if r in js:
                cur += 1
        out.append(OrdinalMap(n, m, tuple(vals)))
    return tuple(out)


@lru_cache(maxsize=None)
def injections(m: int, n: int) -> tuple[OrdinalMap, ...]:
    return tuple(OrdinalMap(m, n, vals) for vals in combinations(range(n + 1), m + 1))


def generators(l: int, k: int) -> Iterator[OrdinalMap]:
    """Cofaces and codegeneracies ``[l] -> [k]`` (only when ``|l - k| == 1``)."""
    if l == k - 1:
        for i in range(k + 1):
            yield coface(k, i)
    elif l == k + 1:
        for i in range(k + 1):
            yield codegeneracy(k, i)


def all_generators(top: int) -> Iterator[OrdinalMap]:
    """Every coface and codegeneracy between ordinals ``[0] .. [top]``."""
    for k in range(top + 1):
        for l in (k - 1, k + 1):
            if 0 <= l <= top:
                yield from generators(l, k)


def verify_split_uniqueness(top: int = 5):
    """Exhaustively confirm that :func:`split_at` gives the only decomposition.

    For every ``-1 <= l, k <= top`` and ``-1 <= i <= k`` all pairs
    ``(b1: [j] -> [i], b2: [l-j-1] -> [k-i-1])`` are summed; each
    ``beta: [l] -> [k]`` must arise exactly once, from ``split_at(beta, i)``.
    """
    from .results import CheckResult

    checked = 0
    for l in range(-1, top + 1):
        for k in range(-1, top + 1):
            betas = _maps(l, k)
            for i in range(-1, k + 1):
                hits: dict[OrdinalMap, list] = {}
                for j in range(-1, l + 1):
                    for b1 in _maps(j, i):
                        for b2 in _maps(l - j - 1, k - i - 1):
                            hits.setdefault(ordinal_sum_map(b1, b2), []).append((j, b1, b2))
                for beta in betas:
                    found = hits.get(beta, [])
                    if len(found) != 1 or found[0] != split_at(beta, i):
                        return CheckResult.fail(beta=beta, i=i, decompositions=len(found))
                    checked += 1
                if len(hits) != len(betas):
                    return CheckResult.fail(reason="a sum left the hom-set", l=l, k=k, i=i)
    return CheckResult(True, stats={"pairs": checked})
