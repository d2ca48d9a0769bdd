"""Bisimplicial sets: cell-presented ones and the level-queryable protocol."""

from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from collections.abc import Hashable, Mapping, Sequence
from typing import Any, NamedTuple

from ..ordinal import OrdinalMap, coface, compose, ez_factor, identity, surjections
from ..results import CheckResult
from .core import SSet, ValidationError, backtrack


class BiSimplex(NamedTuple):
    cell: Hashable
    hdeg: OrdinalMap
    vdeg: OrdinalMap

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.hdeg.dom, self.vdeg.dom


def binondeg(cell: Hashable, p: int, q: int) -> BiSimplex:
    return BiSimplex(cell, identity(p), identity(q))


class BiSimplicialObject(ABC):
    """A bisimplicial set queried at each bidegree ``(k, l)``.

    The first index is horizontal, the second vertical.
    """

    def __init__(self) -> None:
        self._memo: dict[Any, Any] = {}
        self._lock = threading.RLock()

    def _cached(self, key, compute):
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    @abstractmethod
    def _level2(self, k: int, l: int) -> list: ...

    @abstractmethod
    def act2(self, a1: OrdinalMap, a2: OrdinalMap, y: Any) -> Any:
        """Structure map of ``(a1, a2)`` on ``y`` in bidegree ``(a1.cod, a2.cod)``."""

    def level2(self, k: int, l: int) -> list:
        return self._cached(("level2", k, l), lambda: self._level2(k, l))

    def index2(self, k: int, l: int) -> dict:
        return self._cached(("index2", k, l), lambda: {y: i for i, y in enumerate(self.level2(k, l))})

    def hface(self, i: int, y: Any, k: int, l: int) -> Any:
        return self.act2(coface(k, i), identity(l), y)

    def vface(self, j: int, y: Any, k: int, l: int) -> Any:
        return self.act2(identity(k), coface(l, j), y)

    def face_key(self, y: Any, k: int, l: int) -> tuple:
        h = tuple(self.hface(i, y, k, l) for i in range(k + 1)) if k > 0 else ()
        v = tuple(self.vface(j, y, k, l) for j in range(l + 1)) if l > 0 else ()
        return h, v

    def faces_index(self, k: int, l: int) -> dict:
        def compute():
            out: dict = {}
            for y in self.level2(k, l):
                out.setdefault(self.face_key(y, k, l), []).append(y)
            return out

        return self._cached(("faces_index", k, l), compute)

    def row(self, k: int) -> "_Row":
        """The simplicial set ``Y_{k,-}`` (vertical direction)."""
        return _Row(self, k)

    def column(self, l: int) -> "_Column":
        """The simplicial set ``Y_{-,l}`` (horizontal direction)."""
        return _Column(self, l)


class _Slice:
    def __init__(self, Y: BiSimplicialObject, fixed: int) -> None:
        self.Y, self.fixed = Y, fixed


class _Row(_Slice):
    def level(self, n: int) -> list:
        return self.Y.level2(self.fixed, n)

    def act(self, beta: OrdinalMap, y: Any) -> Any:
        return self.Y.act2(identity(self.fixed), beta, y)

    def face(self, i: int, y: Any, n: int) -> Any:
        return self.act(coface(n, i), y)


class _Column(_Slice):
    def level(self, n: int) -> list:
        return self.Y.level2(n, self.fixed)

    def act(self, beta: OrdinalMap, y: Any) -> Any:
        return self.Y.act2(beta, identity(self.fixed), y)

    def face(self, i: int, y: Any, n: int) -> Any:
        return self.act(coface(n, i), y)


class BiSSet(BiSimplicialObject):
    """A finite bisimplicial set presented by nondegenerate bicells.

    ``cells`` maps a bidegree ``(p, q)`` to its cell ids; ``hfaces[c]`` holds the
    ``p + 1`` horizontal faces (bidegree ``(p-1, q)``) and ``vfaces[c]`` the
    ``q + 1`` vertical faces (bidegree ``(p, q-1)``).
    """

    def __init__(
        self,
        cells: Mapping[tuple[int, int], Sequence[Hashable]],
        hfaces: Mapping[Hashable, Sequence[BiSimplex]],
        vfaces: Mapping[Hashable, Sequence[BiSimplex]],
        *,
        validate: bool = True,
    ) -> None:
        super().__init__()
        self.cells = {pq: tuple(cs) for pq, cs in sorted(cells.items()) if cs}
        self.hfaces = {c: tuple(fs) for c, fs in hfaces.items()}
        self.vfaces = {c: tuple(fs) for c, fs in vfaces.items()}
        self.bidegree: dict[Hashable, tuple[int, int]] = {}
        for pq, cs in self.cells.items():
            for c in cs:
                if c in self.bidegree:
                    raise ValidationError(f"duplicate bicell {c!r}")
                self.bidegree[c] = pq
        self._inj: dict = {}
        if validate:
            self.validate()

    def all_cells(self) -> list:
        """Cells ordered by total degree, then presentation order."""
        keyed = sorted(self.cells, key=lambda pq: (pq[0] + pq[1], pq))
        return [c for pq in keyed for c in self.cells[pq]]

    def cell(self, c: Hashable) -> BiSimplex:
        return binondeg(c, *self.bidegree[c])

    def _level2(self, k: int, l: int) -> list:
        out = []
        for (p, q), cs in self.cells.items():
            if p > k or q > l:
                continue
            for eh in surjections(k, p):
                for ev in surjections(l, q):
                    out.extend(BiSimplex(c, eh, ev) for c in cs)
        return out

    def act2(self, a1: OrdinalMap, a2: OrdinalMap, b: BiSimplex) -> BiSimplex:
        if a1.cod != b.hdeg.dom or a2.cod != b.vdeg.dom:
            raise ValueError(f"bidegree mismatch acting on {b!r}")
        d1, e1 = ez_factor(compose(b.hdeg, a1))
        d2, e2 = ez_factor(compose(b.vdeg, a2))
        base = self._apply_injection(b.cell, d1, d2)
        return BiSimplex(base.cell, compose(base.hdeg, e1), compose(base.vdeg, e2))

    def _apply_injection(self, c: Hashable, d1: OrdinalMap, d2: OrdinalMap) -> BiSimplex:
        if d1.dom == d1.cod and d2.dom == d2.cod:
            return binondeg(c, d1.dom, d2.dom)
        key = (c, d1.values, d2.values)
        hit = self._inj.get(key)
        if hit is not None:
            return hit
        if d1.dom != d1.cod:
            i = next(r for r in range(d1.cod + 1) if r not in d1.values)
            rest = OrdinalMap(d1.dom, d1.cod - 1, tuple(v if v < i else v - 1 for v in d1.values))
            out = self.act2(rest, d2, self.hfaces[c][i])
        else:
            j = next(r for r in range(d2.cod + 1) if r not in d2.values)
            rest = OrdinalMap(d2.dom, d2.cod - 1, tuple(v if v < j else v - 1 for v in d2.values))
            out = self.act2(d1, rest, self.vfaces[c][j])
        with self._lock:
            self._inj[key] = out
        return out

    def validate(self) -> None:
        for c, (p, q) in self.bidegree.items():
            hs, vs = self.hfaces.get(c, ()), self.vfaces.get(c, ())
            if len(hs) != (p + 1 if p > 0 else 0) or len(vs) != (q + 1 if q > 0 else 0):
                raise ValidationError(f"bicell {c!r} of bidegree {(p, q)} has wrong face count")
            for f, want in [(f, (p - 1, q)) for f in hs] + [(f, (p, q - 1)) for f in vs]:
                if f.cell not in self.bidegree:
                    raise ValidationError(f"face of {c!r} references unknown bicell {f.cell!r}")
                fp, fq = self.bidegree[f.cell]
                if (
                    f.bidegree != want
                    or (f.hdeg.cod, f.vdeg.cod) != (fp, fq)
                    or not (f.hdeg.is_surjective and f.vdeg.is_surjective)
                ):
                    raise ValidationError(f"face {f!r} of {c!r} is not in normal form")
        for c, (p, q) in self.bidegree.items():
            b = self.cell(c)
            for j in range(p + 1):
                for i in range(j):
                    if p >= 2 and self.hface(i, self.hface(j, b, p, q), p - 1, q) != self.hface(
                        j - 1, self.hface(i, b, p, q), p - 1, q
                    ):
                        raise ValidationError(f"horizontal identity fails on {c!r}")
            for j in range(q + 1):
                for i in range(j):
                    if q >= 2 and self.vface(i, self.vface(j, b, p, q), p, q - 1) != self.vface(
                        j - 1, self.vface(i, b, p, q), p, q - 1
                    ):
                        raise ValidationError(f"vertical identity fails on {c!r}")
            if p >= 1 and q >= 1:
                for i in range(p + 1):
                    for j in range(q + 1):
                        hv = self.hface(i, self.vface(j, b, p, q), p, q - 1)
                        vh = self.vface(j, self.hface(i, b, p, q), p - 1, q)
                        if hv != vh:
                            raise ValidationError(f"faces d^h_{i}, d^v_{j} do not commute on {c!r}")

    def __repr__(self) -> str:
        counts = ", ".join(f"{len(cs)}@{pq}" for pq, cs in self.cells.items())
        return f"BiSSet({counts})"


class BiSMap:
    """A bisimplicial map out of a cell-presented ``BiSSet``."""

    def __init__(self, source: BiSSet, target: BiSimplicialObject, assignment: Mapping[Hashable, Any]):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)

    def __call__(self, b: BiSimplex) -> Any:
        return self.target.act2(b.hdeg, b.vdeg, self.assignment[b.cell])

    def key(self) -> tuple:
        return tuple(self.assignment[c] for c in self.source.all_cells())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiSMap) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def check(self) -> CheckResult:
        T = self.target
        for c, (p, q) in self.source.bidegree.items():
            y = self.assignment[c]
            for i, f in enumerate(self.source.hfaces.get(c, ())):
                if self(f) != T.hface(i, y, p, q):
                    return CheckResult.fail(cell=c, hface=i)
            for j, f in enumerate(self.source.vfaces.get(c, ())):
                if self(f) != T.vface(j, y, p, q):
                    return CheckResult.fail(cell=c, vface=j)
        return CheckResult(True)


def hom_bisset(A: BiSSet, Y: BiSimplicialObject, *, limit: int | None = None) -> list[BiSMap]:
    """All bisimplicial maps ``A -> Y``."""
    order = A.all_cells()

    def candidates(c, partial):
        p, q = A.bidegree[c]
        if p == 0 and q == 0:
            return Y.level2(0, 0)
        h = tuple(Y.act2(f.hdeg, f.vdeg, partial[f.cell]) for f in A.hfaces.get(c, ()))
        v = tuple(Y.act2(f.hdeg, f.vdeg, partial[f.cell]) for f in A.vfaces.get(c, ()))
        return Y.faces_index(p, q).get((h, v), ())

    def faces_of(c):
        return [f.cell for f in A.hfaces.get(c, ())] + [f.cell for f in A.vfaces.get(c, ())]

    def rank(c, y):
        return Y.index2(*A.bidegree[c])[y]

    found = backtrack(order, candidates, faces_of=faces_of, rank=rank, limit=limit)
    return [BiSMap(A, Y, a) for a in found]


def external_product(X: SSet, Z: SSet) -> BiSSet:
    """``X ⊠ Z`` with ``(X ⊠ Z)_{k,l} = X_k × Z_l``."""
    cells: dict[tuple[int, int], list] = {}
    hfaces, vfaces = {}, {}
    for p, xs in X.cells.items():
        for q, zs in Z.cells.items():
            for x in xs:
                for z in zs:
                    c = (x, z)
                    cells.setdefault((p, q), []).append(c)
                    hfaces[c] = [
                        BiSimplex((f.cell, z), f.deg, identity(q)) for f in X.faces.get(x, ())
                    ]
                    vfaces[c] = [
                        BiSimplex((x, f.cell), identity(p), f.deg) for f in Z.faces.get(z, ())
                    ]
    return BiSSet(cells, hfaces, vfaces)
