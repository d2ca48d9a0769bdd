"""Simplicial sets presented by nondegenerate cells, plus level-queryable ones.

Every simplex of a cell-presented :class:`SSet` is stored in Eilenberg-Zilber
normal form as a :class:`Simplex` ``(cell, deg)`` where ``deg`` is a monotone
surjection ``[n] -> [dim cell]``.  Objects whose levels are only available on
demand (cotensors, total simplicial sets, left Kan extensions) implement the
:class:`SimplicialObject` protocol directly.
"""

from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterable, Mapping, Sequence
from typing import Any, NamedTuple

from ..ordinal import (
    OrdinalMap,
    codegeneracy,
    coface,
    compose,
    ez_factor,
    identity,
    surjections,
)
from ..results import CheckResult, CutoffExceeded


class ValidationError(ValueError):
    """A presentation violates the simplicial identities or references bad cells."""


class Simplex(NamedTuple):
    cell: Hashable
    deg: OrdinalMap

    @property
    def dim(self) -> int:
        return self.deg.dom

    @property
    def is_nondegenerate(self) -> bool:
        return self.deg.dom == self.deg.cod


def nondeg(cell: Hashable, n: int) -> Simplex:
    return Simplex(cell, identity(n))


class SimplicialObject(ABC):
    """A simplicial set queried level by level.

    Subclasses provide ``level``, ``act`` and ``dim``; everything else is derived.
    Levels are memoized under a lock so concurrent readers see a single value.
    """

    def __init__(self) -> None:
        self._memo: dict[Any, Any] = {}
        self._lock = threading.RLock()

    def _cached(self, key: Any, compute):
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    @abstractmethod
    def _level(self, n: int) -> list: ...

    @abstractmethod
    def act(self, beta: OrdinalMap, x: Any) -> Any:
        """Structure map ``X_k -> X_l`` of ``beta: [l] -> [k]`` applied to ``x``."""

    @abstractmethod
    def dim(self, x: Any) -> int: ...

    def level(self, n: int) -> list:
        if n < 0:
            raise ValueError("levels start at 0")
        return self._cached(("level", n), lambda: self._level(n))

    def index(self, n: int) -> dict:
        """Position of each element in ``level(n)``."""
        return self._cached(("index", n), lambda: {x: i for i, x in enumerate(self.level(n))})

    def face(self, i: int, x: Any) -> Any:
        return self.act(coface(self.dim(x), i), x)

    def degeneracy(self, i: int, x: Any) -> Any:
        return self.act(codegeneracy(self.dim(x), i), x)

    def degenerate_set(self, n: int) -> frozenset:
        def compute():
            if n == 0:
                return frozenset()
            return frozenset(
                self.act(codegeneracy(n - 1, i), y) for y in self.level(n - 1) for i in range(n)
            )

        return self._cached(("degenerate", n), compute)

    def nondegenerate(self, n: int) -> list:
        def compute():
            degen = self.degenerate_set(n)
            return [x for x in self.level(n) if x not in degen]

        return self._cached(("nondegenerate", n), compute)

    def is_degenerate(self, x: Any) -> bool:
        return x in self.degenerate_set(self.dim(x))

    def face_key(self, x: Any) -> tuple:
        n = self.dim(x)
        if n == 0:
            return ()
        return tuple(self.act(coface(n, i), x) for i in range(n + 1))

    def faces_index(self, n: int) -> dict[tuple, list]:
        """Group ``level(n)`` by the tuple of faces, for hom enumeration."""

        def compute():
            out: dict[tuple, list] = {}
            for x in self.level(n):
                out.setdefault(self.face_key(x), []).append(x)
            return out

        return self._cached(("faces_index", n), compute)


class SSet(SimplicialObject):
    """A finite simplicial set presented by its nondegenerate cells.

    ``cells`` maps each dimension to an ordered list of cell ids; ``faces`` maps
    every cell of dimension ``n >= 1`` to its ``n + 1`` faces as :class:`Simplex`
    values of dimension ``n - 1``.
    """

    def __init__(
        self,
        cells: Mapping[int, Sequence[Hashable]],
        faces: Mapping[Hashable, Sequence[Simplex]],
        *,
        validate: bool = True,
    ) -> None:
        super().__init__()
        self.cells: dict[int, tuple] = {n: tuple(cs) for n, cs in sorted(cells.items()) if cs}
        self.faces: dict[Hashable, tuple[Simplex, ...]] = {c: tuple(fs) for c, fs in faces.items()}
        self.cell_dim: dict[Hashable, int] = {}
        for n, cs in self.cells.items():
            for c in cs:
                if c in self.cell_dim:
                    raise ValidationError(f"duplicate cell id {c!r}")
                self.cell_dim[c] = n
        self._inj: dict[tuple, Simplex] = {}
        self._acts: dict[tuple, Simplex] = {}
        if validate:
            self.validate()

    @property
    def dimension(self) -> int:
        return max(self.cells, default=-1)

    def cells_of(self, n: int) -> tuple:
        return self.cells.get(n, ())

    def all_cells(self) -> list:
        return [c for n in sorted(self.cells) for c in self.cells[n]]

    def dim(self, x: Simplex) -> int:
        return x.deg.dom

    def cell(self, c: Hashable) -> Simplex:
        return nondeg(c, self.cell_dim[c])

    def _level(self, n: int) -> list:
        out = []
        for m in range(min(n, self.dimension) + 1):
            cs = self.cells_of(m)
            if not cs:
                continue
            for eta in surjections(n, m):
                for c in cs:
                    out.append(Simplex(c, eta))
        return out

    def nondegenerate(self, n: int) -> list:
        return [nondeg(c, n) for c in self.cells_of(n)]

    def is_degenerate(self, x: Simplex) -> bool:
        return not x.is_nondegenerate

    def act(self, beta: OrdinalMap, s: Simplex) -> Simplex:
        key = (beta, s)
        hit = self._acts.get(key)
        if hit is not None:
            return hit
        if beta.cod != s.deg.dom:
            raise ValueError(f"cannot act by {beta!r} on a {s.deg.dom}-simplex")
        delta, eta = ez_factor(compose(s.deg, beta))
        out = self._apply_injection(s.cell, delta)
        if not eta.is_identity:
            out = Simplex(out.cell, compose(out.deg, eta))
        self._acts[key] = out
        return out

    def _apply_injection(self, c: Hashable, delta: OrdinalMap) -> Simplex:
        if delta.dom == delta.cod:
            return nondeg(c, delta.dom)
        key = (c, delta.values)
        hit = self._inj.get(key)
        if hit is not None:
            return hit
        # peel off the first coface not hit by delta: delta = d^i . rest
        vals = delta.values
        i = next(r for r in range(delta.cod + 1) if r not in vals)
        rest = OrdinalMap(delta.dom, delta.cod - 1, tuple(v if v < i else v - 1 for v in vals))
        out = self.act(rest, self.faces[c][i])
        with self._lock:
            self._inj[key] = out
        return out

    def validate(self) -> None:
        for c, n in self.cell_dim.items():
            fs = self.faces.get(c, ())
            if n == 0:
                if fs:
                    raise ValidationError(f"vertex {c!r} has faces")
                continue
            if len(fs) != n + 1:
                raise ValidationError(f"cell {c!r} of dim {n} needs {n + 1} faces, has {len(fs)}")
            for f in fs:
                if f.cell not in self.cell_dim:
                    raise ValidationError(f"face of {c!r} references unknown cell {f.cell!r}")
                if f.deg.dom != n - 1 or f.deg.cod != self.cell_dim[f.cell] or not f.deg.is_surjective:
                    raise ValidationError(f"face {f!r} of {c!r} is not a normal-form {n - 1}-simplex")
        for c, n in self.cell_dim.items():
            if n < 2:
                continue
            s = self.cell(c)
            for j in range(n + 1):
                for i in range(j):
                    lhs = self.face(i, self.face(j, s))
                    rhs = self.face(j - 1, self.face(i, s))
                    if lhs != rhs:
                        raise ValidationError(
                            f"simplicial identity d{i}d{j} = d{j - 1}d{i} fails on {c!r}: {lhs} != {rhs}"
                        )

    def structurally_equal(self, other: "SSet") -> bool:
        return self.cells == other.cells and self.faces == other.faces

    def __repr__(self) -> str:
        counts = ", ".join(f"{len(cs)}@{n}" for n, cs in self.cells.items())
        return f"{type(self).__name__}({counts})"


class SMap:
    """A simplicial map out of a cell-presented ``SSet``, given on nondegenerate cells."""

    def __init__(self, source: SSet, target: SimplicialObject, assignment: Mapping[Hashable, Any]):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)

    def __call__(self, x: Simplex) -> Any:
        return self.target.act(x.deg, self.assignment[x.cell])

    def key(self) -> tuple:
        return tuple(self.assignment[c] for c in self.source.all_cells())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SMap) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SMap({self.assignment})"

    def check(self) -> CheckResult:
        for c in self.source.all_cells():
            n = self.source.cell_dim[c]
            if self.target.dim(self.assignment[c]) != n:
                return CheckResult.fail(cell=c, reason="dimension mismatch")
            for i, f in enumerate(self.source.faces.get(c, ())):
                lhs = self(f)
                rhs = self.target.face(i, self.assignment[c])
                if lhs != rhs:
                    return CheckResult.fail(cell=c, face=i, lhs=lhs, rhs=rhs)
        return CheckResult(True)


def compose_maps(g: SMap, f: SMap) -> SMap:
    return SMap(f.source, g.target, {c: g(y) for c, y in f.assignment.items()})


def identity_map(X: SSet) -> SMap:
    return SMap(X, X, {c: X.cell(c) for c in X.all_cells()})


def closure_order(order: Sequence[Hashable], faces_of) -> list:
    """Reorder cells so each top cell follows its faces (faces-first DFS).

    Constraints then fire as soon as a cell's boundary is assigned, instead of
    after every vertex has been chosen.
    """
    seen: set = set()
    out: list = []

    def visit(c):
        if c in seen:
            return
        seen.add(c)
        for f in faces_of(c):
            visit(f)
        out.append(c)

    for c in reversed(order):
        visit(c)
    return out


def backtrack(
    order: Sequence[Hashable],
    candidates,
    *,
    faces_of=None,
    rank=None,
    limit: int | None = None,
) -> list[dict]:
    """Depth-first enumeration of assignments ``cell -> candidate``.

    ``candidates(cell, partial)`` returns the admissible images of ``cell`` given
    the assignment of all its faces.  When ``faces_of`` is given the search runs
    in closure order; solutions are then sorted back into lexicographic order
    along ``order`` using ``rank(cell, image)``.  ``limit`` caps the number of
    solutions.
    """
    search = closure_order(order, faces_of) if faces_of is not None else list(order)
    out: list[dict] = []
    partial: dict = {}

    def go(pos: int) -> None:
        if pos == len(search):
            if limit is not None and len(out) >= limit:
                raise CutoffExceeded(f"more than {limit} maps")
            out.append(dict(partial))
            return
        c = search[pos]
        for y in candidates(c, partial):
            partial[c] = y
            go(pos + 1)
        partial.pop(c, None)

    go(0)
    if faces_of is not None and rank is not None:
        out.sort(key=lambda a: tuple(rank(c, a[c]) for c in order))
    return out


def hom_sset(A: SSet, X: SimplicialObject, *, limit: int | None = None) -> list[SMap]:
    """All simplicial maps ``A -> X``, by dimension-increasing backtracking."""
    order = A.all_cells()

    def candidates(c, partial):
        n = A.cell_dim[c]
        if n == 0:
            return X.level(0)
        key = tuple(X.act(f.deg, partial[f.cell]) for f in A.faces[c])
        return X.faces_index(n).get(key, ())

    def rank(c, y):
        return X.index(A.cell_dim[c])[y]

    found = backtrack(
        order, candidates, faces_of=lambda c: [f.cell for f in A.faces.get(c, ())], rank=rank, limit=limit
    )
    return [SMap(A, X, a) for a in found]


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index wins so the root is the least element
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class FinSetQuot:
    """A quotient of a finite ordered set; each class is represented by its least element."""

    def __init__(self, elements: Sequence[Hashable], classes: Sequence[Sequence[Hashable]]):
        self.elements = list(elements)
        self.classes = [list(c) for c in classes]
        self._class_of = {x: k for k, cls in enumerate(self.classes) for x in cls}
        if len(self._class_of) != len(self.elements) or set(self._class_of) != set(self.elements):
            raise ValidationError("classes must partition the elements")

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, x: Hashable) -> int:
        return self._class_of[x]

    def rep(self, x: Hashable) -> Hashable:
        return self.classes[self._class_of[x]][0]

    @property
    def reps(self) -> list:
        return [c[0] for c in self.classes]


def coequalizer(elements: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]) -> FinSetQuot:
    """Quotient of ``elements`` by the equivalence relation generated by ``pairs``."""
    pos = {x: i for i, x in enumerate(elements)}
    uf = UnionFind(len(elements))
    for a, b in pairs:
        uf.union(pos[a], pos[b])
    buckets: dict[int, list] = {}
    for i, x in enumerate(elements):
        buckets.setdefault(uf.find(i), []).append(x)
    return FinSetQuot(elements, [buckets[r] for r in sorted(buckets)])


def pi0(X: SimplicialObject) -> FinSetQuot:
    """Connected components: coequalizer of ``d0, d1: X_1 -> X_0``."""
    return coequalizer(X.level(0), ((X.face(0, e), X.face(1, e)) for e in X.level(1)))


def pi0_map(f: SMap) -> list[int]:
    """Map on components induced by ``f``; raises if ``f`` does not respect them."""
    src, tgt = pi0(f.source), pi0(f.target)
    out: list[int | None] = [None] * len(src)
    for v in f.source.level(0):
        k, img = src.class_of(v), tgt.class_of(f(v))
        if out[k] is None:
            out[k] = img
        elif out[k] != img:
            raise ValidationError(f"map does not respect components at {v!r}")
    return out  # type: ignore[return-value]


def verify_split_fork(X: SimplicialObject, k: int, i: int) -> CheckResult:
    """Check that ``d_i, d_{i+1}: X_k => X_{k-1}`` followed by ``d_i`` is a split coequalizer."""
    if k < 2 or not 0 <= i <= k - 1:
        raise ValueError(f"need k >= 2 and 0 <= i <= k-1, got k={k}, i={i}")
    top, mid, low = X.level(k), X.level(k - 1), X.level(k - 2)
    a_map, b_map, e_map = coface(k, i), coface(k, i + 1), coface(k - 1, i)
    if i < k - 1:
        s_map, t_map = codegeneracy(k - 2, i), codegeneracy(k - 1, i + 1)
    else:
        s_map, t_map = codegeneracy(k - 2, k - 2), codegeneracy(k - 1, k - 2)

    def a(x):
        return X.act(a_map, x)

    def b(x):
        return X.act(b_map, x)

    def e(x):
        return X.act(e_map, x)

    for x in top:
        if e(a(x)) != e(b(x)):
            return CheckResult.fail(reason="not a fork", simplex=x)
    for z in low:
        if e(X.act(s_map, z)) != z:
            return CheckResult.fail(reason="e.s != id", simplex=z)
    # one of the parallel maps must split t, the other must satisfy the s.e equation
    ok_orders = []
    for first, second in ((a, b), (b, a)):
        if all(first(X.act(t_map, y)) == y and second(X.act(t_map, y)) == X.act(s_map, e(y)) for y in mid):
            ok_orders.append(True)
    if not ok_orders:
        return CheckResult.fail(reason="split equations fail", k=k, i=i)
    quot = coequalizer(mid, ((a(x), b(x)) for x in top))
    images = {}
    for cls in quot.classes:
        imgs = {e(y) for y in cls}
        if len(imgs) != 1:
            return CheckResult.fail(reason="e not constant on a class", cls=cls)
        images[imgs.pop()] = cls[0]
    if len(images) != len(quot) or set(images) != set(low):
        return CheckResult.fail(reason="quotient not bijective onto X_{k-2}", k=k, i=i)
    return CheckResult(True, stats={"classes": len(quot)})
