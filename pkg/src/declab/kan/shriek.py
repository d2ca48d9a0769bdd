"""Left Kan extensions along ``ι``, ``ι × ι``, the augmented ordinal sum and ``σ``.

Elements of ``σ_! Y`` (both routes) are triples ``(i, q, payload)`` living in
the ``i``-th summand of level ``i + 1 + q``.  For ``i = -1`` the payload is the
least representative in ``Y_{0,q}`` of a class of ``π_0(Y_{-,q})``; for
``q = -1`` it is the least representative in ``Y_{i,0}`` of a class of
``π_0(Y_{i,-})``; otherwise it is an element of ``Y_{i,q}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..ordinal import (
    OrdinalMap,
    all_generators,
    constant,
    coface,
    empty_map,
    identity,
    split_at,
)
from ..results import CheckResult
from ..sset.bisimplicial import BiSimplicialObject
from ..sset.builders import ProductSSet, simplex, tensor
from ..sset.core import FinSetQuot, SimplicialObject, coequalizer, pi0
from .dec import Dec, LevelMap, NatIso, dec


def _vertex(k: int) -> OrdinalMap:
    """A map ``[0] -> [k]``; every choice induces the same map onto ``π_0``."""
    return constant(0, k, 0)


def row_components(Y: BiSimplicialObject, k: int) -> FinSetQuot:
    """``π_0(Y_{k,-})``: classes of ``Y_{k,0}`` under the vertical faces."""

    def compute():
        vd0, vd1 = coface(1, 0), coface(1, 1)
        idk = identity(k)
        return coequalizer(
            Y.level2(k, 0), ((Y.act2(idk, vd0, y), Y.act2(idk, vd1, y)) for y in Y.level2(k, 1))
        )

    return Y._cached(("row_pi0", k), compute)


def column_components(Y: BiSimplicialObject, l: int) -> FinSetQuot:
    """``π_0(Y_{-,l})``: classes of ``Y_{0,l}`` under the horizontal faces."""

    def compute():
        hd0, hd1 = coface(1, 0), coface(1, 1)
        idl = identity(l)
        return coequalizer(
            Y.level2(0, l), ((Y.act2(hd0, idl, y), Y.act2(hd1, idl, y)) for y in Y.level2(1, l))
        )

    return Y._cached(("col_pi0", l), compute)


@dataclass
class ASSet:
    """An augmented simplicial set: ``body`` plus ``X_0 -> X_{-1}`` coequalizing the faces."""

    body: SimplicialObject
    carrier: list
    augmentation: dict

    def check(self) -> CheckResult:
        for e in self.body.level(1):
            a, b = self.augmentation[self.body.face(0, e)], self.augmentation[self.body.face(1, e)]
            if a != b:
                return CheckResult.fail(reason="augmentation does not coequalize d0, d1", edge=e)
        if set(self.augmentation.values()) - set(self.carrier):
            return CheckResult.fail(reason="augmentation leaves the carrier")
        return CheckResult(True)


def iota_shriek(X: SimplicialObject) -> ASSet:
    """Extend ``X`` to ``Δ_a`` by ``X_{-1} = π_0(X)`` with the quotient map."""
    comps = pi0(X)
    return ASSet(X, comps.reps, {x: comps.rep(x) for x in X.level(0)})


class _RowAsSSet(SimplicialObject):
    """The simplicial set ``[p] -> π_0(Y_{p,-})``, used for the two-stage corner."""

    def __init__(self, Y: BiSimplicialObject) -> None:
        super().__init__()
        self.Y = Y

    def _level(self, n: int) -> list:
        return [(n, r) for r in row_components(self.Y, n).reps]

    def act(self, beta: OrdinalMap, x: Any) -> Any:
        n, r = x
        y = self.Y.act2(beta, identity(0), r)
        return beta.dom, row_components(self.Y, beta.dom).rep(y)

    def dim(self, x: Any) -> int:
        return x[0]


class ABiSSet:
    """``(ι × ι)_! Y``: a presheaf on ``Δ_a × Δ_a`` extending ``Y``.

    Row and column edges are ``π_0`` of rows and columns of ``Y``; the corner is
    ``π_0`` of the simplicial set of row components (two one-sided extensions).
    """

    def __init__(self, Y: BiSimplicialObject) -> None:
        self.Y = Y
        self._rows = _RowAsSSet(Y)
        self._corner: FinSetQuot | None = None

    def corner(self) -> FinSetQuot:
        if self._corner is None:
            stage = iota_shriek(self._rows)
            first = row_components(self.Y, 0)
            classes: dict[Any, list] = {}
            for y in self.Y.level2(0, 0):
                classes.setdefault(stage.augmentation[(0, first.rep(y))], []).append(y)
            order = [(0, r) for r in first.reps]
            keys = sorted(classes, key=lambda c: order.index(c))
            self._corner = FinSetQuot(self.Y.level2(0, 0), [classes[c] for c in keys])
        return self._corner

    def canonical(self, i: int, q: int, y: Any) -> Any:
        if i >= 0 and q >= 0:
            return y
        if i >= 0:
            return row_components(self.Y, i).rep(y)
        if q >= 0:
            return column_components(self.Y, q).rep(y)
        return self.corner().rep(y)

    def level(self, i: int, q: int) -> list:
        if i >= 0 and q >= 0:
            return self.Y.level2(i, q)
        if i >= 0:
            return row_components(self.Y, i).reps
        if q >= 0:
            return column_components(self.Y, q).reps
        return self.corner().reps

    def act(self, a1: OrdinalMap, a2: OrdinalMap, x: Any) -> Any:
        """Structure map of ``(a1, a2)`` in ``Δ_a × Δ_a`` on ``x`` in ``A_{a1.cod, a2.cod}``.

        A map out of ``[-1]`` factors through ``[-1] -> [0]``, so it acts by a
        vertex map followed by the quotient onto components.
        """
        b1 = a1 if a1.dom >= 0 else (_vertex(a1.cod) if a1.cod >= 0 else identity(0))
        b2 = a2 if a2.dom >= 0 else (_vertex(a2.cod) if a2.cod >= 0 else identity(0))
        return self.canonical(a1.dom, a2.dom, self.Y.act2(b1, b2, x))

    def check(self, cutoff: int) -> CheckResult:
        """Each augmentation coequalizes its adjacent faces; both corner composites agree."""
        e0, e_1, i_1 = empty_map(0), identity(-1), identity(0)
        d0, d1 = coface(1, 0), coface(1, 1)
        for p in range(-1, cutoff + 1):
            ip = identity(p)
            for y in self.level(p, 1):
                if self.act(ip, e0, self.act(ip, d0, y)) != self.act(ip, e0, self.act(ip, d1, y)):
                    return CheckResult.fail(reason="row augmentation", p=p)
            for y in self.level(1, p):
                if self.act(e0, ip, self.act(d0, ip, y)) != self.act(e0, ip, self.act(d1, ip, y)):
                    return CheckResult.fail(reason="column augmentation", q=p)
        for y in self.level(0, 0):
            direct = self.act(e0, e0, y)
            via_row = self.act(e_1, e0, self.act(e0, i_1, y))
            via_col = self.act(e0, e_1, self.act(i_1, e0, y))
            if not direct == via_row == via_col:
                return CheckResult.fail(reason="corner composites differ", y=y)
        return CheckResult(True)


def iota2_shriek(Y: BiSimplicialObject) -> ABiSSet:
    return ABiSSet(Y)


class SigmaAShriek(SimplicialObject):
    """``(σ_a)_! A`` with level ``k`` the tagged sum of ``A_{i,k-i-1}``, ``-1 <= i <= k``.

    As a :class:`SimplicialObject` it is the restriction along ``ι``; the
    augmentation level is available through :meth:`level_a`.
    """

    def __init__(self, A: ABiSSet) -> None:
        super().__init__()
        self.A = A

    def level_a(self, k: int) -> list:
        if k >= 0:
            return self.level(k)
        return [(-1, -1, a) for a in self.A.level(-1, -1)]

    def _level(self, k: int) -> list:
        return [(i, k - i - 1, a) for i in range(-1, k + 1) for a in self.A.level(i, k - i - 1)]

    def act(self, beta: OrdinalMap, x: Any) -> Any:
        i, q, a = x
        j, b1, b2 = split_at(beta, i)
        return j, beta.dom - j - 1, self.A.act(b1, b2, a)

    def dim(self, x: Any) -> int:
        return x[0] + 1 + x[1]

    def augmented(self) -> ASSet:
        e0 = empty_map(0)
        return ASSet(self, self.level_a(-1), {x: self.act(e0, x) for x in self.level(0)})


def sigma_a_shriek(A: ABiSSet) -> SigmaAShriek:
    return SigmaAShriek(A)


def sigma_shriek_composite(Y: BiSimplicialObject) -> SigmaAShriek:
    """``ι^* (σ_a)_! (ι × ι)_! Y``."""
    return SigmaAShriek(iota2_shriek(Y))


class SigmaShriek(SimplicialObject):
    """``σ_! Y`` by the explicit three-part formula and its case-by-case structure maps."""

    def __init__(self, Y: BiSimplicialObject) -> None:
        super().__init__()
        self.Y = Y

    def _level(self, k: int) -> list:
        Y = self.Y
        out = [(-1, k, r) for r in column_components(Y, k).reps]
        for i in range(k):
            out.extend((i, k - i - 1, y) for y in Y.level2(i, k - i - 1))
        out.extend((k, -1, r) for r in row_components(Y, k).reps)
        return out

    def dim(self, x: Any) -> int:
        return x[0] + 1 + x[1]

    def act(self, beta: OrdinalMap, x: Any) -> Any:
        Y = self.Y
        i, q, y = x
        k, l = i + 1 + q, beta.dom
        if beta.cod != k:
            raise ValueError(f"cannot act by {beta!r} on level {k}")
        if i == -1:
            return -1, l, column_components(Y, l).rep(Y.act2(identity(0), beta, y))
        if q == -1:
            return l, -1, row_components(Y, l).rep(Y.act2(beta, identity(0), y))
        j, b1, b2 = split_at(beta, i)
        if j == -1:
            z = Y.act2(_vertex(i), b2, y)
            return -1, l, column_components(Y, l).rep(z)
        if j == l:
            z = Y.act2(b1, _vertex(k - i - 1), y)
            return l, -1, row_components(Y, l).rep(z)
        return j, l - j - 1, Y.act2(b1, b2, y)


def sigma_shriek(Y: BiSimplicialObject) -> SigmaShriek:
    return SigmaShriek(Y)


def two_route_agreement(Y: BiSimplicialObject, cutoff: int) -> CheckResult:
    """Both constructions of ``σ_! Y`` agree levelwise and on every generator up to ``cutoff``."""
    direct, composite = sigma_shriek(Y), sigma_shriek_composite(Y)
    aug = composite.A.check(cutoff)
    if not aug:
        return aug
    if not composite.augmented().check():
        return CheckResult.fail(reason="(σ_a)_! augmentation")
    for k in range(cutoff + 1):
        if direct.level(k) != composite.level(k):
            return CheckResult.fail(reason="levels differ", level=k)
    same = LevelMap(direct, composite, lambda x: x, cutoff, "two-route")
    res = same.check_natural()
    if not res:
        return res
    return CheckResult(True, stats={"sizes": [len(direct.level(k)) for k in range(cutoff + 1)]})


def identification_maps(X: SimplicialObject):
    """``π_0((Dec X)_{-,k}) -> X_k`` via ``d_0`` and ``π_0((Dec X)_{k,-}) -> X_k`` via ``d_{k+1}``."""

    def from_column(y):
        return X.face(0, y)

    def from_row(y):
        return X.face(X.dim(y), y)

    return from_column, from_row


def check_pi0_identification(X: SimplicialObject, k: int, cutoff: int | None = None) -> CheckResult:
    """Both component sets of ``Dec X`` at ``k`` biject onto ``X_k``, naturally in ``k``."""
    D = dec(X)
    from_column, from_row = identification_maps(X)
    for comps, fn in ((column_components(D, k), from_column), (row_components(D, k), from_row)):
        images = []
        for cls in comps.classes:
            imgs = {fn(y) for y in cls}
            if len(imgs) != 1:
                return CheckResult.fail(reason="identification not constant on a class", k=k)
            images.append(imgs.pop())
        if len(set(images)) != len(images) or set(images) != set(X.level(k)):
            return CheckResult.fail(reason="not a bijection onto X_k", k=k)
    top = k if cutoff is None else cutoff
    for beta in all_generators(top):
        for y in D.level2(0, beta.cod):
            if from_column(D.act2(identity(0), beta, y)) != X.act(beta, from_column(y)):
                return CheckResult.fail(reason="column identification not natural", beta=beta)
        for y in D.level2(beta.cod, 0):
            if from_row(D.act2(beta, identity(0), y)) != X.act(beta, from_row(y)):
                return CheckResult.fail(reason="row identification not natural", beta=beta)
    return CheckResult(True)


def counit_sigma(X: SimplicialObject, cutoff: int) -> LevelMap:
    """Folding map ``σ_! Dec X -> X``; ``π_0`` summands go through the identification."""
    S = sigma_shriek(dec(X))
    from_column, from_row = identification_maps(X)

    def fold(e):
        i, q, y = e
        if i == -1:
            return from_column(y)
        if q == -1:
            return from_row(y)
        return y

    return LevelMap(S, X, fold, cutoff, "counit")


def path_index_map(k: int, i: int) -> OrdinalMap:
    """``f_i: [k] -> [1]`` sending ``r`` to 0 iff ``r <= i``."""
    return OrdinalMap(k, 1, tuple(0 if r <= i else 1 for r in range(k + 1)))


def counit_iso(X, cutoff: int) -> tuple[NatIso, ProductSSet]:
    """The isomorphism ``σ_! Dec X ≅ X × Δ[1]``: the ``i``-th copy of ``X_k`` goes to ``X_k × {f_i}``."""
    counit = counit_sigma(X, cutoff)
    P = tensor(X, simplex(1))
    interval = P.right

    def to_tensor(e):
        i, q, _ = e
        k = i + 1 + q
        return P.pair(counit(e), interval.simplex_of_map(path_index_map(k, i)))

    return NatIso(LevelMap(counit.source, P, to_tensor, cutoff, "counit-iso")), P


def verify_counit(X, cutoff: int) -> CheckResult:
    """Counit identification: natural bijection, the projection triangle, and level counts."""
    iso, P = counit_iso(X, cutoff)
    counit = counit_sigma(X, cutoff)
    counts = []
    for k in range(cutoff + 1):
        size = len(iso.map.source.level(k))
        counts.append(size)
        if size != (k + 2) * len(X.level(k)) or len(P.level(k)) != size:
            return CheckResult.fail(reason="level count", level=k, got=size, want=(k + 2) * len(X.level(k)))
    res = iso.verify()
    if not res:
        return res
    res = counit.check_natural()
    if not res:
        return res
    proj = P.projections()[0]
    for k in range(cutoff + 1):
        for e, pe in iso.bijection(k).items():
            if proj(pe) != counit(e):
                return CheckResult.fail(reason="projection triangle", level=k, element=e)
    return CheckResult(True, stats={"sizes": counts})


__all__ = [
    "ABiSSet",
    "ASSet",
    "Dec",
    "SigmaAShriek",
    "SigmaShriek",
    "check_pi0_identification",
    "column_components",
    "counit_iso",
    "counit_sigma",
    "iota2_shriek",
    "iota_shriek",
    "path_index_map",
    "row_components",
    "sigma_a_shriek",
    "sigma_shriek",
    "sigma_shriek_composite",
    "two_route_agreement",
    "verify_counit",
]
