"""Finite surrogates for the unit being a weak equivalence."""

from __future__ import annotations

from ..kan.dec import LevelMap, dec
from ..kan.total import Cotensor, Total, comparison, constant_path, path_space, unit
from ..ordinal import codegeneracy, coface, constant
from ..results import CheckResult
from ..sset.builders import simplex
from ..sset.core import Simplex, SimplicialObject
from .groups import induced


def _point_evaluation(C0: Cotensor, n: int):
    """``(X^{Δ[0]})_n -> X_n``: evaluate on the top simplex of ``Δ[n] × Δ[0]``."""
    P = C0.prism(n)
    top = P.pair(P.left.top, Simplex("[0]", constant(n, 0, 0)))
    return lambda x: C0.evaluate(x, top)


def verify_retraction(X: SimplicialObject, cutoff: int, *, limit: int | None = None) -> CheckResult:
    """``d_1 ∘ s_0 = id`` on ``X^{Δ[0]}`` through level ``cutoff``.

    ``d_1`` and ``s_0`` are induced on cotensors by ``d^1: Δ[0] -> Δ[1]`` and
    ``s^0: Δ[1] -> Δ[0]``.  Both are checked to be simplicial, and evaluation
    ``X^{Δ[0]} -> X`` to be bijective on each level.
    """
    p, i = simplex(0), simplex(1)
    C0, C1 = Cotensor(X, p, limit=limit), Cotensor(X, i, limit=limit)
    d1 = C1.precompose(C0, p.induced(i, coface(1, 1)))
    s0 = C0.precompose(C1, i.induced(p, codegeneracy(0, 0)))
    d1.cutoff = s0.cutoff = cutoff
    d1.name, s0.name = "d_1", "s_0"
    for m in (d1, s0):
        res = m.check_natural()
        if not res:
            return res
    sizes = []
    for n in range(cutoff + 1):
        level = C0.level(n)
        ev = _point_evaluation(C0, n)
        images = {ev(x) for x in level}
        if len(images) != len(level) or images != set(X.level(n)):
            return CheckResult.fail(reason="evaluation X^Δ[0] -> X is not bijective", level=n)
        for x in level:
            if d1(s0(x)) != x:
                return CheckResult.fail(reason="d_1 s_0 != id", level=n, x=x)
        sizes.append(len(level))
    return CheckResult(True, stats={"sizes": sizes})


def unit_homology(X: SimplicialObject, D: int, *, limit: int | None = None) -> CheckResult:
    """The unit ``X -> T Dec X`` induces isomorphisms on ``H_0 .. H_D``.

    Homology of ``T Dec X`` is read off ``X^{Δ[1]}`` through the comparison,
    which is first checked to be a simplicial bijection through level
    ``D + 1``.  The composite of unit and comparison must be the constant-path
    map, whose induced homology maps are then tested.
    """
    top = D + 1
    T, C = Total(dec(X), limit=limit), path_space(X, limit=limit)
    comp = LevelMap(T, C, comparison(X, T, C), top, "comparison")
    for res in (comp.check_bijective(), comp.check_natural()):
        if not res:
            return res
    composite = LevelMap(X, C, lambda x: comp(unit(X, X.dim(x))(x)), top, "comparison∘unit")
    for n in range(top + 1):
        const = constant_path(X, C, n)
        for x in X.level(n):
            if composite(x) != const(x):
                return CheckResult.fail(reason="unit does not match constant paths", level=n, x=x)
    res = composite.check_natural()
    if not res:
        return res
    ind = induced(composite, D)
    stats = {
        "source": [g.to_json(n) for n, g in enumerate(ind.source)],
        "target": [g.to_json(n) for n, g in enumerate(ind.target)],
    }
    if not ind.is_iso():
        return CheckResult(False, {"reason": "unit is not a homology isomorphism"}, stats)
    return CheckResult(True, stats=stats)
