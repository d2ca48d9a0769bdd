"""The acceptance matrix: eight exhaustive checks over a fixed corpus of spaces.

Shared by ``declab suite acceptance`` and the test suite.  Every comparison is
an exact equality; a criterion also fails if it overruns its time budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .dsl import parse_space
from .homology import AbGroup, unit_homology, verify_retraction
from .kan import (
    Total,
    adjunction_check,
    check_pi0_identification,
    dec,
    dec_simplex,
    two_route_agreement,
    verify_comparison,
    verify_counit,
)
from .ordinal import verify_split_uniqueness
from .runner import adjunction_sources
from .sset import boundary, external_product, hom_sset, simplex, verify_split_fork

CORPUS = (
    "simplex(0)",
    "simplex(1)",
    "simplex(2)",
    "boundary(2)",
    "boundary(3)",
    "horn(2,1)",
    "quotient(simplex(1),boundary(1))",
    "product(simplex(1),simplex(1))",
)

Z, O = AbGroup(1), AbGroup(0)
UNIT_HOMOLOGY = {
    "boundary(3)": (Z, O, Z),
    "quotient(simplex(1),boundary(1))": (Z, Z),
    "simplex(2)": (Z, O, O),
}


def corpus() -> list[tuple[str, object]]:
    return [(e, parse_space(e)) for e in CORPUS]


def _first_failure(cases) -> tuple[bool, str]:
    n = 0
    for label, res in cases:
        n += 1
        if not res:
            return False, f"{label}: {res.witness}"
    return True, f"{n} cases"


def c1() -> tuple[bool, str]:
    res = verify_split_uniqueness(5)
    return bool(res), f"{res.stats.get('pairs', 0)} (beta, i) pairs" if res else str(res.witness)


def c2() -> tuple[bool, str]:
    return _first_failure(
        (f"{e} k={k} i={i}", verify_split_fork(X, k, i)) for e, X in corpus() for k in range(2, 6) for i in range(k)
    )


def c3() -> tuple[bool, str]:
    return _first_failure((f"{e} k={k}", check_pi0_identification(X, k, 4)) for e, X in corpus() for k in range(5))


def c4() -> tuple[bool, str]:
    ys = [(f"dec({e})", dec(X)) for e, X in corpus()]
    ys += [("∂Δ[2]⊠Δ[1]", external_product(boundary(2), simplex(1))), ("Δ[1]⊠Δ[1]", external_product(simplex(1), simplex(1)))]
    return _first_failure((label, two_route_agreement(Y, 4)) for label, Y in ys)


def c5() -> tuple[bool, str]:
    return _first_failure((e, verify_counit(X, 4)) for e, X in corpus())


def c6() -> tuple[bool, str]:
    total0 = len(Total(dec_simplex(1)).level(0))
    homs = len(hom_sset(simplex(1), simplex(1)))
    if not total0 == homs == 3:
        return False, f"|total(dec Δ[1], 0)| = {total0}, |hom(Δ[1], Δ[1])| = {homs}, expected 3"
    ok, detail = _first_failure((e, verify_comparison(X, 3)) for e, X in corpus())
    return ok, f"{detail}; |total(dec Δ[1], 0)| = 3"


def c7() -> tuple[bool, str]:
    ok, detail = _first_failure((f"retraction {e}", verify_retraction(X, 2)) for e, X in corpus())
    if not ok:
        return ok, detail
    for e, want in UNIT_HOMOLOGY.items():
        res = unit_homology(parse_space(e), 2)
        if not res:
            return False, f"unit-homology {e}: {res.witness}"
        for side in ("source", "target"):
            got = tuple(AbGroup(g["rank"], tuple(g["torsion"])) for g in res.stats[side])
            if got[: len(want)] != want:
                return False, f"unit-homology {e} {side}: {[str(g) for g in got]}"
    return True, f"{detail}; homology isomorphisms on {len(UNIT_HOMOLOGY)} spaces"


def c8() -> tuple[bool, str]:
    pairs = []
    xs = [("simplex(0)", simplex(0)), ("simplex(1)", simplex(1)), ("boundary(2)", boundary(2))]
    for yname, Y in adjunction_sources():
        if len(Y.bidegree) > 20:
            continue
        for xname, X in xs:
            pairs.append((f"{yname} vs {xname}", adjunction_check(Y, X)))
    return _first_failure(pairs)


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    budget: float
    run: Callable[[], tuple[bool, str]]


CRITERIA = (
    Criterion(1, "splitting uniqueness", 1.0, c1),
    Criterion(2, "split forks", 5.0, c2),
    Criterion(3, "component identification", 5.0, c3),
    Criterion(4, "two constructions of the left adjoint agree", 10.0, c4),
    Criterion(5, "counit identification", 10.0, c5),
    Criterion(6, "comparison with the path space", 60.0, c6),
    Criterion(7, "weak-equivalence surrogate", 120.0, c7),
    Criterion(8, "adjunction bijection", 60.0, c8),
)


@dataclass(frozen=True)
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.title} ({self.seconds:.2f}s, budget {self.budget:g}s) {self.detail}"

    def to_json(self) -> dict:
        return {"number": self.number, "title": self.title, "status": self.status, "detail": self.detail}


def run_criterion(c: Criterion) -> Outcome:
    start = time.perf_counter()
    ok, detail = c.run()
    secs = time.perf_counter() - start
    if ok and secs >= c.budget:
        ok, detail = False, f"over time budget: {detail}"
    return Outcome(c.number, c.title, ok, detail, secs, c.budget)


def run_acceptance() -> list[Outcome]:
    return [run_criterion(c) for c in CRITERIA]


__all__ = ["CORPUS", "CRITERIA", "Criterion", "Outcome", "corpus", "run_acceptance", "run_criterion"]
