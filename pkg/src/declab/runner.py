"""Named checks over a space expression, and the report entries they produce."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .dsl import parse_space_canonical
from .homology import unit_homology, verify_retraction
from .kan import adjunction_check, check_pi0_identification, dec, dec_simplex, two_route_agreement, verify_comparison, verify_counit
from .ordinal import verify_split_uniqueness
from .results import CheckResult, CutoffExceeded, to_jsonable
from .sset import boundary, external_product, simplex, verify_split_fork

DEFAULT_LEVELS = 4
DEFAULT_DEGREE = 2
DEFAULT_MAX_MAPS = 200_000


def adjunction_sources() -> list[tuple[str, Any]]:
    """Small bisimplicial sets used as ``Y`` in the adjunction check."""
    s0, s1 = simplex(0), simplex(1)
    return [
        ("DecΔ[0]", dec_simplex(0)),
        ("DecΔ[1]", dec_simplex(1)),
        ("DecΔ[2]", dec_simplex(2)),
        ("Δ[1]⊠Δ[0]", external_product(s1, s0)),
        ("Δ[0]⊠Δ[1]", external_product(s0, s1)),
        ("∂Δ[1]⊠Δ[0]", external_product(boundary(1), s0)),
        ("Δ[1]⊠Δ[1]", external_product(s1, s1)),
    ]


def _all(results) -> CheckResult:
    """First failure among ``(label, CheckResult)`` pairs, else a pass."""
    count = 0
    for label, res in results:
        count += 1
        if not res:
            witness = dict(res.witness or {})
            witness["case"] = label
            return CheckResult(False, witness, res.stats)
    return CheckResult(True, stats={"cases": count})


def _split_fork(X, levels, degree, limit):
    return _all(((f"k={k},i={i}", verify_split_fork(X, k, i)) for k in range(2, max(levels, 2) + 1) for i in range(k)))


def _pi0(X, levels, degree, limit):
    return _all(((f"k={k}", check_pi0_identification(X, k, levels)) for k in range(levels + 1)))


def _adjunction(X, levels, degree, limit):
    return _all(((name, adjunction_check(Y, X, limit=limit)) for name, Y in adjunction_sources()))


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "split-uniqueness": lambda X, levels, degree, limit: verify_split_uniqueness(levels),
    "split-fork": _split_fork,
    "pi0-ident": _pi0,
    "two-route-sigma": lambda X, levels, degree, limit: two_route_agreement(dec(X), levels),
    "counit": lambda X, levels, degree, limit: verify_counit(X, levels),
    "comparison": lambda X, levels, degree, limit: verify_comparison(X, levels, limit=limit),
    "unit-homology": lambda X, levels, degree, limit: unit_homology(X, degree, limit=limit),
    "retraction": lambda X, levels, degree, limit: verify_retraction(X, levels, limit=limit),
    "adjunction": _adjunction,
}


@dataclass
class Entry:
    """One report line; ``seconds`` is kept out of the JSON form."""

    check: str
    object: str
    levels: int
    degree: int
    status: str
    witness: dict | None = None
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "check": self.check,
            "object": self.object,
            "cutoff": {"levels": self.levels, "degree": self.degree},
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = to_jsonable(self.witness)
        if self.stats:
            out["stats"] = to_jsonable(self.stats)
        return out


def run(
    name: str,
    expr: str,
    *,
    levels: int = DEFAULT_LEVELS,
    degree: int = DEFAULT_DEGREE,
    max_maps: int | None = DEFAULT_MAX_MAPS,
) -> Entry:
    """Run one named check on the space denoted by ``expr``.

    Exceeding ``max_maps`` during an enumeration gives status
    ``inconclusive`` rather than a verdict.
    """
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    if levels < 0 or degree < 0:
        raise ValueError("cutoffs must be non-negative")
    X, canon = parse_space_canonical(expr)
    start = time.perf_counter()
    try:
        res = CHECKS[name](X, levels, degree, max_maps)
    except CutoffExceeded as exc:
        entry = Entry(name, canon, levels, degree, "inconclusive", {"cutoff": str(exc)})
    else:
        entry = Entry(name, canon, levels, degree, "pass" if res else "fail", res.witness, res.stats)
    entry.seconds = time.perf_counter() - start
    return entry


def exit_code(statuses) -> int:
    """0 when everything passed, 1 on any failure, else 2 for inconclusive results."""
    statuses = list(statuses)
    if "fail" in statuses:
        return 1
    if "inconclusive" in statuses:
        return 2
    return 0
