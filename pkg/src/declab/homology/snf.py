"""Smith normal form with a compiled kernel and a pure-Python fallback.

The backend is chosen once at import: the compiled ``_snf_c`` module when it
was built and ``DECLAB_PURE`` is unset, otherwise ``_snf_py``.  The compiled
kernel works on int64 and raises on overflow, in which case the call is rerun
on Python integers.  Every result is checked before it is returned.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from . import _snf_py
from .matrix import MatrixZ

log = logging.getLogger(__name__)

try:
    if os.environ.get("DECLAB_PURE"):
        raise ImportError("pure backend forced by DECLAB_PURE")
    from . import _snf_c  # type: ignore[attr-defined]
except ImportError:
    _snf_c = None

BACKEND = "compiled" if _snf_c is not None else "python"


class SNFError(ArithmeticError):
    """The reduction produced transforms that fail verification (a bug witness)."""


@dataclass(frozen=True)
class SNF:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and inverses kept."""

    U: MatrixZ
    D: MatrixZ
    V: MatrixZ
    Uinv: MatrixZ
    Vinv: MatrixZ
    backend: str

    @property
    def invariants(self) -> list[int]:
        """Nonzero diagonal entries, each dividing the next."""
        return [d for d in self.D.diagonal() if d]

    @property
    def rank(self) -> int:
        return len(self.invariants)


def _run(m: int, n: int, flat: list[int], backend: str) -> tuple[tuple, str]:
    if backend == "compiled":
        if _snf_c is None:
            raise RuntimeError("compiled SNF kernel is not available")
        try:
            return _snf_c.smith(m, n, flat), "compiled"
        except OverflowError:
            log.info("int64 overflow in compiled SNF on %dx%d; retrying with big integers", m, n)
    return _snf_py.smith(m, n, list(flat)), "python"


def snf(M: MatrixZ, *, backend: str | None = None, check: bool = True) -> SNF:
    """Smith normal form of ``M`` with both transforms and their inverses.

    ``backend`` overrides the import-time choice (``"compiled"`` or ``"python"``).
    With ``check`` the identities ``U M V = D``, ``U Uinv = I`` and
    ``V Vinv = I`` are verified; the latter two force ``det U, det V = ±1``.
    """
    m, n = M.shape
    (a, u, ui, v, vi), used = _run(m, n, M.flat(), backend or BACKEND)
    res = SNF(
        MatrixZ.from_flat(m, m, u),
        MatrixZ.from_flat(m, n, a),
        MatrixZ.from_flat(n, n, v),
        MatrixZ.from_flat(m, m, ui),
        MatrixZ.from_flat(n, n, vi),
        used,
    )
    if check:
        verify_snf(M, res)
    return res


def verify_snf(M: MatrixZ, res: SNF) -> None:
    D = res.D
    if not D.is_diagonal():
        raise SNFError("reduced matrix is not diagonal")
    diag = D.diagonal()
    nz = [d for d in diag if d]
    if any(d < 0 for d in diag) or diag[: len(nz)] != nz:
        raise SNFError(f"diagonal {diag} is not nonnegative with zeros last")
    if any(b % a for a, b in zip(nz, nz[1:])):
        raise SNFError(f"diagonal {nz} violates the divisibility chain")
    if res.U @ M @ res.V != D:
        raise SNFError("U M V != D")
    if not (res.U @ res.Uinv).is_identity() or not (res.V @ res.Vinv).is_identity():
        raise SNFError("transform is not unimodular")


def available_backends() -> list[str]:
    return ["compiled", "python"] if _snf_c is not None else ["python"]
