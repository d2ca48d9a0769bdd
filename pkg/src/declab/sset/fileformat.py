"""Text format ``SSET v1`` for cell-presented simplicial sets.

::

    SSET v1
    cell [0,1] dim 1
    face 0 = (0) [1]
    face 1 = (0) [0]

Each ``face`` line gives the degeneracy values and target cell of one face of
the most recent ``cell``.  Cell ids are whitespace-free tokens.
"""

from __future__ import annotations

import re

from ..ordinal import OrdinalMap
from .core import Simplex, SSet, ValidationError

HEADER = "SSET v1"

_CELL = re.compile(r"cell (\S+) dim (\d+)$")
_FACE = re.compile(r"face (\d+) = \(([\d ]*)\) (\S+)$")


class FormatError(ValueError):
    pass


def print_sset(X: SSet) -> str:
    lines = [HEADER]
    for n, cs in X.cells.items():
        for c in cs:
            name = str(c)
            if not name or any(ch.isspace() for ch in name):
                raise FormatError(f"cell id {c!r} cannot be written")
            lines.append(f"cell {name} dim {n}")
            for i, f in enumerate(X.faces.get(c, ())):
                vals = " ".join(str(v) for v in f.deg.values)
                lines.append(f"face {i} = ({vals}) {f.cell}")
    return "\n".join(lines) + "\n"


def parse_sset(text: str) -> SSet:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != HEADER:
        raise FormatError(f"missing '{HEADER}' header")
    cells: dict[int, list[str]] = {}
    pending: dict[str, list[tuple[int, tuple[int, ...], str]]] = {}
    dims: dict[str, int] = {}
    current: str | None = None
    for lineno, ln in enumerate(lines[1:], start=2):
        if m := _CELL.match(ln):
            current, n = m.group(1), int(m.group(2))
            cells.setdefault(n, []).append(current)
            dims[current] = n
            pending[current] = []
        elif m := _FACE.match(ln):
            if current is None:
                raise FormatError(f"line {lineno}: face before any cell")
            vals = tuple(int(v) for v in m.group(2).split())
            pending[current].append((int(m.group(1)), vals, m.group(3)))
        else:
            raise FormatError(f"line {lineno}: cannot parse {ln!r}")
    faces: dict[str, list[Simplex]] = {}
    for c, fs in pending.items():
        if not fs:
            continue
        if [i for i, _, _ in fs] != list(range(len(fs))):
            raise FormatError(f"faces of {c} must be listed in order 0..n")
        out = []
        for _, vals, tgt in fs:
            if tgt not in dims:
                raise ValidationError(f"face of {c} references unknown cell {tgt}")
            out.append(Simplex(tgt, OrdinalMap(len(vals) - 1, dims[tgt], vals)))
        faces[c] = out
    return SSet(cells, faces)
