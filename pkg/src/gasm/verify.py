"""Alternation checks against a boundary spec, and spec inference."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import BorderedMatrix, BoundarySpec, SignMatrix

ROW = "row"
COLUMN = "column"


@dataclass(frozen=True)
class AlternationViolation:
    """Two consecutive nonzeros of equal sign in one line of the bordered matrix.

    ``index`` is the 1-based row/column; ``positions`` are bordered coordinates
    along that line (0 and ``len + 1`` are the border cells).
    """

    axis: str
    index: int
    positions: tuple[int, int]
    sign: int

    def __str__(self) -> str:
        a, b = self.positions
        s = "+" if self.sign > 0 else "-"
        return f"{self.axis} {self.index}: positions {a} and {b} are both {s}1"


class InteriorNotAlternating(ValueError):
    def __init__(self, violation: AlternationViolation):
        self.violation = violation
        super().__init__(f"matrix does not alternate: {violation}")


def _first_repeat(line: Sequence[int]) -> tuple[int, int, int] | None:
    prev_pos, prev = None, 0
    for pos, x in enumerate(line):
        if x == 0:
            continue
        if x == prev:
            return prev_pos, pos, x
        prev_pos, prev = pos, x
    return None


def verify(A: SignMatrix, spec: BoundarySpec) -> list[AlternationViolation]:
    """All lines (rows 1..m, columns 1..n) whose bordered sequence fails to
    alternate; one entry per failing line.  Empty means ``A`` is valid."""
    view = BorderedMatrix(A, spec)
    out = []
    for i in range(1, spec.m + 1):
        hit = _first_repeat(view.row_line(i))
        if hit:
            out.append(AlternationViolation(ROW, i, hit[:2], hit[2]))
    for j in range(1, spec.n + 1):
        hit = _first_repeat(view.col_line(j))
        if hit:
            out.append(AlternationViolation(COLUMN, j, hit[:2], hit[2]))
    return out


def is_valid(A: SignMatrix, spec: BoundarySpec) -> bool:
    return not verify(A, spec)


def interior_violations(A: SignMatrix) -> list[AlternationViolation]:
    """Alternation failures of ``A`` on its own; positions are 1-based."""
    out = []
    for i in range(A.m):
        hit = _first_repeat(A.row(i))
        if hit:
            out.append(AlternationViolation(ROW, i + 1, (hit[0] + 1, hit[1] + 1), hit[2]))
    for j in range(A.n):
        hit = _first_repeat(A.col(j))
        if hit:
            out.append(AlternationViolation(COLUMN, j + 1, (hit[0] + 1, hit[1] + 1), hit[2]))
    return out


def _ends(line: Sequence[int], zero_line_sign: int) -> tuple[int, int]:
    nz = [x for x in line if x]
    if not nz:
        return zero_line_sign, -zero_line_sign
    return -nz[0], -nz[-1]


def infer_spec(A: SignMatrix, zero_line_sign: int) -> BoundarySpec:
    """Borders that make an alternating ``A`` valid.

    Each border is the negation of the nearest nonzero in its line; an
    all-zero line gets ``zero_line_sign`` on the first border and its
    negation on the second.
    """
    if zero_line_sign not in (1, -1):
        raise ValueError("zero_line_sign must be +1 or -1")
    bad = interior_violations(A)
    if bad:
        raise InteriorNotAlternating(bad[0])
    cols = [_ends(A.col(j), zero_line_sign) for j in range(A.n)]
    rows = [_ends(A.row(i), zero_line_sign) for i in range(A.m)]
    return BoundarySpec(
        [c[0] for c in cols], [c[1] for c in cols], [r[0] for r in rows], [r[1] for r in rows]
    )
