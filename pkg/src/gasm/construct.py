"""Constructive existence: build a ``(u, u'|v, v')``-ASM for any feasible spec.

Each step picks a row ``q`` and fills it along an alternating run of matched
columns, then deletes the row and those columns and repeats on the smaller
instance.  Three kinds of step:

1. ``v_q = v'_q = +1``: run ``s0 < t1 < s1 < ... < tp < sp`` over +1-matched
   (``s``) and -1-matched (``t``) columns, ``p <= c+_n - r+_m``; ``-1`` goes on
   the ``s`` columns and ``+1`` on the ``t`` columns.
2. ``v_q = v'_q = -1``: the sign mirror image of step 1.
3. no matched rows left: normalise so that the first matched column is
   +1-matched, take ``q`` with ``v_q = +1, v'_q = -1`` and an even run
   ``s1 < t1 < ... < sp < tp`` starting at that column.

Runs are greedy (each index the first available one) and as long as the cap
allows; shortening them or skipping columns can leave an uncompletable
instance.  If ``r+_m > c+_n`` the instance is transposed first.

Every column receives at most one nonzero (every row, after a transpose).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import BoundarySpec, SignMatrix
from .feasibility import FeasibilityReport, check


class InfeasibleSpec(ValueError):
    def __init__(self, report: FeasibilityReport):
        self.report = report
        lines = "; ".join(str(v) for v in report.violated)
        super().__init__(f"no (u,u'|v,v')-ASM exists: {lines}")


class InternalContradiction(AssertionError):
    """The construction got stuck on a spec that passed the feasibility check."""


def _run(
    u: Sequence[int],
    u_prime: Sequence[int],
    start_sign: int,
    cap: int | None,
    even: bool,
) -> list[int]:
    # 0-based positions of the greedy alternating run.
    if even:
        first = next((j for j, (a, b) in enumerate(zip(u, u_prime)) if a == b), None)
        if first is None or u[first] != start_sign:
            return []
    seq: list[int] = []
    want = start_sign
    p = 0
    for j, (a, b) in enumerate(zip(u, u_prime)):
        if a != b or a != want:
            continue
        if want != start_sign:
            if cap is not None and p >= cap:
                break
            p += 1
        seq.append(j)
        want = -want
    # odd runs must end on an s column, even runs on a t column
    if len(seq) % 2 == (1 if even else 0) and seq:
        seq.pop()
    return seq


def longest_first_available_sequence(
    u: Sequence[int],
    u_prime: Sequence[int],
    start_sign: int,
    cap: int | None = None,
    require_start_at_first_matched: bool = False,
) -> list[int]:
    """1-based column indices of the greedy alternating run.

    ``s`` columns have ``u_j = u'_j = start_sign``; ``t`` columns the opposite
    sign.  By default the run has shape ``s0, t1, s1, ..., tp, sp`` with at
    most ``cap`` ``t`` columns.  With ``require_start_at_first_matched`` it has
    shape ``s1, t1, ..., sp, tp`` and ``s1`` must be the first matched column
    (otherwise the result is empty).  An empty list means no run exists.
    """
    if len(u) != len(u_prime):
        raise ValueError("u and u_prime must have equal length")
    if cap is not None and cap < 0:
        raise ValueError("cap must be nonnegative")
    return [j + 1 for j in _run(u, u_prime, start_sign, cap, require_start_at_first_matched)]


@dataclass(frozen=True)
class Step:
    """One row fill, in original 1-based coordinates.

    ``case`` and ``sequence`` refer to the working frame (after any transpose
    or negation listed in ``ConstructionTrace.transforms``): under a
    transpose ``row`` is an original column and ``sequence`` original rows.
    """

    case: int
    row: int
    sequence: tuple[int, ...]
    placed: tuple[tuple[int, int, int], ...]


@dataclass
class ConstructionTrace:
    steps: list[Step] = field(default_factory=list)
    transforms: list[str] = field(default_factory=list)

    @property
    def transposed(self) -> bool:
        return self.transforms.count("transpose") % 2 == 1

    def to_dict(self) -> dict:
        return {
            "transforms": list(self.transforms),
            "steps": [
                {
                    "case": s.case,
                    "row": s.row,
                    "sequence": list(s.sequence),
                    "placed": [list(p) for p in s.placed],
                }
                for s in self.steps
            ],
        }


def _check_order(order: Sequence[int], m: int) -> tuple[int, ...]:
    order = tuple(int(q) for q in order)
    if sorted(order) != list(range(1, m + 1)):
        raise ValueError(f"row order must be a permutation of 1..{m}, got {order}")
    return order


def build(
    spec: BoundarySpec, order: Sequence[int] | None = None
) -> tuple[SignMatrix, ConstructionTrace]:
    """Construct a matrix for ``spec`` following the existence proof.

    ``order`` is a preference order over the original rows (1-based); at each
    step the first remaining row in that order that can drive the step is used.
    ``None`` means ascending order.  If the instance has to be transposed, the
    working rows are original columns and are taken in ascending order.
    """
    report = check(spec)
    if not report.feasible:
        raise InfeasibleSpec(report)
    m, n = spec.shape
    rank = {q: i for i, q in enumerate(_check_order(order, m))} if order is not None else None

    grid = [[0] * n for _ in range(m)]
    trace = ConstructionTrace()

    # working frame: labels are original 1-based indices of the current axes
    rows = list(range(1, m + 1))
    cols = list(range(1, n + 1))
    v, vp = list(spec.v), list(spec.v_prime)
    u, up = list(spec.u), list(spec.u_prime)
    transposed = False
    negated = False

    def matched(a: list[int], b: list[int], sign: int) -> int:
        return sum(1 for x, y in zip(a, b) if x == y == sign)

    def pick(candidates: list[int]) -> int:
        # candidates are positions into `rows`
        if rank is None or transposed:
            return candidates[0]
        return min(candidates, key=lambda i: rank[rows[i]])

    while True:
        rp, rm = matched(v, vp, 1), matched(v, vp, -1)
        cp, cm = matched(u, up, 1), matched(u, up, -1)
        if rp == rm == cp == cm == 0:
            break
        if rp > cp:
            rows, cols = cols, rows
            v, vp, u, up = u, up, v, vp
            transposed = not transposed
            trace.transforms.append("transpose")
            rp, rm, cp, cm = cp, cm, rp, rm

        if rp or rm:
            cands = [i for i in range(len(rows)) if v[i] == vp[i]]
            qi = pick(cands)
            sigma = v[qi]
            case = 1 if sigma == 1 else 2
            cap = cp - rp if sigma == 1 else cm - rm
            seq = _run(u, up, sigma, cap, even=False)
        else:
            first = next(j for j in range(len(cols)) if u[j] == up[j])
            if u[first] == -1:
                v, vp, u, up = ([-x for x in w] for w in (v, vp, u, up))
                negated = not negated
                trace.transforms.append("negate")
            cands = [i for i in range(len(rows)) if v[i] == 1 and vp[i] == -1]
            if not cands:
                raise InternalContradiction(
                    f"no row with v_q=+1, v'_q=-1 among remaining rows {rows}"
                )
            qi = pick(cands)
            sigma = 1
            case = 3
            seq = _run(u, up, 1, None, even=True)
        if not seq:
            raise InternalContradiction(
                f"case {case}: no alternating run for row {rows[qi]} over columns {cols}"
            )

        placed = []
        for pos, j in enumerate(seq):
            sign = -sigma if pos % 2 == 0 else sigma
            if negated:
                sign = -sign
            r, c = (cols[j], rows[qi]) if transposed else (rows[qi], cols[j])
            grid[r - 1][c - 1] = sign
            placed.append((r, c, sign))
        trace.steps.append(Step(case, rows[qi], tuple(cols[j] for j in seq), tuple(placed)))

        del rows[qi], v[qi], vp[qi]
        drop = set(seq)
        keep = [j for j in range(len(cols)) if j not in drop]
        cols = [cols[j] for j in keep]
        u = [u[j] for j in keep]
        up = [up[j] for j in keep]

    return SignMatrix(tuple(map(tuple, grid))), trace


def permutation_matrix(order: Sequence[int]) -> SignMatrix:
    """Matrix with a 1 at ``(q_i, i)``: row ``q_i`` is served by column ``i``."""
    n = len(order)
    grid = [[0] * n for _ in range(n)]
    for i, q in enumerate(order):
        grid[q - 1][i] = 1
    return SignMatrix(tuple(map(tuple, grid)))
