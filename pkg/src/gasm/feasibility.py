"""Existence test for ``(u, u'|v, v')``-ASMs.

A spec admits a matrix iff three counting conditions hold:

* balance: ``r-_m - r+_m == c-_n - c+_n`` (both equal the entry sum),
* row prefixes: ``-u+ <= r-_k - r+_k <= u-`` for every ``k``,
* column prefixes: ``-v+ <= c-_l - c+_l <= v-`` for every ``l``.

``r+_k`` counts rows ``i <= k`` with ``v_i = v'_i = +1`` ("+1-matched"), and so
on for the other three prefix sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

from .core import BoundarySpec

BALANCE = "balance"
ROW_PREFIX = "row_prefix"
COL_PREFIX = "col_prefix"


def _matched_prefix(a: Sequence[int], b: Sequence[int], sign: int) -> tuple[int, ...]:
    return tuple(accumulate(int(x == y == sign) for x, y in zip(a, b)))


@dataclass(frozen=True)
class PrefixStats:
    r_plus: tuple[int, ...]
    r_minus: tuple[int, ...]
    c_plus: tuple[int, ...]
    c_minus: tuple[int, ...]
    u_plus: int
    u_minus: int
    v_plus: int
    v_minus: int

    @property
    def m(self) -> int:
        return len(self.r_plus)

    @property
    def n(self) -> int:
        return len(self.c_plus)


def prefix_stats(spec: BoundarySpec) -> PrefixStats:
    return PrefixStats(
        r_plus=_matched_prefix(spec.v, spec.v_prime, 1),
        r_minus=_matched_prefix(spec.v, spec.v_prime, -1),
        c_plus=_matched_prefix(spec.u, spec.u_prime, 1),
        c_minus=_matched_prefix(spec.u, spec.u_prime, -1),
        u_plus=spec.u.count(1),
        u_minus=spec.u.count(-1),
        v_plus=spec.v.count(1),
        v_minus=spec.v.count(-1),
    )


@dataclass(frozen=True)
class Violation:
    """One failed condition.  ``index`` is the 1-based ``k``/``l`` for prefix
    conditions and ``None`` for balance."""

    condition: str
    index: int | None
    value: int
    lower: int
    upper: int

    def __str__(self) -> str:
        if self.condition == BALANCE:
            return (
                f"balance: r-_m - r+_m = {self.value} but c-_n - c+_n = {self.lower}"
            )
        if self.condition == ROW_PREFIX:
            what = f"r-_{self.index} - r+_{self.index}"
            bounds = "[-u+, u-]"
        else:
            what = f"c-_{self.index} - c+_{self.index}"
            bounds = "[-v+, v-]"
        return (
            f"{self.condition} at {self.index}: {what} = {self.value} "
            f"outside {bounds} = [{self.lower}, {self.upper}]"
        )


@dataclass(frozen=True)
class FeasibilityReport:
    stats: PrefixStats
    violated: list[Violation] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return not self.violated

    def __bool__(self) -> bool:
        return self.feasible


def check(spec: BoundarySpec) -> FeasibilityReport:
    """Evaluate all three conditions and collect every violation."""
    st = prefix_stats(spec)
    violated = []

    row_total = st.r_minus[-1] - st.r_plus[-1]
    col_total = st.c_minus[-1] - st.c_plus[-1]
    if row_total != col_total:
        violated.append(Violation(BALANCE, None, row_total, col_total, col_total))

    for k, (rp, rm) in enumerate(zip(st.r_plus, st.r_minus), start=1):
        d = rm - rp
        if not -st.u_plus <= d <= st.u_minus:
            violated.append(Violation(ROW_PREFIX, k, d, -st.u_plus, st.u_minus))

    for l, (cp, cm) in enumerate(zip(st.c_plus, st.c_minus), start=1):
        d = cm - cp
        if not -st.v_plus <= d <= st.v_minus:
            violated.append(Violation(COL_PREFIX, l, d, -st.v_plus, st.v_minus))

    return FeasibilityReport(st, violated)


def is_feasible(spec: BoundarySpec) -> bool:
    return check(spec).feasible
