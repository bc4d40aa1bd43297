"""Exhaustive enumeration and exact counting of ``(u, u'|v, v')``-ASMs.

Backtracking fills cells row-major with candidates in the order ``0, +1, -1``.
Each column carries the sign of its most recent nonzero (initially ``u_j``), each
row the same starting from ``v_i``; a nonzero must oppose both.  A row is
closed against ``v'_i`` and, on the last row, each column against ``u'_j``.

The search can be split over the first row's fillings and run in worker
processes; results are merged back in the sequential order.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from math import factorial, prod

from .core import BoundarySpec, SignMatrix

WORKERS_ENV = "GASM_WORKERS"

_CANDIDATES = (0, 1, -1)


def default_workers() -> int:
    """Worker count from ``$GASM_WORKERS``; 1 (sequential) when unset."""
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _row_fillings(
    spec: BoundarySpec, i: int, col_last: list[int]
) -> Iterator[tuple[int, ...]]:
    """Valid contents of row ``i`` given the column states, in search order."""
    n = spec.n
    last_row = i == spec.m - 1
    end = -spec.v_prime[i]
    u_end = spec.u_prime
    cells = [0] * n

    def fill(j: int, row_last: int) -> Iterator[tuple[int, ...]]:
        if j == n:
            if row_last == end:
                yield tuple(cells)
            return
        # row must still flip but no later column can take the flip
        if row_last != end and not any(
            col_last[k] == row_last and (not last_row or u_end[k] == row_last)
            for k in range(j, n)
        ):
            return
        c = col_last[j]
        for x in _CANDIDATES:
            if x == 0:
                if last_row and c != -u_end[j]:
                    continue
                cells[j] = 0
                yield from fill(j + 1, row_last)
            elif x == -row_last and x == -c:
                if last_row and x != -u_end[j]:
                    continue
                cells[j] = x
                yield from fill(j + 1, x)
        cells[j] = 0

    yield from fill(0, spec.v[i])


def _advance(col_last: list[int], row: tuple[int, ...]) -> list[int]:
    return [x if x else c for x, c in zip(row, col_last)]


def _subtree(
    spec: BoundarySpec, i: int, col_last: list[int], prefix: list[tuple[int, ...]]
) -> Iterator[SignMatrix]:
    if i == spec.m:
        yield SignMatrix(tuple(prefix))
        return
    for row in _row_fillings(spec, i, col_last):
        prefix.append(row)
        yield from _subtree(spec, i + 1, _advance(col_last, row), prefix)
        prefix.pop()


def _count_subtree(spec: BoundarySpec, i: int, col_last: list[int]) -> int:
    if i == spec.m:
        return 1
    return sum(
        _count_subtree(spec, i + 1, _advance(col_last, row))
        for row in _row_fillings(spec, i, col_last)
    )


def _first_rows(spec: BoundarySpec) -> list[tuple[int, ...]]:
    return list(_row_fillings(spec, 0, list(spec.u)))


def _enumerate_branch(args: tuple[BoundarySpec, tuple[int, ...], int | None]) -> list[SignMatrix]:
    spec, row, limit = args
    it = _subtree(spec, 1, _advance(list(spec.u), row), [row])
    return list(islice(it, limit))


def _count_branch(args: tuple[BoundarySpec, tuple[int, ...]]) -> int:
    spec, row = args
    return _count_subtree(spec, 1, _advance(list(spec.u), row))


def enumerate_asms(
    spec: BoundarySpec, limit: int | None = None, workers: int = 1
) -> Iterator[SignMatrix]:
    """Yield every ``(u, u'|v, v')``-ASM exactly once, in deterministic order.

    ``limit`` caps the stream.  With ``workers > 1`` the first-row subtrees are
    searched in separate processes (each capped at ``limit``) and concatenated
    in sequential order, so the output is identical to ``workers=1``.
    """
    if limit is not None and limit < 0:
        raise ValueError("limit must be nonnegative")
    if limit == 0:
        return
    if workers <= 1:
        yield from islice(_subtree(spec, 0, list(spec.u), []), limit)
        return
    tasks = [(spec, row, limit) for row in _first_rows(spec)]
    produced = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_enumerate_branch, tasks):
            for A in chunk:
                yield A
                produced += 1
                if limit is not None and produced >= limit:
                    return


def count(spec: BoundarySpec, workers: int = 1) -> int:
    """Exact number of ``(u, u'|v, v')``-ASMs; nothing is materialised."""
    if workers <= 1:
        return _count_subtree(spec, 0, list(spec.u))
    tasks = [(spec, row) for row in _first_rows(spec)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_branch, tasks))


def exists(spec: BoundarySpec) -> bool:
    return next(enumerate_asms(spec, limit=1), None) is not None


def classical_count(n: int) -> int:
    """Number of ``n x n`` ASMs: ``prod_{k<n} (3k+1)! / (n+k)!``, exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = prod(factorial(3 * k + 1) for k in range(n))
    den = prod(factorial(n + k) for k in range(n))
    q, r = divmod(num, den)
    assert r == 0, "product formula division must be exact"
    return q
