"""Brute-force references that share no code with the library's search."""

from collections import Counter
from itertools import product

from gasm.core import BoundarySpec


def alternates(line) -> bool:
    nz = [x for x in line if x]
    return all(a != b for a, b in zip(nz, nz[1:]))


def naive_valid(grid, spec: BoundarySpec) -> bool:
    m, n = spec.shape
    for i in range(m):
        if not alternates((spec.v[i], *grid[i], spec.v_prime[i])):
            return False
    for j in range(n):
        if not alternates((spec.u[j], *(grid[i][j] for i in range(m)), spec.u_prime[j])):
            return False
    return True


def all_grids(m: int, n: int):
    for cells in product((0, 1, -1), repeat=m * n):
        yield tuple(cells[i * n : (i + 1) * n] for i in range(m))


def brute_force(spec: BoundarySpec) -> list:
    """Every grid over {-1,0,1}^(m x n) that passes the naive check."""
    return [g for g in all_grids(*spec.shape) if naive_valid(g, spec)]


def all_specs(m: int, n: int):
    for bits in product((1, -1), repeat=2 * m + 2 * n):
        yield BoundarySpec(bits[:n], bits[n : 2 * n], bits[2 * n : 2 * n + m], bits[2 * n + m :])


def _border_options(line):
    nz = [x for x in line if x]
    if not nz:
        return [(1, -1), (-1, 1)]
    return [(-nz[0], -nz[-1])]


def counts_by_spec(m: int, n: int) -> Counter:
    """Number of ASMs for every m x n spec, from one pass over all 3^(mn) grids.

    A line with borders alternates iff its interior alternates and each border
    opposes the nearest nonzero (any opposite pair for an all-zero line).
    """
    tally: Counter = Counter()
    for g in all_grids(m, n):
        cols = [tuple(g[i][j] for i in range(m)) for j in range(n)]
        if not all(alternates(r) for r in g) or not all(alternates(c) for c in cols):
            continue
        col_opts = [_border_options(c) for c in cols]
        row_opts = [_border_options(r) for r in g]
        for cs in product(*col_opts):
            for rs in product(*row_opts):
                spec = BoundarySpec(
                    [c[0] for c in cs], [c[1] for c in cs], [r[0] for r in rs], [r[1] for r in rs]
                )
                tally[spec] += 1
    return tally


def classical_count_by_ratio(n: int) -> int:
    """Recurrence f(k+1) = f(k) * (3k+1)! k! / ((2k)! (2k+1)!), an independent route."""
    from fractions import Fraction
    from math import factorial as fac

    f = Fraction(1)
    for k in range(1, n):
        f *= Fraction(fac(3 * k + 1) * fac(k), fac(2 * k) * fac(2 * k + 1))
    assert f.denominator == 1
    return int(f)
