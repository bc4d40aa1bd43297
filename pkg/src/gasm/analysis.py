"""Structure and extremal statistics: alpha-spec block decomposition,
min/max nonzero counts, and a sweep comparing ``f(u,u'|v,v')`` with ``f(n)``."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .construct import InfeasibleSpec
from .core import BoundarySpec, SignMatrix
from .enumeration import classical_count, count, enumerate_asms
from .feasibility import check
from .verify import verify


class NotBlockDiagonal(ValueError):
    pass


class NotClassicalASM(ValueError):
    pass


@dataclass(frozen=True)
class AlphaSpec:
    """``alpha_{n,k}``: ``k`` leading +1s then ``n - k`` -1s, used on all four borders."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or not 0 <= self.k <= self.n:
            raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def vector(self) -> tuple[int, ...]:
        return (1,) * self.k + (-1,) * (self.n - self.k)

    def spec(self) -> BoundarySpec:
        return BoundarySpec.symmetric(self.vector)

    def expected_count(self) -> int:
        f = lambda j: classical_count(j) if j else 1  # noqa: E731
        return f(self.k) * f(self.n - self.k)


def _block(A: SignMatrix, r0: int, r1: int, c0: int, c1: int) -> SignMatrix:
    if r0 == r1 or c0 == c1:
        return SignMatrix(())
    return SignMatrix(tuple(A.row(i)[c0:c1] for i in range(r0, r1)))


def direct_sum(A1: SignMatrix, A2: SignMatrix) -> SignMatrix:
    """Block-diagonal ``A1 (+) A2``."""
    n1, n2 = A1.n, A2.n
    rows = [r + (0,) * n2 for r in A1.rows] + [(0,) * n1 + r for r in A2.rows]
    return SignMatrix(tuple(rows))


def alpha_assemble(A1: SignMatrix, A2: SignMatrix) -> SignMatrix:
    """``(-A1) (+) A2``."""
    return direct_sum(-A1, A2)


def alpha_decompose(A: SignMatrix, alpha: AlphaSpec) -> tuple[SignMatrix, SignMatrix]:
    """Split a valid ``alpha_{n,k}`` matrix as ``A = (-A1) (+) A2`` with
    ``A1`` a ``k x k`` and ``A2`` an ``(n-k) x (n-k)`` classical ASM."""
    n, k = alpha.n, alpha.k
    if A.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got {A.m}x{A.n}")
    for i in range(n):
        for j in range(n):
            if (i < k) != (j < k) and A[i, j]:
                raise NotBlockDiagonal(f"nonzero off-diagonal entry at ({i + 1}, {j + 1})")
    A1 = -_block(A, 0, k, 0, k)
    A2 = _block(A, k, n, k, n)
    for name, B in (("A1", A1), ("A2", A2)):
        if B.m and verify(B, BoundarySpec.uniform(B.m, B.n)):
            raise NotClassicalASM(f"{name} is not a classical ASM:\n{B}")
    return A1, A2


@dataclass(frozen=True)
class NonzeroStats:
    min_nonzeros: int
    max_nonzeros: int
    argmin: SignMatrix
    argmax: SignMatrix
    total: int


def nonzero_stats(spec: BoundarySpec) -> NonzeroStats:
    """Exact min/max number of nonzeros over all matrices for ``spec``.

    Witnesses are the first extremal matrices in enumeration order.
    """
    report = check(spec)
    if not report.feasible:
        raise InfeasibleSpec(report)
    lo = hi = None
    argmin = argmax = None
    total = 0
    for A in enumerate_asms(spec):
        total += 1
        z = A.nonzeros()
        if lo is None or z < lo:
            lo, argmin = z, A
        if hi is None or z > hi:
            hi, argmax = z, A
    if argmin is None:
        raise AssertionError("feasible spec produced no matrices")
    return NonzeroStats(lo, hi, argmin, argmax, total)


def alternating_vector(n: int) -> tuple[int, ...]:
    """``(+1, -1, +1, ...)`` of length ``n``."""
    return tuple(1 if j % 2 == 0 else -1 for j in range(n))


def checkerboard(n: int) -> SignMatrix:
    """Fully nonzero matrix for the odd-``n`` alternating spec; ``a_11 = -1``."""
    return SignMatrix(tuple(tuple(-1 if (i + j) % 2 == 0 else 1 for j in range(n)) for i in range(n)))


@dataclass
class SweepReport:
    n: int
    f_n: int
    exhaustive: bool
    specs_checked: int = 0
    feasible_specs: int = 0
    max_count: int = 0
    argmax: BoundarySpec | None = None
    counterexamples: list[tuple[BoundarySpec, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "f_n": self.f_n,
            "exhaustive": self.exhaustive,
            "specs_checked": self.specs_checked,
            "feasible_specs": self.feasible_specs,
            "max_count": self.max_count,
            "argmax": self.argmax.to_dict() if self.argmax else None,
            "counterexamples": [
                {"spec": s.to_dict(), "count": c} for s, c in self.counterexamples
            ],
        }


def _spec_from_bits(n: int, bits: tuple[int, ...]) -> BoundarySpec:
    return BoundarySpec(bits[:n], bits[n : 2 * n], bits[2 * n : 3 * n], bits[3 * n :])


def _count_spec(spec: BoundarySpec) -> int:
    return count(spec)


EXHAUSTIVE_MAX_N = 3


def conjecture_sweep(
    n: int, samples: int | None = None, seed: int = 0, workers: int = 1
) -> SweepReport:
    """Compare ``f(u,u'|v,v')`` against ``f(n)`` over square ``n x n`` specs.

    All ``2^(4n)`` specs for ``n <= 3`` unless ``samples`` is given; larger
    ``n`` requires sampling (default 1000 specs, seeded).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    exhaustive = samples is None and n <= EXHAUSTIVE_MAX_N
    if exhaustive:
        specs = [_spec_from_bits(n, b) for b in product((1, -1), repeat=4 * n)]
    else:
        rng = random.Random(seed)
        specs = [
            _spec_from_bits(n, tuple(rng.choice((1, -1)) for _ in range(4 * n)))
            for _ in range(samples if samples is not None else 1000)
        ]
    report = SweepReport(n, classical_count(n), exhaustive)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(_count_spec, specs, chunksize=64))
    else:
        counts = [count(s) for s in specs]
    for spec, c in zip(specs, counts):
        report.specs_checked += 1
        report.feasible_specs += c > 0
        if c > report.max_count:
            report.max_count, report.argmax = c, spec
        if c > report.f_n:
            report.counterexamples.append((spec, c))
    return report
