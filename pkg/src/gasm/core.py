"""Domain types: boundary sign vectors, sign matrices and their symmetries.

A ``(u, u'|v, v')``-ASM is an ``m x n`` matrix over ``{-1, 0, +1}`` whose
nonzeros alternate along every row and column once the matrix is bordered by
``u`` (top), ``u'`` (bottom), ``v`` (left) and ``v'`` (right).

Storage is 0-based; everything user facing (violations, traces, CLI
messages) is 1-based.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

PLUS = 1
MINUS = -1
SIGNS = (PLUS, MINUS)

_CHAR_OF = {1: "+", -1: "-", 0: "."}
_VALUE_OF = {"+": 1, "-": -1, ".": 0}


class DimensionMismatch(ValueError):
    """Matrix shape does not agree with the boundary spec."""


def _as_sign_vector(values: Iterable[Any], name: str) -> tuple[int, ...]:
    out = []
    for pos, x in enumerate(values, start=1):
        if isinstance(x, bool) or x not in SIGNS:
            raise ValueError(f"{name}[{pos}] must be +1 or -1, got {x!r}")
        out.append(int(x))
    if not out:
        raise ValueError(f"{name} must be non-empty")
    return tuple(out)


def reverse(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(w))


def negated(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in w)


@dataclass(frozen=True)
class BoundarySpec:
    """The four border vectors; ``u``/``u_prime`` run along the ``n`` columns,
    ``v``/``v_prime`` along the ``m`` rows."""

    u: tuple[int, ...]
    u_prime: tuple[int, ...]
    v: tuple[int, ...]
    v_prime: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("u", "u_prime", "v", "v_prime"):
            object.__setattr__(self, name, _as_sign_vector(getattr(self, name), name))
        if len(self.u) != len(self.u_prime):
            raise ValueError(
                f"len(u)={len(self.u)} differs from len(u_prime)={len(self.u_prime)}"
            )
        if len(self.v) != len(self.v_prime):
            raise ValueError(
                f"len(v)={len(self.v)} differs from len(v_prime)={len(self.v_prime)}"
            )

    @property
    def m(self) -> int:
        return len(self.v)

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @classmethod
    def uniform(cls, m: int, n: int, sign: int = MINUS) -> BoundarySpec:
        """All four vectors constant; ``sign=-1`` with ``m == n`` is the classical case."""
        return cls((sign,) * n, (sign,) * n, (sign,) * m, (sign,) * m)

    @classmethod
    def symmetric(cls, w: Sequence[int]) -> BoundarySpec:
        """``u = u' = v = v' = w``."""
        return cls(w, w, w, w)

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> BoundarySpec:
        missing = [k for k in ("u", "u_prime", "v", "v_prime") if k not in doc]
        if missing:
            raise ValueError(f"missing field(s): {', '.join(missing)}")
        for k in ("u", "u_prime", "v", "v_prime"):
            if not isinstance(doc[k], list):
                raise ValueError(f"field {k!r} must be an array")
        return cls(doc["u"], doc["u_prime"], doc["v"], doc["v_prime"])

    def to_dict(self) -> dict[str, list[int]]:
        return {
            "u": list(self.u),
            "u_prime": list(self.u_prime),
            "v": list(self.v),
            "v_prime": list(self.v_prime),
        }

    # spec halves of the symmetry transforms
    def reverse_rows(self) -> BoundarySpec:
        return BoundarySpec(self.u_prime, self.u, reverse(self.v), reverse(self.v_prime))

    def reverse_cols(self) -> BoundarySpec:
        return BoundarySpec(reverse(self.u), reverse(self.u_prime), self.v_prime, self.v)

    def transpose(self) -> BoundarySpec:
        return BoundarySpec(self.v, self.v_prime, self.u, self.u_prime)

    def negate(self) -> BoundarySpec:
        return BoundarySpec(
            negated(self.u), negated(self.u_prime), negated(self.v), negated(self.v_prime)
        )


@dataclass(frozen=True)
class SignMatrix:
    """Dense ``m x n`` matrix over ``{-1, 0, +1}``.

    Indexing ``A[i, j]`` is 0-based.  The empty ``0 x 0`` matrix is allowed
    (it shows up as a degenerate block in direct sums).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if rows:
            width = len(rows[0])
            if width == 0:
                raise ValueError("rows must be non-empty")
            for i, r in enumerate(rows, start=1):
                if len(r) != width:
                    raise ValueError(f"row {i} has length {len(r)}, expected {width}")
                if any(x not in (-1, 0, 1) for x in r):
                    raise ValueError(f"row {i} has an entry outside {{-1, 0, +1}}")
        object.__setattr__(self, "rows", rows)

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    @classmethod
    def zeros(cls, m: int, n: int) -> SignMatrix:
        return cls(((0,) * n,) * m)

    def nonzeros(self) -> int:
        return sum(x != 0 for r in self.rows for x in r)

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def transposed(self) -> SignMatrix:
        return SignMatrix(tuple(zip(*self.rows)))

    def flipped_rows(self) -> SignMatrix:
        return SignMatrix(self.rows[::-1])

    def flipped_cols(self) -> SignMatrix:
        return SignMatrix(tuple(r[::-1] for r in self.rows))

    def __neg__(self) -> SignMatrix:
        return SignMatrix(tuple(tuple(-x for x in r) for r in self.rows))

    def to_text(self) -> str:
        return "\n".join("".join(_CHAR_OF[x] for x in r) for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> SignMatrix:
        """Parse the text grid: one row per line of ``+``, ``-``, ``.``."""
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if not lines or not lines[0]:
            raise ValueError("empty matrix text")
        rows = []
        for lineno, ln in enumerate(lines, start=1):
            bad = [c for c in ln if c not in _VALUE_OF]
            if bad:
                raise ValueError(f"line {lineno}: unexpected character {bad[0]!r}")
            rows.append(tuple(_VALUE_OF[c] for c in ln))
        return cls(tuple(rows))

    def __str__(self) -> str:
        return self.to_text()


def check_dimensions(A: SignMatrix, spec: BoundarySpec) -> None:
    if A.shape != spec.shape:
        raise DimensionMismatch(
            f"matrix is {A.m}x{A.n} but spec is {spec.m}x{spec.n} (m=len(v), n=len(u))"
        )


@dataclass(frozen=True)
class BorderedMatrix:
    """Logical ``(m+2) x (n+2)`` view of ``inner`` framed by ``spec``; corners are 0."""

    inner: SignMatrix
    spec: BoundarySpec

    def __post_init__(self) -> None:
        check_dimensions(self.inner, self.spec)

    @property
    def shape(self) -> tuple[int, int]:
        return self.spec.m + 2, self.spec.n + 2

    def entry(self, i: int, j: int) -> int:
        m, n = self.spec.shape
        if not (0 <= i <= m + 1 and 0 <= j <= n + 1):
            raise IndexError(f"({i}, {j}) outside bordered {m + 2}x{n + 2} matrix")
        on_row_edge = i in (0, m + 1)
        on_col_edge = j in (0, n + 1)
        if on_row_edge and on_col_edge:
            return 0
        if i == 0:
            return self.spec.u[j - 1]
        if i == m + 1:
            return self.spec.u_prime[j - 1]
        if j == 0:
            return self.spec.v[i - 1]
        if j == n + 1:
            return self.spec.v_prime[i - 1]
        return self.inner[i - 1, j - 1]

    def row_line(self, i: int) -> tuple[int, ...]:
        """Row ``i`` (1..m) of the bordered matrix, borders included."""
        return (self.spec.v[i - 1], *self.inner.row(i - 1), self.spec.v_prime[i - 1])

    def col_line(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (1..n) of the bordered matrix, borders included."""
        return (self.spec.u[j - 1], *self.inner.col(j - 1), self.spec.u_prime[j - 1])

    def to_text(self) -> str:
        m, n = self.spec.shape
        return "\n".join(
            "".join(_CHAR_OF[self.entry(i, j)] for j in range(n + 2)) for i in range(m + 2)
        )


# Pair transforms: each maps a valid (A, spec) to a valid pair and is an involution.


def reverse_rows(A: SignMatrix, spec: BoundarySpec) -> tuple[SignMatrix, BoundarySpec]:
    check_dimensions(A, spec)
    return A.flipped_rows(), spec.reverse_rows()


def reverse_cols(A: SignMatrix, spec: BoundarySpec) -> tuple[SignMatrix, BoundarySpec]:
    check_dimensions(A, spec)
    return A.flipped_cols(), spec.reverse_cols()


def transpose(A: SignMatrix, spec: BoundarySpec) -> tuple[SignMatrix, BoundarySpec]:
    check_dimensions(A, spec)
    return A.transposed(), spec.transpose()


def negate(A: SignMatrix, spec: BoundarySpec) -> tuple[SignMatrix, BoundarySpec]:
    check_dimensions(A, spec)
    return -A, spec.negate()


TRANSFORMS = {
    "reverse-rows": reverse_rows,
    "reverse-cols": reverse_cols,
    "transpose": transpose,
    "negate": negate,
}
