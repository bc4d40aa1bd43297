import pytest

from gasm.analysis import (
    AlphaSpec,
    NotBlockDiagonal,
    NotClassicalASM,
    alpha_assemble,
    alpha_decompose,
    alternating_vector,
    checkerboard,
    conjecture_sweep,
    nonzero_stats,
)
from gasm.construct import InfeasibleSpec
from gasm.core import BoundarySpec, SignMatrix
from gasm.enumeration import count, enumerate_asms
from gasm.verify import verify

from .fixtures import ALT5_FULL, ALT5_OTHER, ALT5_SPEC, ALT5_ZEROED, EX_IV_SPEC


def test_alpha_vector():
    assert AlphaSpec(5, 2).vector == (1, 1, -1, -1, -1)
    with pytest.raises(ValueError):
        AlphaSpec(3, 4)


def test_alpha_2_1():
    alpha = AlphaSpec(2, 1)
    (A,) = list(enumerate_asms(alpha.spec()))
    assert A == SignMatrix(((-1, 0), (0, 1)))
    A1, A2 = alpha_decompose(A, alpha)
    assert A1 == SignMatrix(((1,),)) and A2 == SignMatrix(((1,),))


def test_alpha_k0_degenerate():
    alpha = AlphaSpec(3, 0)
    for A in enumerate_asms(alpha.spec()):
        A1, A2 = alpha_decompose(A, alpha)
        assert A1.shape == (0, 0) and A2 == A


def test_alpha_5_2():
    alpha = AlphaSpec(5, 2)
    blocks = set()
    for A in enumerate_asms(alpha.spec()):
        A1, A2 = alpha_decompose(A, alpha)
        assert alpha_assemble(A1, A2) == A
        blocks.add((A1, A2))
    assert len(blocks) == 14
    assert len({b[0] for b in blocks}) == 2 and len({b[1] for b in blocks}) == 7


def test_alpha_errors():
    alpha = AlphaSpec(2, 1)
    with pytest.raises(NotBlockDiagonal):
        alpha_decompose(SignMatrix(((-1, 1), (0, 1))), alpha)
    with pytest.raises(NotClassicalASM):
        alpha_decompose(SignMatrix(((1, 0), (0, 1))), alpha)
    with pytest.raises(ValueError):
        alpha_decompose(SignMatrix.zeros(3, 3), alpha)


@pytest.mark.parametrize("n,lo,hi", [(3, 3, 5), (4, 4, 8)])
def test_classical_extremes(n, lo, hi):
    st = nonzero_stats(BoundarySpec.uniform(n, n))
    assert (st.min_nonzeros, st.max_nonzeros) == (lo, hi)
    assert st.argmin.nonzeros() == lo and st.argmax.nonzeros() == hi
    assert verify(st.argmin, BoundarySpec.uniform(n, n)) == []


@pytest.mark.parametrize("n,lo,hi", [(2, 2, 2), (3, 3, 9)])
def test_alternating_extremes(n, lo, hi):
    spec = BoundarySpec.symmetric(alternating_vector(n))
    st = nonzero_stats(spec)
    assert (st.min_nonzeros, st.max_nonzeros) == (lo, hi)
    assert verify(st.argmax, spec) == []


def test_extremes_infeasible():
    with pytest.raises(InfeasibleSpec):
        nonzero_stats(EX_IV_SPEC)


def test_checkerboard_matches_display():
    assert checkerboard(5) == ALT5_FULL
    assert verify(ALT5_FULL, ALT5_SPEC) == []
    assert verify(ALT5_ZEROED, ALT5_SPEC) == []


def _zeroings(A: SignMatrix):
    """All matrices from A by zeroing one or more disjoint even square blocks (brute force)."""
    n = A.n
    blocks = [
        (i, j, s)
        for s in range(2, n + 1, 2)
        for i in range(n - s + 1)
        for j in range(n - s + 1)
    ]
    out = set()

    def go(start, cur, used):
        for b in range(start, len(blocks)):
            i, j, s = blocks[b]
            cells = {(r, c) for r in range(i, i + s) for c in range(j, j + s)}
            if cells & used:
                continue
            rows = [list(r) for r in cur]
            for r, c in cells:
                rows[r][c] = 0
            M = tuple(map(tuple, rows))
            out.add(M)
            go(b + 1, M, used | cells)

    go(0, A.rows, set())
    return out


def test_other_alt5_not_a_zeroing():
    assert verify(ALT5_OTHER, ALT5_SPEC) == []
    zeroed = _zeroings(ALT5_FULL)
    assert ALT5_ZEROED.rows in zeroed
    assert ALT5_OTHER.rows not in zeroed


@pytest.mark.parametrize("n,f", [(1, 1), (2, 2)])
def test_sweep_small(n, f):
    rep = conjecture_sweep(n)
    assert rep.exhaustive and rep.specs_checked == 16**n
    assert rep.f_n == f and rep.max_count <= f and rep.holds


def test_sweep_sampled_and_parallel():
    a = conjecture_sweep(3, samples=200, seed=1)
    b = conjecture_sweep(3, samples=200, seed=1, workers=2)
    assert not a.exhaustive and a.specs_checked == 200
    assert a.to_dict() == b.to_dict()
    assert count(a.argmax) == a.max_count
