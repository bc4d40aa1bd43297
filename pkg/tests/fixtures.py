"""Matrices and specs transcribed from the paper's displays."""

from gasm.core import BoundarySpec, SignMatrix

P, M = 1, -1

EX_I_SPEC = BoundarySpec((P, M, M, P), (P, M, P, M), (P, M, P, M), (M, P, P, M))
EX_I = SignMatrix.from_text(
    """
    -.+.
    .+.-
    ..-.
    ...+
    """
)

EX_II_SPEC = BoundarySpec((P, M, M, M), (P, M, M, P), (P, M, P), (M, M, M))
EX_II = SignMatrix.from_text(
    """
    ....
    .+..
    -.+.
    """
)

# vectors as printed in the prose of Example (iv); feasible, see test_feasibility
EX_IV_TEXT_SPEC = BoundarySpec((P, P), (M, P), (P, P), (P, M))
# vectors as drawn in the Example (iv) display
EX_IV_SPEC = BoundarySpec((P, P), (M, P), (P, M), (P, M))

EX2_SPEC = BoundarySpec((P, P, M, M), (P, P, M, M), (P, P, P, P), (M, M, M, M))
EX2 = SignMatrix.from_text(
    """
    -.+.
    .-.+
    ....
    ....
    """
)

_EX3_U = (M, M, P, P, P, M, M, M, P, P, P, P, M, M, M, M)
EX3_SPEC = BoundarySpec(_EX3_U, _EX3_U, (M, P, M, M, P), (M, M, M, M, P))
EX3_ORDER = (1, 3, 5, 4, 2)
EX3 = SignMatrix.from_text(
    """
    +.-..+..-...+...
    ...........-...+
    .+.-..+..-...+..
    ..............+.
    ....-..+..-.....
    """
)

# closing displays: a row filled with a non-longest / non-first-available run
STUCK_LONGEST_SPEC = BoundarySpec((P, M, P, M), (P, M, P, M), (M, P, M, M), (P, M, P, M))
STUCK_LONGEST_SPEC_FIXED = BoundarySpec((P, M, P, M), (P, M, P, M), (M, P, M, M), (P, M, P, P))
STUCK_LONGEST_ROW = (2, (M, P, 0, 0))
STUCK_FIRST_SPEC = BoundarySpec((P, M, P, M), (P, M, P, M), (P, P, P, P), (M, M, M, M))
STUCK_FIRST_ROW = (2, (M, 0, 0, P))

ALT5_SPEC = BoundarySpec.symmetric((P, M, P, M, P))
ALT5_FULL = SignMatrix.from_text(
    """
    -+-+-
    +-+-+
    -+-+-
    +-+-+
    -+-+-
    """
)
ALT5_ZEROED = SignMatrix.from_text(
    """
    -+-+-
    +-..+
    -+..-
    +-+-+
    -+-+-
    """
)
# a valid matrix not obtainable from ALT5_FULL by zeroing 2l x 2l blocks
ALT5_OTHER = SignMatrix.from_text(
    """
    -+-..
    +-.+.
    -.+.-
    +....
    -+-..
    """
)


def partial_row(m: int, n: int, row: tuple[int, tuple[int, ...]]) -> SignMatrix:
    q, content = row
    rows = [(0,) * n for _ in range(m)]
    rows[q - 1] = content
    return SignMatrix(tuple(rows))
