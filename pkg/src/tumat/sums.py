"""Regularity-preserving sums of standard representations.

The 1-sum is block-diagonal; the 2-sum glues along one shared row label
x and one shared column label y, with bottom-left rank-one block c * r;
the 3-sum glues along three shared row labels x0, x1, x2 and three
shared column labels y0, y1, y2 through an invertible 2x2 connector
block D0, with bottom-left block Dr * D0^-1 * Dl.

Each ``standard_repr_sum_k`` first checks the label-overlap shape
preconditions (violations raise), then evaluates the validity guards in
a fixed order and returns an Invalid outcome naming the first failed
guard.  Valid outcomes carry the assembled standard representation with
a deterministic label order: left-side labels first, then right-side
labels, each in stored order, glue labels dropped from the side that
loses them.

Signing constructions mirror the sums over the rationals and produce TU
signings of the GF(2) results when the summand signings are TU.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ShapeError
from .exactmat import GF2, RATIONAL, Entry, ExactMatrix, from_blocks, from_cols, from_rows
from .matroid import FiniteMatroid, Label, LabeledMatrix, matroids_equal
from .stdrepr import StandardRepr
from .tu import DEFAULT_TU_LIMIT, is_totally_unimodular, scale_rows_cols

REASON_X_OVERLAP = "x-overlap"
REASON_Y_OVERLAP = "y-overlap"
REASON_ZERO_ROW = "zero-row-r"
REASON_ZERO_COL = "zero-col-c"
REASON_LABELS_NOT_DISTINCT = "labels-not-distinct"
REASON_D0_MISMATCH = "d0-mismatch"
REASON_D0_SINGULAR = "d0-singular"
REASON_MISSING_ONE = "missing-one-entry"
REASON_NONZERO_OUTSIDE = "nonzero-outside"

FORM_IDENTITY = "identity"
FORM_UPPER_TRIANGULAR = "upper-triangular-11"

_CONNECTOR_TARGETS = {
    FORM_IDENTITY: ExactMatrix(RATIONAL, [[1, 1, 0], [1, 0, 1], [0, -1, 1]]),
    FORM_UPPER_TRIANGULAR: ExactMatrix(RATIONAL, [[1, 1, 0], [1, 1, 1], [0, 1, 1]]),
}

__all__ = [
    "SumOutcome",
    "Sum3Labels",
    "MatrixSum3Blocks",
    "matrix_sum_1",
    "matrix_sum_2",
    "matrix_sum_3",
    "blocks_from_summands",
    "standard_repr_sum_1",
    "standard_repr_sum_2",
    "standard_repr_sum_3",
    "is_unit_2x2",
    "sign_sum_1",
    "sign_sum_2",
    "resign_to_target",
    "canonical_signing_sum3",
    "verify_is_sum_k_of",
    "FORM_IDENTITY",
    "FORM_UPPER_TRIANGULAR",
    "REASON_X_OVERLAP",
    "REASON_Y_OVERLAP",
    "REASON_ZERO_ROW",
    "REASON_ZERO_COL",
    "REASON_LABELS_NOT_DISTINCT",
    "REASON_D0_MISMATCH",
    "REASON_D0_SINGULAR",
    "REASON_MISSING_ONE",
    "REASON_NONZERO_OUTSIDE",
]


@dataclass(frozen=True)
class SumOutcome:
    """Valid (carries the assembled representation) or Invalid (carries why)."""

    result: Optional[StandardRepr]
    reason: Optional[str] = None
    message: str = ""

    @property
    def valid(self) -> bool:
        return self.result is not None

    @staticmethod
    def ok(result: StandardRepr) -> "SumOutcome":
        return SumOutcome(result)

    @staticmethod
    def invalid(reason: str, message: str) -> "SumOutcome":
        return SumOutcome(None, reason, message)


@dataclass(frozen=True)
class Sum3Labels:
    """The three shared row labels and three shared column labels of a 3-sum."""

    x0: Label
    x1: Label
    x2: Label
    y0: Label
    y1: Label
    y2: Label

    @property
    def xs(self) -> tuple[Label, Label, Label]:
        return (self.x0, self.x1, self.x2)

    @property
    def ys(self) -> tuple[Label, Label, Label]:
        return (self.y0, self.y1, self.y2)


@dataclass(frozen=True)
class MatrixSum3Blocks:
    """The six blocks feeding a 3-sum.

    ``a_left`` has the left-summand rows (rest, then x2) by columns
    (rest, then y0, y1); ``d_left`` is rows (x0, x1) by the left rest
    columns; the connector blocks ``d0_left`` and ``d0_right`` are rows
    (x0, x1) by columns (y0, y1); ``d_right`` is the right rest rows by
    columns (y0, y1); ``a_right`` has rows (x0, x1, then rest) by
    columns (y2, then rest).
    """

    a_left: ExactMatrix
    d_left: ExactMatrix
    d0_left: ExactMatrix
    d0_right: ExactMatrix
    d_right: ExactMatrix
    a_right: ExactMatrix

    def __post_init__(self):
        kinds = {
            self.a_left.kind, self.d_left.kind, self.d0_left.kind,
            self.d0_right.kind, self.d_right.kind, self.a_right.kind,
        }
        if len(kinds) != 1:
            raise ShapeError("all blocks must share one scalar kind")
        if self.d0_left.shape != (2, 2) or self.d0_right.shape != (2, 2):
            raise ShapeError("connector blocks must be 2x2")
        if self.a_left.n_rows < 1 or self.a_left.n_cols < 2:
            raise ShapeError("a_left must contain the x2 row and the y0, y1 columns")
        if self.d_left.n_rows != 2 or self.d_left.n_cols != self.a_left.n_cols - 2:
            raise ShapeError("d_left must be 2 by (a_left columns - 2)")
        if self.d_right.n_cols != 2:
            raise ShapeError("d_right must have two columns")
        if self.a_right.n_rows != self.d_right.n_rows + 2 or self.a_right.n_cols < 1:
            raise ShapeError("a_right must have the x0, x1 rows above the d_right rows")


def matrix_sum_1(a_left: ExactMatrix, a_right: ExactMatrix) -> ExactMatrix:
    """Block-diagonal join of two matrices of one kind."""
    if a_left.kind != a_right.kind:
        raise ShapeError("summands must share one scalar kind")
    kind = a_left.kind
    return from_blocks(
        a_left,
        ExactMatrix.zeros(a_left.n_rows, a_right.n_cols, kind),
        ExactMatrix.zeros(a_right.n_rows, a_left.n_cols, kind),
        a_right,
    )


def matrix_sum_2(
    a_left: ExactMatrix,
    r: Sequence[Entry],
    a_right: ExactMatrix,
    c: Sequence[Entry],
) -> ExactMatrix:
    """Join with rank-one bottom-left block c * r."""
    if a_left.kind != a_right.kind:
        raise ShapeError("summands must share one scalar kind")
    kind = a_left.kind
    r_row = ExactMatrix(kind, [r], n_cols=len(r))
    c_col = ExactMatrix(kind, [[v] for v in c], n_cols=1)
    if r_row.n_cols != a_left.n_cols:
        raise ShapeError("r must have one entry per a_left column")
    if c_col.n_rows != a_right.n_rows:
        raise ShapeError("c must have one entry per a_right row")
    outer = c_col @ r_row
    return from_blocks(
        a_left,
        ExactMatrix.zeros(a_left.n_rows, a_right.n_cols, kind),
        outer,
        a_right,
    )


def matrix_sum_3(blocks: MatrixSum3Blocks) -> ExactMatrix:
    """Assemble the 3-sum matrix; the connector block must be invertible."""
    d0 = blocks.d0_left
    if d0.determinant() == 0:
        raise ShapeError("the connector block is singular")
    dlr = blocks.d_right @ d0.inverse() @ blocks.d_left
    bottom_left = from_blocks(blocks.d_left, blocks.d0_left, dlr, blocks.d_right)
    kind = blocks.a_left.kind
    top_right = ExactMatrix.zeros(blocks.a_left.n_rows, blocks.a_right.n_cols, kind)
    return from_blocks(blocks.a_left, top_right, bottom_left, blocks.a_right)


def blocks_from_summands(
    b_left: LabeledMatrix, b_right: LabeledMatrix, labels: Sum3Labels
) -> MatrixSum3Blocks:
    """Cut the six blocks out of two labeled summand matrices."""
    for lbl in labels.xs:
        if lbl not in b_left.row_labels or lbl not in b_right.row_labels:
            raise ShapeError(f"row label {lbl!r} must appear in both summands")
    for lbl in labels.ys:
        if lbl not in b_left.col_labels or lbl not in b_right.col_labels:
            raise ShapeError(f"column label {lbl!r} must appear in both summands")
    xs = set(labels.xs)
    ys = set(labels.ys)
    x_left_rest = [u for u in b_left.row_labels if u not in xs]
    y_left_rest = [v for v in b_left.col_labels if v not in ys]
    x_right_rest = [u for u in b_right.row_labels if u not in xs]
    y_right_rest = [v for v in b_right.col_labels if v not in ys]
    return MatrixSum3Blocks(
        a_left=b_left.select(x_left_rest + [labels.x2], y_left_rest + [labels.y0, labels.y1]).body,
        d_left=b_left.select([labels.x0, labels.x1], y_left_rest).body,
        d0_left=b_left.select([labels.x0, labels.x1], [labels.y0, labels.y1]).body,
        d0_right=b_right.select([labels.x0, labels.x1], [labels.y0, labels.y1]).body,
        d_right=b_right.select(x_right_rest, [labels.y0, labels.y1]).body,
        a_right=b_right.select([labels.x0, labels.x1] + x_right_rest, [labels.y2] + y_right_rest).body,
    )


def _require_gf2(s: StandardRepr, who: str) -> None:
    if s.kind != GF2:
        raise ShapeError(f"{who} must be a GF(2) standard representation")


def standard_repr_sum_1(left: StandardRepr, right: StandardRepr) -> SumOutcome:
    """1-sum: block-diagonal standard representation on disjoint labels."""
    _require_gf2(left, "left summand")
    _require_gf2(right, "right summand")
    if set(left.X) & set(right.Y) or set(left.Y) & set(right.X):
        raise ShapeError("row labels of one summand collide with column labels of the other")
    x_shared = set(left.X) & set(right.X)
    if x_shared:
        return SumOutcome.invalid(REASON_X_OVERLAP, f"shared row labels {sorted(x_shared)}")
    y_shared = set(left.Y) & set(right.Y)
    if y_shared:
        return SumOutcome.invalid(REASON_Y_OVERLAP, f"shared column labels {sorted(y_shared)}")
    body = matrix_sum_1(left.B.body, right.B.body)
    x_out = list(left.X) + list(right.X)
    y_out = list(left.Y) + list(right.Y)
    return SumOutcome.ok(StandardRepr(x_out, y_out, LabeledMatrix(x_out, y_out, body)))


def standard_repr_sum_2(
    left: StandardRepr, right: StandardRepr, x: Label, y: Label
) -> SumOutcome:
    """2-sum along row label x of the left and column label y of the right.

    r is row x of the left matrix and c is column y of the right matrix;
    either being all zero makes the sum Invalid.
    """
    _require_gf2(left, "left summand")
    _require_gf2(right, "right summand")
    if set(left.X) & set(right.X) != {x}:
        raise ShapeError("row label sets must intersect in exactly the glue label x")
    if set(left.Y) & set(right.Y) != {y}:
        raise ShapeError("column label sets must intersect in exactly the glue label y")
    if set(left.X) & set(right.Y) or set(left.Y) & set(right.X):
        raise ShapeError("row labels of one summand collide with column labels of the other")
    r = left.B.body.row(left.B.row_position(x))
    c = right.B.body.col(right.B.col_position(y))
    if not any(r):
        return SumOutcome.invalid(REASON_ZERO_ROW, f"row {x!r} of the left summand is zero")
    if not any(c):
        return SumOutcome.invalid(REASON_ZERO_COL, f"column {y!r} of the right summand is zero")
    x_keep = [u for u in left.X if u != x]
    y_keep = [v for v in right.Y if v != y]
    a_left = left.B.select(x_keep, left.Y).body
    a_right = right.B.select(right.X, y_keep).body
    body = matrix_sum_2(a_left, r, a_right, c)
    x_out = x_keep + list(right.X)
    y_out = list(left.Y) + y_keep
    return SumOutcome.ok(StandardRepr(x_out, y_out, LabeledMatrix(x_out, y_out, body)))


def _distinct(labels: Sequence[Label]) -> bool:
    return len(set(labels)) == len(labels)


def standard_repr_sum_3(
    left: StandardRepr, right: StandardRepr, labels: Sum3Labels
) -> SumOutcome:
    """3-sum through the shared labels x0, x1, x2 and y0, y1, y2.

    Validity guards, checked in order: the six glue labels are distinct;
    the connector blocks agree; the connector is invertible; the eight
    designated entries are 1 (column y2 at rows x0, x1 and row x2 at
    columns y0, y1, on both sides); column y2 of the left is zero
    outside rows x0, x1 and row x2 of the right is zero outside columns
    y0, y1.
    """
    _require_gf2(left, "left summand")
    _require_gf2(right, "right summand")
    xs = set(labels.xs)
    ys = set(labels.ys)
    if set(left.X) & set(right.X) != xs:
        raise ShapeError("row label sets must intersect in exactly the three glue labels")
    if set(left.Y) & set(right.Y) != ys:
        raise ShapeError("column label sets must intersect in exactly the three glue labels")
    if set(left.X) & set(right.Y) or set(left.Y) & set(right.X):
        raise ShapeError("row labels of one summand collide with column labels of the other")

    if not (_distinct(labels.xs) and _distinct(labels.ys)):
        return SumOutcome.invalid(REASON_LABELS_NOT_DISTINCT, "glue labels must be six distinct names")
    d0_left = left.B.select([labels.x0, labels.x1], [labels.y0, labels.y1]).body
    d0_right = right.B.select([labels.x0, labels.x1], [labels.y0, labels.y1]).body
    if d0_left != d0_right:
        return SumOutcome.invalid(REASON_D0_MISMATCH, "connector blocks of the two summands differ")
    if d0_left.determinant() == 0:
        return SumOutcome.invalid(REASON_D0_SINGULAR, "connector block is singular")
    one_entries = [
        (left, labels.x0, labels.y2, "left"),
        (left, labels.x1, labels.y2, "left"),
        (left, labels.x2, labels.y0, "left"),
        (left, labels.x2, labels.y1, "left"),
        (right, labels.x0, labels.y2, "right"),
        (right, labels.x1, labels.y2, "right"),
        (right, labels.x2, labels.y0, "right"),
        (right, labels.x2, labels.y1, "right"),
    ]
    for side, u, v, name in one_entries:
        if side.B.entry(u, v) != 1:
            return SumOutcome.invalid(
                REASON_MISSING_ONE, f"{name} summand entry ({u!r}, {v!r}) must be 1"
            )
    for u in left.X:
        if u not in (labels.x0, labels.x1) and left.B.entry(u, labels.y2) != 0:
            return SumOutcome.invalid(
                REASON_NONZERO_OUTSIDE,
                f"left summand column {labels.y2!r} must be zero at row {u!r}",
            )
    for v in right.Y:
        if v not in (labels.y0, labels.y1) and right.B.entry(labels.x2, v) != 0:
            return SumOutcome.invalid(
                REASON_NONZERO_OUTSIDE,
                f"right summand row {labels.x2!r} must be zero at column {v!r}",
            )

    blocks = blocks_from_summands(left.B, right.B, labels)
    body = matrix_sum_3(blocks)
    x_left_rest = [u for u in left.X if u not in xs]
    y_left_rest = [v for v in left.Y if v not in ys]
    x_right_rest = [u for u in right.X if u not in xs]
    y_right_rest = [v for v in right.Y if v not in ys]
    block_rows = x_left_rest + [labels.x2, labels.x0, labels.x1] + x_right_rest
    block_cols = y_left_rest + [labels.y0, labels.y1, labels.y2] + y_right_rest
    assembled = LabeledMatrix(block_rows, block_cols, body)
    x_out = [u for u in left.X if u not in (labels.x0, labels.x1)] + \
        [u for u in right.X if u != labels.x2]
    y_out = [v for v in left.Y if v != labels.y2] + \
        [v for v in right.Y if v not in (labels.y0, labels.y1)]
    b_out = assembled.select(x_out, y_out)
    return SumOutcome.ok(StandardRepr(x_out, y_out, b_out))


_PERM_PAIRS = (
    ((0, 1), (0, 1)),
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 0), (1, 0)),
)

_UNIT_FORMS = (
    (FORM_IDENTITY, ((1, 0), (0, 1))),
    (FORM_UPPER_TRIANGULAR, ((1, 1), (0, 1))),
)


def is_unit_2x2(
    a: ExactMatrix,
) -> Optional[tuple[tuple[int, int], tuple[int, int], str]]:
    """Invertibility of a 2x2 GF(2) matrix, as permutations to a canonical form.

    Returns (row permutation, column permutation, form) with
    a[f[i]][g[j]] equal to the canonical form, trying the identity form
    first and the identity permutations first; None when singular.
    """
    if a.kind != GF2 or a.shape != (2, 2):
        raise ShapeError("is_unit_2x2 takes a 2x2 GF(2) matrix")
    if a.determinant() == 0:
        return None
    for form, tgt in _UNIT_FORMS:
        for f, g in _PERM_PAIRS:
            if all(a[f[i], g[j]] == tgt[i][j] for i in range(2) for j in range(2)):
                return (f, g, form)
    raise AssertionError("an invertible 2x2 GF(2) matrix always reaches a canonical form")


def sign_sum_1(
    a_left: ExactMatrix,
    a_right: ExactMatrix,
    *,
    limit: int = DEFAULT_TU_LIMIT,
    force: bool = False,
) -> ExactMatrix:
    """1-sum of two TU matrices over the rationals; the result is TU."""
    for side, name in ((a_left, "left"), (a_right, "right")):
        if not is_totally_unimodular(side, limit=limit, force=force).is_tu:
            raise ShapeError(f"{name} summand signing is not totally unimodular")
    return matrix_sum_1(a_left, a_right)


def sign_sum_2(
    a_left: ExactMatrix,
    r: Sequence[Entry],
    a_right: ExactMatrix,
    c: Sequence[Entry],
    *,
    limit: int = DEFAULT_TU_LIMIT,
    force: bool = False,
) -> ExactMatrix:
    """2-sum of TU pieces over the rationals; needs [a_left / r] and [c | a_right] TU."""
    r_row = ExactMatrix(RATIONAL, [r], n_cols=len(r))
    c_col = ExactMatrix(RATIONAL, [[v] for v in c], n_cols=1)
    stacked = from_rows(a_left, r_row)
    joined = from_cols(c_col, a_right)
    if not is_totally_unimodular(stacked, limit=limit, force=force).is_tu:
        raise ShapeError("the left summand signing stacked with r is not totally unimodular")
    if not is_totally_unimodular(joined, limit=limit, force=force).is_tu:
        raise ShapeError("c joined with the right summand signing is not totally unimodular")
    return matrix_sum_2(a_left, r, a_right, c)


def resign_to_target(
    a: ExactMatrix,
    row_positions: Sequence[int],
    col_positions: Sequence[int],
    target: ExactMatrix,
) -> ExactMatrix:
    """Scale whole rows and columns by +-1 so a designated submatrix hits a target.

    The submatrix of ``a`` at the given positions must have the same
    support as ``target``.  Signs propagate over a spanning forest of
    the target support graph, then every position is swept to confirm
    consistency; an unreachable target raises.
    """
    if a.kind != RATIONAL or target.kind != RATIONAL:
        raise ShapeError("resigning works on rational matrices")
    k_rows, k_cols = target.shape
    if len(row_positions) != k_rows or len(col_positions) != k_cols:
        raise ShapeError("position counts must match the target shape")
    if len(set(row_positions)) != k_rows or len(set(col_positions)) != k_cols:
        raise ShapeError("designated positions must be distinct")
    for i in row_positions:
        if not 0 <= i < a.n_rows:
            raise ShapeError(f"row position {i} out of range")
    for j in col_positions:
        if not 0 <= j < a.n_cols:
            raise ShapeError(f"column position {j} out of range")
    sub = a.submatrix(row_positions, col_positions)
    for i in range(k_rows):
        for j in range(k_cols):
            if (sub[i, j] == 0) != (target[i, j] == 0):
                raise ShapeError("designated submatrix support differs from the target support")
    row_sign: dict[int, int] = {}
    col_sign: dict[int, int] = {}
    nodes = [("r", i) for i in range(k_rows)] + [("c", j) for j in range(k_cols)]
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {v: [] for v in nodes}
    for i in range(k_rows):
        for j in range(k_cols):
            if target[i, j] != 0:
                adj[("r", i)].append(("c", j))
                adj[("c", j)].append(("r", i))
    for seed in nodes:
        kind_, idx = seed
        assigned = row_sign if kind_ == "r" else col_sign
        if idx in assigned:
            continue
        assigned[idx] = 1
        queue = [seed]
        while queue:
            side, v = queue.pop(0)
            for other_side, w in adj[(side, v)]:
                store = row_sign if other_side == "r" else col_sign
                if w in store:
                    continue
                i, j = (v, w) if side == "r" else (w, v)
                known = row_sign[i] if side == "r" else col_sign[j]
                ratio = target[i, j] / sub[i, j]
                store[w] = int(ratio) * known
                queue.append((other_side, w))
    for i in range(k_rows):
        for j in range(k_cols):
            if target[i, j] != 0 and row_sign[i] * col_sign[j] * sub[i, j] != target[i, j]:
                raise ShapeError("no row/column sign scaling reaches the target")
    full_rows = [1] * a.n_rows
    full_cols = [1] * a.n_cols
    for i, pos in enumerate(row_positions):
        full_rows[pos] = row_sign[i]
    for j, pos in enumerate(col_positions):
        full_cols[pos] = col_sign[j]
    return scale_rows_cols(a, full_rows, full_cols)


def canonical_signing_sum3(
    signed_left: LabeledMatrix,
    signed_right: LabeledMatrix,
    labels: Sum3Labels,
    *,
    limit: int = DEFAULT_TU_LIMIT,
    force: bool = False,
) -> LabeledMatrix:
    """TU signing of a 3-sum built from TU signings of its summands.

    Both signings are re-signed so their shared 3x3 connector submatrix
    (rows x2, x0, x1 by columns y0, y1, y2, taken in the order that
    brings the connector to its canonical form) equals a fixed target,
    then the sum is assembled over the rationals with exact bottom-left
    block D'r * (D'0)^-1 * D'l.  The output is labeled like the Valid
    outcome of ``standard_repr_sum_3`` on the summand supports.
    """
    if signed_left.kind != RATIONAL or signed_right.kind != RATIONAL:
        raise ShapeError("summand signings must be rational")
    for side, name in ((signed_left, "left"), (signed_right, "right")):
        if not is_totally_unimodular(side.body, limit=limit, force=force).is_tu:
            raise ShapeError(f"{name} summand signing is not totally unimodular")
    d0_supp_left = _abs_gf2(signed_left.select([labels.x0, labels.x1], [labels.y0, labels.y1]).body)
    d0_supp_right = _abs_gf2(signed_right.select([labels.x0, labels.x1], [labels.y0, labels.y1]).body)
    if d0_supp_left != d0_supp_right:
        raise ShapeError("connector supports of the two signings differ")
    unit = is_unit_2x2(d0_supp_left)
    if unit is None:
        raise ShapeError("connector block is singular")
    f, g, form = unit
    px = (labels.xs[f[0]], labels.xs[f[1]])
    py = (labels.ys[g[0]], labels.ys[g[1]])
    target = _CONNECTOR_TARGETS[form]

    def resign(side: LabeledMatrix) -> LabeledMatrix:
        rows = [side.row_position(labels.x2), side.row_position(px[0]), side.row_position(px[1])]
        cols = [side.col_position(py[0]), side.col_position(py[1]), side.col_position(labels.y2)]
        return LabeledMatrix(
            side.row_labels, side.col_labels, resign_to_target(side.body, rows, cols, target)
        )

    left = resign(signed_left)
    right = resign(signed_right)

    xs = set(labels.xs)
    ys = set(labels.ys)
    x_left_rest = [u for u in left.row_labels if u not in xs]
    y_left_rest = [v for v in left.col_labels if v not in ys]
    x_right_rest = [u for u in right.row_labels if u not in xs]
    y_right_rest = [v for v in right.col_labels if v not in ys]

    a_left = left.select(x_left_rest + [labels.x2], y_left_rest + [py[0], py[1]]).body
    d_left = left.select([px[0], px[1]], y_left_rest).body
    d0 = left.select([px[0], px[1]], [py[0], py[1]]).body
    d_right = right.select(x_right_rest, [py[0], py[1]]).body
    a_right = right.select([px[0], px[1]] + x_right_rest, [labels.y2] + y_right_rest).body
    dlr = d_right @ d0.inverse() @ d_left
    bottom_left = from_blocks(d_left, d0, dlr, d_right)
    top_right = ExactMatrix.zeros(a_left.n_rows, a_right.n_cols, RATIONAL)
    body = from_blocks(a_left, top_right, bottom_left, a_right)
    block_rows = x_left_rest + [labels.x2, px[0], px[1]] + x_right_rest
    block_cols = y_left_rest + [py[0], py[1], labels.y2] + y_right_rest
    assembled = LabeledMatrix(block_rows, block_cols, body)
    x_out = [u for u in signed_left.row_labels if u not in (labels.x0, labels.x1)] + \
        [u for u in signed_right.row_labels if u != labels.x2]
    y_out = [v for v in signed_left.col_labels if v != labels.y2] + \
        [v for v in signed_right.col_labels if v not in (labels.y0, labels.y1)]
    return assembled.select(x_out, y_out)


def _abs_gf2(a: ExactMatrix) -> ExactMatrix:
    rows = [[0 if v == 0 else 1 for v in row] for row in a.rows]
    return ExactMatrix(GF2, rows, n_cols=a.n_cols)


def verify_is_sum_k_of(
    k: int,
    m: FiniteMatroid,
    m_left: FiniteMatroid,
    m_right: FiniteMatroid,
    s_left: StandardRepr,
    s_right: StandardRepr,
    *,
    x: Optional[Label] = None,
    y: Optional[Label] = None,
    labels: Optional[Sum3Labels] = None,
    eq_limit: int = 18,
) -> bool:
    """Certify a k-sum relation between three matroids.

    The witnesses are standard representations of the summands; the sum
    must come out Valid, and all three matroids must match the claimed
    ones exhaustively.
    """
    if k == 1:
        outcome = standard_repr_sum_1(s_left, s_right)
    elif k == 2:
        if x is None or y is None:
            raise ShapeError("a 2-sum needs the glue labels x and y")
        outcome = standard_repr_sum_2(s_left, s_right, x, y)
    elif k == 3:
        if labels is None:
            raise ShapeError("a 3-sum needs its six glue labels")
        outcome = standard_repr_sum_3(s_left, s_right, labels)
    else:
        raise ShapeError("k must be 1, 2, or 3")
    if not outcome.valid:
        return False
    return (
        matroids_equal(outcome.result.to_matroid(), m, limit=eq_limit)
        and matroids_equal(s_left.to_matroid(), m_left, limit=eq_limit)
        and matroids_equal(s_right.to_matroid(), m_right, limit=eq_limit)
    )
