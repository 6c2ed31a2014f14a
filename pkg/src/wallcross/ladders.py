"""The wall order on cells, chamber diagrams, and ladder regularization.

Each wall a/b defines the linear form f(x, y) = a*x - (b-a)*y on the
quadrant embedding (x, y) = (col, -row); cells with equal f lie on a
common ladder with primitive step (b-a, a). The chamber to the left of a
wall (for n boxes) is the set of n smallest cells under f, and crossing
the wall slides every ladder's cells down to the deepest positions.

Two tie rules are provided for equal f values. "shallow" ranks the
shallower cell (smaller row) first and is the default: it makes the first
chamber the single row (n) and the whole chamber chain consistent.
"paper" ranks the deeper cell first; it is kept for experiments and makes
the first chamber (n-1, 1).
"""

from __future__ import annotations

from wallcross.errors import NotAYoungDiagramError
from wallcross.farey import Wall, neighbor_check
from wallcross.partitions import Box, Partition

TIE_SHALLOW = "shallow"
TIE_PAPER = "paper"
TIE_RULES = (TIE_SHALLOW, TIE_PAPER)


def f_value(w: Wall, box: Box) -> int:
    """a*x - (b-a)*y at (x, y) = (col, -row), i.e. a*col + (b-a)*row."""
    return w.a * box.col + (w.b - w.a) * box.row


def _box_key(w: Wall, box: Box, tie: str):
    if tie == TIE_SHALLOW:
        return (f_value(w, box), box.row)
    if tie == TIE_PAPER:
        return (f_value(w, box), -box.row)
    raise ValueError(f"unknown tie rule {tie!r}")


def box_cmp(w: Wall, b1: Box, b2: Box, tie: str = TIE_SHALLOW) -> int:
    """-1, 0 or 1 as b1 sorts before, equal to, or after b2."""
    k1, k2 = _box_key(w, b1, tie), _box_key(w, b2, tie)
    return (k1 > k2) - (k1 < k2)


def _to_partition(boxes: set[Box]) -> Partition:
    if not boxes:
        return Partition()
    counts: dict[int, int] = {}
    for b in boxes:
        counts[b.row] = counts.get(b.row, 0) + 1
    depth = max(counts)
    rows = [counts.get(r, 0) for r in range(1, depth + 1)]
    candidate_boxes = {Box(r, c) for r, n in enumerate(rows, 1) for c in range(1, n + 1)}
    if candidate_boxes != boxes or any(rows[i] < rows[i + 1] for i in range(depth - 1)):
        raise NotAYoungDiagramError(f"box set is not a Young diagram: {sorted(boxes)}", boxes=boxes)
    return Partition(rows)


def chamber_partition(n: int, w: Wall, tie: str = TIE_SHALLOW) -> Partition:
    """The n smallest cells under the wall order, verified to be a diagram."""
    if n < 1:
        raise ValueError(f"need at least one box, got {n}")
    candidates = [Box(r, c) for r in range(1, n + 1) for c in range(1, n + 2 - r)]
    candidates.sort(key=lambda box: _box_key(w, box, tie))
    return _to_partition(set(candidates[:n]))


def ladder_positions(w: Wall, through: Box, bound: int) -> list[Box]:
    """Cells sharing f with `through`, rows and cols in [1, bound], shallow first."""
    dr, dc = w.a, w.b - w.a
    out = []
    row, col = through.row, through.col
    while row - dr >= 1 and (dc == 0 or col + dc <= bound):
        row, col = row - dr, col + dc
    while row <= bound and col >= 1 and col <= bound:
        out.append(Box(row, col))
        if dc == 0:
            row += dr
        else:
            row, col = row + dr, col - dc
    return out


def _ladder_cells_deepest(w: Wall, through: Box, count: int) -> list[Box]:
    """The `count` deepest positions on the ladder through `through`."""
    dr, dc = w.a, w.b - w.a
    steps_down = (through.col - 1) // dc
    row, col = through.row + steps_down * dr, through.col - steps_down * dc
    out = []
    for _ in range(count):
        out.append(Box(row, col))
        row, col = row - dr, col + dc
    return out


def rc_regularize(p: Partition, w: Wall) -> Partition:
    """Slide each ladder's cells down to its deepest positions.

    Total only on inputs where the slide yields a diagram; otherwise raises
    NotAYoungDiagramError naming the first offending ladder.
    """
    if w.a == w.b:
        raise ValueError("ladders of the terminal wall 1/1 are unbounded columns")
    groups: dict[int, list[Box]] = {}
    for box in p.boxes():
        groups.setdefault(f_value(w, box), []).append(box)
    slid: set[Box] = set()
    for value, boxes in groups.items():
        for target in _ladder_cells_deepest(w, boxes[0], len(boxes)):
            slid.add(target)
    try:
        return _to_partition(slid)
    except NotAYoungDiagramError:
        offender = _first_offending_ladder(slid, groups, w)
        raise NotAYoungDiagramError(
            f"sliding {p} down the ladders of {w} leaves no diagram"
            f" (ladder f={offender} is the first to break row convexity)",
            boxes=slid,
            ladder=offender,
        ) from None


def _first_offending_ladder(boxes: set[Box], groups: dict[int, list[Box]], w: Wall) -> int:
    by_row: dict[int, list[int]] = {}
    for b in boxes:
        by_row.setdefault(b.row, []).append(b.col)
    for value in sorted(groups):
        for b in _ladder_cells_deepest(w, groups[value][0], len(groups[value])):
            cols = sorted(by_row.get(b.row, []))
            if cols != list(range(1, len(cols) + 1)):
                return value
    return min(groups, default=0)


def find_order_reversal(w1: Wall, w2: Wall, n: int) -> tuple[Box, Box] | None:
    """A cell pair whose f-order strictly reverses between w1 and w2, if any.

    Cells range over everything an n-box diagram can contain
    (row + col - 1 <= n). Farey neighbors admit no reversal; the check is
    only meaningful for neighbors (callers may verify with neighbor_check).
    """
    cells = [Box(r, c) for r in range(1, n + 1) for c in range(1, n + 2 - r)]
    for i, b1 in enumerate(cells):
        for b2 in cells[i + 1 :]:
            d1 = f_value(w1, b1) - f_value(w1, b2)
            d2 = f_value(w2, b1) - f_value(w2, b2)
            if d1 * d2 < 0:
                return (b1, b2) if d1 < 0 else (b2, b1)
    return None


__all__ = [
    "TIE_PAPER",
    "TIE_RULES",
    "TIE_SHALLOW",
    "NotAYoungDiagramError",
    "box_cmp",
    "chamber_partition",
    "f_value",
    "find_order_reversal",
    "ladder_positions",
    "neighbor_check",
    "rc_regularize",
]
