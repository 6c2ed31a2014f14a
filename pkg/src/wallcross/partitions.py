"""Integer partitions and Young diagram cells.

Diagrams are drawn in English notation: row 1 on top, column 1 on the
left. A cell (row, col) embeds into the fourth quadrant as the lattice
point (x, y) = (col, -row); all linear forms on cells use that embedding.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Box(NamedTuple):
    """A diagram cell, 1-indexed from the top-left corner."""

    row: int
    col: int

    @property
    def x(self) -> int:
        return self.col

    @property
    def y(self) -> int:
        return -self.row

    def transpose(self) -> "Box":
        return Box(self.col, self.row)


def box_residue(box: Box, e: int) -> int:
    """Content of the cell mod e, i.e. (col - row) % e."""
    if e < 2:
        raise ValueError(f"residue modulus must be >= 2, got {e}")
    return (box.col - box.row) % e


class Partition:
    """Weakly decreasing sequence of positive parts; immutable, hashable.

    Trailing zeros are accepted on input but never stored; the empty
    partition is a regular value.
    """

    __slots__ = ("_parts", "_size")

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and ps[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {ps}")
        self._parts = ps
        self._size = sum(ps)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the bracket format, e.g. "[3,1]"; "[]" is empty."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"partition must look like [3,1], got {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls()
        try:
            return cls(int(tok) for tok in body.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return self._size

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, idx):
        return self._parts[idx]

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self._parts) + "]"

    def __reduce__(self):
        return (Partition, (self._parts,))

    def __contains__(self, box: Box) -> bool:
        return 1 <= box.row <= len(self._parts) and 1 <= box.col <= self._parts[box.row - 1]

    def row_length(self, row: int) -> int:
        """Length of a 1-indexed row, 0 beyond the last row."""
        return self._parts[row - 1] if 1 <= row <= len(self._parts) else 0

    def exponent_form(self) -> str:
        """Multiplicity notation with part sizes ascending, e.g. "1^2 3^2"."""
        if not self._parts:
            return "-"
        out = []
        for value in sorted(set(self._parts)):
            out.append(f"{value}^{self._parts.count(value)}")
        return " ".join(out)

    def boxes(self) -> list[Box]:
        return [Box(r, c) for r, p in enumerate(self._parts, 1) for c in range(1, p + 1)]

    def transpose(self) -> "Partition":
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def is_regular(self, e: int) -> bool:
        """True iff no part value occurs e or more times."""
        if e < 2:
            raise ValueError(f"regularity base must be >= 2, got {e}")
        run = 0
        prev = None
        for p in self._parts:
            run = run + 1 if p == prev else 1
            if run >= e:
                return False
            prev = p
        return True

    def is_restricted(self, e: int) -> bool:
        """True iff consecutive part differences (with trailing 0) are < e."""
        if e < 2:
            raise ValueError(f"restrictedness base must be >= 2, got {e}")
        padded = self._parts + (0,)
        return all(padded[i] - padded[i + 1] < e for i in range(len(self._parts)))

    def addable_boxes(self) -> list[Box]:
        """Cells whose addition keeps a partition, by increasing row."""
        out = []
        for r in range(1, len(self._parts) + 2):
            here = self.row_length(r)
            above = self.row_length(r - 1) if r > 1 else None
            if above is None or here < above:
                out.append(Box(r, here + 1))
        return out

    def removable_boxes(self) -> list[Box]:
        """Cells whose removal keeps a partition, by increasing row."""
        out = []
        for r, p in enumerate(self._parts, 1):
            if p > self.row_length(r + 1):
                out.append(Box(r, p))
        return out

    def add_box(self, box: Box) -> "Partition":
        if box.col != self.row_length(box.row) + 1 or not (1 <= box.row <= len(self._parts) + 1):
            raise ValueError(f"{box} is not addable to {self}")
        grown = list(self._parts) + [0]
        grown[box.row - 1] += 1
        return Partition(grown)

    def remove_box(self, box: Box) -> "Partition":
        if not (1 <= box.row <= len(self._parts)) or box.col != self._parts[box.row - 1]:
            raise ValueError(f"{box} is not removable from {self}")
        shrunk = list(self._parts)
        shrunk[box.row - 1] -= 1
        return Partition(shrunk)

    def rim(self) -> list[Box]:
        """Border cells (i,j) with (i+1,j+1) outside, in path order.

        Path order: row 1 first, columns decreasing within a row, then
        row 2, and so on; row i contributes columns
        max(parts[i+1], 1) .. parts[i].
        """
        out = []
        for r, p in enumerate(self._parts, 1):
            lo = max(self.row_length(r + 1), 1)
            out.extend(Box(r, c) for c in range(p, lo - 1, -1))
        return out


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n exactly once, in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        yield Partition()
        return

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, n, [])
