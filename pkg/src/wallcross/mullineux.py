"""The e-Mullineux involution and its rim-symbol certificate.

Two independent algorithms live here. The primary one computes the
involution by the good-box recursion: strip the good removable cell of
the smallest residue i, recurse, then add the good addable cell of
residue -i mod e to the image. The second builds the classical symbol by
stripping e-rims and is used only to certify results: the image's symbol
must have the same rim sizes and row counts a_i - r_i + eps_i, with
eps_i = 0 exactly when e divides a_i. The symbol determines an e-regular
partition uniquely, so agreement certifies the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from wallcross.crystal import good_addable, good_removable
from wallcross.errors import ConventionError
from wallcross.partitions import Box, Partition


def e_rim(p: Partition, e: int) -> list[Box]:
    """Mullineux's e-rim: the rim walked in segments of e cells.

    When a segment fills in row r, the walk skips the rest of row r's rim
    and the next segment starts on row r+1's rim; the final segment may be
    short. Removing the result always leaves a partition.
    """
    if not p:
        raise ValueError("the empty partition has no rim")
    if e < 2:
        raise ValueError(f"base must be >= 2, got {e}")
    path = p.rim()
    taken: list[Box] = []
    idx = 0
    while idx < len(path):
        count = 0
        while idx < len(path) and count < e:
            taken.append(path[idx])
            count += 1
            idx += 1
        if count == e and idx < len(path):
            row = taken[-1].row
            while idx < len(path) and path[idx].row == row:
                idx += 1
    return taken


def strip_e_rim(p: Partition, e: int) -> Partition:
    """The partition left after removing the e-rim."""
    lowest_taken: dict[int, int] = {}
    for box in e_rim(p, e):
        lowest_taken[box.row] = min(box.col, lowest_taken.get(box.row, box.col))
    rows = [lowest_taken.get(r, p.row_length(r) + 1) - 1 for r in range(1, len(p) + 1)]
    return Partition(rows)


@dataclass(frozen=True)
class MullineuxSymbol:
    """Per-pass e-rim sizes and row counts recorded while stripping to empty."""

    base: int
    sizes: tuple[int, ...]
    rows: tuple[int, ...]

    def epsilons(self) -> tuple[int, ...]:
        return tuple(0 if a % self.base == 0 else 1 for a in self.sizes)

    def mirrored_rows(self) -> tuple[int, ...]:
        """Row counts the image's symbol must carry: a_i - r_i + eps_i."""
        return tuple(a - r + eps for a, r, eps in zip(self.sizes, self.rows, self.epsilons()))

    def total(self) -> int:
        return sum(self.sizes)


def mullineux_symbol(p: Partition, e: int) -> MullineuxSymbol:
    if not p.is_regular(e):
        raise ValueError(f"{p} is not {e}-regular")
    sizes: list[int] = []
    rows: list[int] = []
    cur = p
    while cur:
        rim = e_rim(cur, e)
        sizes.append(len(rim))
        rows.append(len(cur))
        cur = strip_e_rim(cur, e)
    return MullineuxSymbol(base=e, sizes=tuple(sizes), rows=tuple(rows))


@lru_cache(maxsize=None)
def _mullineux(parts: tuple[int, ...], e: int) -> tuple[int, ...]:
    p = Partition(parts)
    if not p:
        return ()
    for i in range(e):
        gone = good_removable(p, e, i)
        if gone is None:
            continue
        image = Partition(_mullineux(p.remove_box(gone).parts, e))
        mate = good_addable(image, e, (-i) % e)
        if mate is None:
            raise ConventionError(
                f"no good addable cell of residue {(-i) % e} on {image} at base {e}"
            )
        return image.add_box(mate).parts
    raise ConventionError(f"no residue of {p} has a good removable cell at base {e}")


def mullineux(p: Partition, e: int) -> Partition:
    """The e-Mullineux image of an e-regular partition (good-box recursion)."""
    if e < 2:
        raise ValueError(f"base must be >= 2, got {e}")
    if not p.is_regular(e):
        raise ValueError(f"{p} is not {e}-regular")
    return Partition(_mullineux(p.parts, e))


def mullineux_restricted(p: Partition, e: int) -> Partition:
    """Conjugated variant for e-restricted partitions: t o M_e o t."""
    if not p.is_restricted(e):
        raise ValueError(f"{p} is not {e}-restricted")
    return mullineux(p.transpose(), e).transpose()


def symbol_certificate(p: Partition, image: Partition, e: int) -> bool:
    """Check image against p via the symbol law, independently of the recursion."""
    if p.size != image.size:
        raise ValueError(f"size mismatch: {p} vs {image}")
    sym = mullineux_symbol(p, e)
    other = mullineux_symbol(image, e)
    return other.sizes == sym.sizes and other.rows == sym.mirrored_rows()
