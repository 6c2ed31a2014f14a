"""Residue signatures and good addable/removable cells.

For a base e and residue i, the signature word lists the addable (+) and
removable (-) cells of residue i read bottom-to-top (rows strictly
decreasing). Cancelling adjacent "-+" pairs until none remain leaves a
word of shape +^a -^b. The first surviving "-" in reading order (the
lowest such cell in the diagram) is the good removable cell; the last
surviving "+" (the topmost) is the good addable cell.

This orientation is pinned by two facts checked in the test suite: the
base-2 Mullineux involution must be the identity on 2-regular partitions,
and the chamber diagrams of the trivial orbit must grow by good cells.
The mirrored orientation breaks both.
"""

from __future__ import annotations

from dataclasses import dataclass

from wallcross.partitions import Box, Partition, box_residue

ADDABLE = "+"
REMOVABLE = "-"


@dataclass(frozen=True)
class SignatureWord:
    """Signed residue-i cells of one partition, bottom-to-top."""

    entries: tuple[tuple[Box, str], ...]
    residue: int
    base: int

    def word(self) -> str:
        return "".join(sign for _, sign in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _check_residue(e: int, i: int) -> None:
    if e < 2:
        raise ValueError(f"base must be >= 2, got {e}")
    if not 0 <= i < e:
        raise ValueError(f"residue must lie in [0, {e}), got {i}")


def signature(p: Partition, e: int, i: int) -> SignatureWord:
    """The unreduced signature word of residue i at base e."""
    _check_residue(e, i)
    signed = [(b, ADDABLE) for b in p.addable_boxes() if box_residue(b, e) == i]
    signed += [(b, REMOVABLE) for b in p.removable_boxes() if box_residue(b, e) == i]
    signed.sort(key=lambda entry: -entry[0].row)
    return SignatureWord(tuple(signed), residue=i, base=e)


def reduced_signature(p: Partition, e: int, i: int) -> SignatureWord:
    """Signature word after cancelling adjacent "-+" pairs; shape +^a -^b."""
    raw = signature(p, e, i)
    stack: list[tuple[Box, str]] = []
    for entry in raw.entries:
        if entry[1] == ADDABLE and stack and stack[-1][1] == REMOVABLE:
            stack.pop()
        else:
            stack.append(entry)
    return SignatureWord(tuple(stack), residue=i, base=e)


def good_removable(p: Partition, e: int, i: int) -> Box | None:
    """Lowest surviving removable cell of residue i, or None."""
    for box, sign in reduced_signature(p, e, i).entries:
        if sign == REMOVABLE:
            return box
    return None


def good_addable(p: Partition, e: int, i: int) -> Box | None:
    """Topmost surviving addable cell of residue i, or None."""
    found = None
    for box, sign in reduced_signature(p, e, i).entries:
        if sign == ADDABLE:
            found = box
    return found
