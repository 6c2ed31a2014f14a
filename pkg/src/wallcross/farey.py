"""Reduced fractions in (0, 1] and Farey wall sequences."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterator


@total_ordering
@dataclass(frozen=True)
class Wall:
    """A reduced fraction a/b with 0 < a/b <= 1.

    The denominator b is the Mullineux base used when crossing the wall.
    Wall(1, 1) is allowed only as the virtual terminal bound; it is never
    itself crossed.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.b < 1 or self.a < 1:
            raise ValueError(f"wall must be a positive fraction, got {self.a}/{self.b}")
        if self.a > self.b:
            raise ValueError(f"wall must not exceed 1, got {self.a}/{self.b}")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"wall must be in lowest terms, got {self.a}/{self.b}")

    @property
    def base(self) -> int:
        return self.b

    def value(self) -> Fraction:
        return Fraction(self.a, self.b)

    def __lt__(self, other: "Wall") -> bool:
        return self.a * other.b < other.a * self.b

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


TERMINAL = Wall(1, 1)


def parse_wall(text: str) -> Wall:
    """Parse "a/b" (or "1") into a Wall, reducing with a warning if needed."""
    s = text.strip()
    if s == "1":
        return TERMINAL
    try:
        a_str, b_str = s.split("/")
        a, b = int(a_str), int(b_str)
    except ValueError:
        raise ValueError(f"wall must look like a/b, got {text!r}") from None
    if a < 1 or b < 1:
        raise ValueError(f"wall must be a positive fraction, got {text!r}")
    g = gcd(a, b)
    if g != 1:
        warnings.warn(f"wall {text!r} is not in lowest terms; using {a // g}/{b // g}")
        a, b = a // g, b // g
    return Wall(a, b)


def neighbor_check(w1: Wall, w2: Wall) -> bool:
    """True iff w1 < w2 are Farey neighbors (unimodular: a2*b1 - a1*b2 = 1)."""
    return w2.a * w1.b - w1.a * w2.b == 1


@dataclass(frozen=True)
class WallSequence:
    """Ascending walls of one Farey order below an exclusive upper bound."""

    order: int
    upper: Wall
    walls: tuple[Wall, ...]

    def __iter__(self) -> Iterator[Wall]:
        return iter(self.walls)

    def __len__(self) -> int:
        return len(self.walls)

    def __getitem__(self, idx):
        return self.walls[idx]


def farey_walls(n: int, upper: Wall = TERMINAL) -> WallSequence:
    """All reduced fractions with denominator <= n strictly between 0 and upper.

    Uses the next-term recurrence of the Farey sequence, so each wall costs
    O(1) to produce.
    """
    if n < 1:
        raise ValueError(f"Farey order must be >= 1, got {n}")
    walls: list[Wall] = []
    pa, pb = 0, 1
    ca, cb = 1, n
    while ca * upper.b < upper.a * cb:
        walls.append(Wall(ca, cb))
        k = (n + pb) // cb
        pa, pb, ca, cb = ca, cb, k * ca - pa, k * cb - pb
    return WallSequence(order=n, upper=upper, walls=tuple(walls))
