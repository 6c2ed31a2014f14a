"""Wall-crossing steps and full sweeps across ascending walls.

A crossing step at wall a/b applies the base-b Mullineux involution and
then transposes; a plain step applies the involution without the
transpose (used for the sign-representation sweeps). Sweeps cross walls
in ascending order, smallest first.

The variant decides which involution applies at base b: "regular" needs a
b-regular state, "restricted" uses the conjugated involution on
b-restricted states, and "auto" prefers regular, falling back to
restricted. "auto-restricted" is the mirror preference; sign sweeps
default to it because the starting column is restricted but never
n-regular, while later states can lose restrictedness and need the
fallback. When both variants apply and disagree, the step keeps the
preferred result and records a note.
"""

from __future__ import annotations

from dataclasses import dataclass

from wallcross.errors import NeitherRegularNorRestrictedError
from wallcross.farey import TERMINAL, Wall, farey_walls
from wallcross.mullineux import mullineux, mullineux_restricted
from wallcross.partitions import Partition

VARIANT_AUTO = "auto"
VARIANT_REGULAR = "regular"
VARIANT_RESTRICTED = "restricted"
VARIANT_AUTO_RESTRICTED = "auto-restricted"
VARIANTS = (VARIANT_AUTO, VARIANT_REGULAR, VARIANT_RESTRICTED, VARIANT_AUTO_RESTRICTED)

MODE_CROSSING = "crossing"
MODE_PLAIN = "plain"


@dataclass(frozen=True)
class StepRecord:
    """One wall crossing: sizes match and post = image^t in crossing mode."""

    wall: Wall
    base: int
    variant: str
    pre: Partition
    image: Partition
    post: Partition
    note: str | None = None


@dataclass(frozen=True)
class OrbitTrace:
    start: Partition
    mode: str
    steps: tuple[StepRecord, ...]
    obstruction: str | None = None

    def states(self) -> list[Partition]:
        """Chamber states: the start followed by each post-state."""
        return [self.start] + [s.post for s in self.steps]

    @property
    def final(self) -> Partition:
        return self.steps[-1].post if self.steps else self.start


def _involution(p: Partition, base: int, variant: str) -> tuple[Partition, str, str | None]:
    """Resolve the variant and return (image, used_variant, note)."""
    if variant == VARIANT_REGULAR:
        return mullineux(p, base), VARIANT_REGULAR, None
    if variant == VARIANT_RESTRICTED:
        return mullineux_restricted(p, base), VARIANT_RESTRICTED, None
    if variant not in (VARIANT_AUTO, VARIANT_AUTO_RESTRICTED):
        raise ValueError(f"unknown variant {variant!r}")
    regular_ok = p.is_regular(base)
    restricted_ok = p.is_restricted(base)
    if not regular_ok and not restricted_ok:
        raise NeitherRegularNorRestrictedError(
            f"{p} is neither {base}-regular nor {base}-restricted"
        )
    prefer_regular = variant == VARIANT_AUTO
    if regular_ok and (prefer_regular or not restricted_ok):
        image, used = mullineux(p, base), VARIANT_REGULAR
        other = mullineux_restricted(p, base) if restricted_ok else image
    else:
        image, used = mullineux_restricted(p, base), VARIANT_RESTRICTED
        other = mullineux(p, base) if regular_ok else image
    note = None
    if other != image:
        note = f"variants disagree: {used} {image}, alternative {other}"
    return image, used, note


def _step(p: Partition, w: Wall, variant: str, mode: str) -> StepRecord:
    image, used, note = _involution(p, w.base, variant)
    post = image.transpose() if mode == MODE_CROSSING else image
    return StepRecord(wall=w, base=w.base, variant=used, pre=p, image=image, post=post, note=note)


def cross_wall(p: Partition, w: Wall, variant: str = VARIANT_AUTO) -> StepRecord:
    """One crossing step: post = transpose(involution(p))."""
    return _step(p, w, variant, MODE_CROSSING)


def _sweep(start: Partition, walls, variant: str, mode: str, partial: bool = False) -> OrbitTrace:
    steps = []
    state = start
    obstruction = None
    for w in walls:
        try:
            record = _step(state, w, variant, mode)
        except NeitherRegularNorRestrictedError as exc:
            if not partial:
                raise
            obstruction = f"stuck at wall {w}: {exc}"
            break
        steps.append(record)
        state = record.post
    return OrbitTrace(start=start, mode=mode, steps=tuple(steps), obstruction=obstruction)


def compose_orbit(
    p: Partition, upper: Wall = TERMINAL, variant: str = VARIANT_AUTO, partial: bool = False
) -> OrbitTrace:
    """Cross every wall of the partition's Farey order below `upper` (exclusive).

    Orbits of non-trivial starts can leave the domain of both involution
    variants; with partial=True the trace stops there and records the
    obstruction instead of raising.
    """
    walls = farey_walls(p.size, upper) if p.size >= 1 else ()
    return _sweep(p, walls, variant, MODE_CROSSING, partial)


def plain_orbit(
    p: Partition,
    upper: Wall = TERMINAL,
    variant: str = VARIANT_AUTO_RESTRICTED,
    partial: bool = False,
) -> OrbitTrace:
    """Sweep without transposes: each post-state is the involution image."""
    walls = farey_walls(p.size, upper) if p.size >= 1 else ()
    return _sweep(p, walls, variant, MODE_PLAIN, partial)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def sign_orbit(
    n: int,
    through: Wall | None = None,
    variant: str = VARIANT_AUTO_RESTRICTED,
    allow_composite: bool = False,
) -> OrbitTrace:
    """Plain sweep of the height-n column, crossing walls up to and
    including `through` (the whole Farey range when None).

    The column 1^n is e-restricted for every e but never n-regular, so the
    restricted-preferring variant is the default; each step records the
    variant it used.
    """
    if not allow_composite and not is_prime(n):
        raise ValueError(f"sign sweeps expect a prime size, got {n}")
    start = Partition([1] * n)
    walls = [w for w in farey_walls(n) if through is None or w <= through]
    return _sweep(start, walls, variant, MODE_PLAIN)
