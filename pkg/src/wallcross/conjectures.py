"""Experimental harnesses for the sign-sweep shape law and the good-box
difference law.

These check conjectured behaviour, so they report verdicts instead of
asserting them; only structural impossibilities (a chamber state with
three or more part sizes, a multi-box difference) count as hard
counterexamples.

Sign-sweep shape law. Every state of the plain sign sweep should have at
most two distinct part sizes, and there should be an increasing sequence
of threshold walls a_i/b_i such that each state strictly between
consecutive thresholds can be written with t parts equal z and y parts
equal x satisfying

    (a) z + y = b_i        (b) y + t + z - x = b_{i+1}

together with x*y + z*t = n. The equations do not orient the two blocks,
so both labelings are tried; with (a), (b) and the size identity holding,
x*b_i - y*(b_{i+1} - b_i) + b_i*(b_{i+1} - b_i) = n follows and is
asserted as a self-check of the fitter. Thresholds are not observable
directly, so detection searches for the shortest threshold chain (first
and last wall included) whose strict interiors all satisfy the equations;
failure to cover some wall is the reported counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from wallcross.crystal import good_addable
from wallcross.errors import NeitherRegularNorRestrictedError
from wallcross.farey import Wall, farey_walls
from wallcross.mullineux import e_rim, strip_e_rim
from wallcross.orbits import VARIANT_AUTO, VARIANT_AUTO_RESTRICTED, cross_wall, sign_orbit
from wallcross.partitions import Box, Partition, box_residue, enumerate_partitions

FIT_EXACT = "exact"
FIT_DEGENERATE = "degenerate"
FIT_NONE = "none"


@dataclass(frozen=True)
class TwoBlockShape:
    """t parts equal z and y parts equal x; None marks a free unknown."""

    x: int | None
    y: int
    z: int | None
    t: int

    def total(self) -> int | None:
        if self.x is None or self.z is None:
            return None
        return self.x * self.y + self.z * self.t


@dataclass(frozen=True)
class ShapeFit:
    kind: str
    shape: TwoBlockShape | None
    assignments: tuple[TwoBlockShape, ...]


def fit_two_block(p: Partition) -> ShapeFit:
    """Fit t parts of z plus y parts of x.

    Exactly two part sizes give the exact fit with z the smaller size (the
    reversed labeling is still listed as an assignment). One size or the
    empty partition is degenerate: both one-block labelings are returned
    with the unused size left free. Three or more sizes fit nothing.
    """
    sizes = sorted(set(p.parts))
    if len(sizes) > 2:
        return ShapeFit(FIT_NONE, None, ())
    if len(sizes) == 2:
        z, x = sizes
        t, y = p.parts.count(z), p.parts.count(x)
        shape = TwoBlockShape(x=x, y=y, z=z, t=t)
        return ShapeFit(FIT_EXACT, shape, (shape, TwoBlockShape(x=z, y=t, z=x, t=y)))
    if len(sizes) == 1:
        c, m = sizes[0], len(p.parts)
        return ShapeFit(
            FIT_DEGENERATE,
            None,
            (TwoBlockShape(x=c, y=m, z=None, t=0), TwoBlockShape(x=None, y=0, z=c, t=m)),
        )
    return ShapeFit(FIT_DEGENERATE, None, (TwoBlockShape(x=None, y=0, z=None, t=0),))


def _diophantine_holds(shape: TwoBlockShape, b_lo: int, b_hi: int, n: int) -> bool:
    return shape.x * b_lo - shape.y * (b_hi - b_lo) + b_lo * (b_hi - b_lo) == n


def solve_bracket(p: Partition, b_lo: int, b_hi: int, n: int) -> TwoBlockShape | None:
    """A concrete assignment satisfying (a), (b) and the size identity, or None."""
    for cand in fit_two_block(p).assignments:
        x, y, z, t = cand.x, cand.y, cand.z, cand.t
        if z is None:
            if t != 0:
                continue
            z = b_lo - y
            if z != b_hi + (x or 0) - y or z < 0:
                continue
        if x is None:
            if y != 0:
                continue
            x = y + t + z - b_hi
            if x < 0:
                continue
        shape = TwoBlockShape(x=x, y=y, z=z, t=t)
        if (
            shape.z + shape.y == b_lo
            and shape.y + shape.t + shape.z - shape.x == b_hi
            and shape.total() == n
        ):
            assert _diophantine_holds(shape, b_lo, b_hi, n), "fitter broke the linear identity"
            return shape
    return None


@dataclass
class SignWallRow:
    wall: Wall
    state: Partition
    role: str  # "threshold" | "interior"
    bracket: tuple[Wall, Wall] | None = None
    assignment: TwoBlockShape | None = None
    two_block_ok: bool = True


@dataclass
class SignReport:
    n: int
    variant: str
    walls: tuple[Wall, ...]
    states: tuple[Partition, ...]
    rows: list[SignWallRow]
    thresholds: list[Wall]
    sizes_ok: bool
    status: str  # "PASS" | "FAIL"
    counterexample: str | None = None

    @property
    def interior_count(self) -> int:
        return sum(1 for r in self.rows if r.role == "interior")

    @property
    def three_size_walls(self) -> list[Wall]:
        return [r.wall for r in self.rows if not r.two_block_ok]


def _threshold_chain(walls, states, n) -> tuple[list[int] | None, str | None]:
    """Shortest chain of threshold indices covering every other wall, by BFS."""
    k = len(walls)
    if k == 0:
        return [], None

    def edge_ok(i: int, j: int) -> bool:
        b_lo, b_hi = walls[i].base, walls[j].base
        return all(solve_bracket(states[m], b_lo, b_hi, n) is not None for m in range(i + 1, j))

    parent: list[int | None] = [None] * k
    seen = [False] * k
    seen[0] = True
    frontier = [0]
    while frontier and not seen[k - 1]:
        nxt = []
        for i in frontier:
            for j in range(i + 1, k):
                if not seen[j] and edge_ok(i, j):
                    seen[j] = True
                    parent[j] = i
                    nxt.append(j)
        frontier = nxt
    if not seen[k - 1]:
        blocked = next(m for m in range(k) if not seen[m])
        return None, f"wall {walls[blocked]} fits no consistent threshold bracket"
    chain = [k - 1]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    return sorted(chain), None


def check_sign_conjecture(
    n: int, variant: str = VARIANT_AUTO_RESTRICTED, allow_composite: bool = False
) -> SignReport:
    """Run the sign sweep and test the two-block shape law.

    The claim under test constrains only states strictly between
    consecutive thresholds: those must fit two blocks satisfying the
    bracket equations. States at thresholds are unconstrained, so a state
    with three part sizes merely forces a threshold there; such walls are
    still flagged in the report (sizes_ok / three_size_walls). The verdict
    is FAIL exactly when no threshold chain covers the sweep.
    """
    trace = sign_orbit(n, variant=variant, allow_composite=allow_composite)
    walls = tuple(s.wall for s in trace.steps)
    states = tuple(s.post for s in trace.steps)
    rows = [SignWallRow(wall=w, state=p, role="threshold") for w, p in zip(walls, states)]

    for row in rows:
        row.two_block_ok = fit_two_block(row.state).kind != FIT_NONE
    sizes_ok = all(row.two_block_ok for row in rows)

    counterexample = None
    thresholds: list[Wall] = []
    chain, blocked = _threshold_chain(walls, states, n)
    if chain is None:
        counterexample = blocked
    else:
        thresholds = [walls[i] for i in chain]
        for pos, idx in enumerate(chain[:-1]):
            lo, hi = idx, chain[pos + 1]
            for m in range(lo + 1, hi):
                rows[m].role = "interior"
                rows[m].bracket = (walls[lo], walls[hi])
                rows[m].assignment = solve_bracket(states[m], walls[lo].base, walls[hi].base, n)

    status = "PASS" if counterexample is None else "FAIL"
    return SignReport(
        n=n,
        variant=variant,
        walls=walls,
        states=states,
        rows=rows,
        thresholds=thresholds,
        sizes_ok=sizes_ok,
        status=status,
        counterexample=counterexample,
    )


@dataclass
class RimRemarkRow:
    wall: Wall
    state: Partition
    bracket: tuple[Wall, Wall]
    rim_matches_below_top: bool
    transposed_rim_matches: bool
    remainder_two_block: bool


@dataclass
class RimRemarkReport:
    n: int
    rows: list[RimRemarkRow]
    sign: SignReport


def check_rim_remark(n: int, variant: str = VARIANT_AUTO_RESTRICTED) -> RimRemarkReport:
    """Compare base-rims of interior states against their plain rims.

    For an interior state P with bracket denominators (b_lo, b_hi), the
    three reported verdicts are: the b_hi-rim of P equals rim(P) without
    the top row's cells; the b_lo-rim of P^t equals rim(P^t) without its
    top row; stripping one b_hi-rim leaves at most two part sizes.
    """
    sign = check_sign_conjecture(n, variant=variant)
    rows = []
    for row in sign.rows:
        if row.role != "interior" or row.bracket is None:
            continue
        b_lo, b_hi = row.bracket[0].base, row.bracket[1].base
        p = row.state
        pt = p.transpose()
        rows.append(
            RimRemarkRow(
                wall=row.wall,
                state=p,
                bracket=row.bracket,
                rim_matches_below_top=_rim_below_top_matches(p, b_hi),
                transposed_rim_matches=_rim_below_top_matches(pt, b_lo),
                remainder_two_block=fit_two_block(_strip(p, b_hi)).kind != FIT_NONE,
            )
        )
    return RimRemarkReport(n=n, rows=rows, sign=sign)


def _rim_below_top_matches(p: Partition, e: int) -> bool:
    below_top = {b for b in p.rim() if b.row >= 2}
    return set(e_rim(p, e)) == below_top


def _strip(p: Partition, e: int) -> Partition:
    return strip_e_rim(p, e) if p else p


SENSE_DIRECT = "direct"
SENSE_CONJUGATE = "conjugate"
BASE_UPCOMING = "upcoming"
BASE_LAST = "last"
ALL_SEMANTICS = (
    (SENSE_DIRECT, BASE_UPCOMING),
    (SENSE_DIRECT, BASE_LAST),
    (SENSE_CONJUGATE, BASE_UPCOMING),
    (SENSE_CONJUGATE, BASE_LAST),
)


def semantics_key(sense: str, base_rule: str) -> str:
    return f"{sense}-{base_rule}"


@dataclass
class ChamberDiff:
    index: int
    last_wall: Wall | None
    next_wall: Wall | None
    small_state: Partition
    large_state: Partition
    diff: Box | None
    single_box: bool
    goodness: dict[str, bool | None] = field(default_factory=dict)


@dataclass
class GoodBoxDiffReport:
    small: Partition
    large: Partition
    chambers: list[ChamberDiff]
    single_box_everywhere: bool
    obstruction: str | None = None

    def hard_counterexample(self) -> ChamberDiff | None:
        for ch in self.chambers:
            if not ch.single_box:
                return ch
        return None


def _box_difference(small: Partition, large: Partition) -> Box | None:
    extra = set(large.boxes()) - set(small.boxes())
    if len(extra) == 1 and len(set(small.boxes()) - set(large.boxes())) == 0:
        return extra.pop()
    return None


def _is_good_added_box(state: Partition, box: Box, base: int, sense: str) -> bool:
    if sense == SENSE_CONJUGATE:
        state, box = state.transpose(), box.transpose()
    return good_addable(state, base, box_residue(box, base)) == box


def check_goodbox_pair(
    small: Partition,
    large: Partition,
    semantics=ALL_SEMANTICS,
    variant: str = VARIANT_AUTO,
) -> GoodBoxDiffReport:
    """Co-evolve a first-row pair through one merged ascending sweep.

    Each diagram only crosses walls of its own Farey order (denominator at
    most its size), so at a wall that exists only for the larger diagram
    the smaller one stands still. If either diagram leaves the domain of
    both involution variants, the pair's sweep stops there and the report
    records the obstruction; verdicts cover the chambers that exist.
    """
    merged = list(farey_walls(large.size))
    chambers: list[ChamberDiff] = []
    s_state, l_state = small, large
    obstruction = None
    for idx in range(len(merged) + 1):
        last_wall = merged[idx - 1] if idx >= 1 else None
        next_wall = merged[idx] if idx < len(merged) else None
        diff = _box_difference(s_state, l_state)
        chamber = ChamberDiff(
            index=idx,
            last_wall=last_wall,
            next_wall=next_wall,
            small_state=s_state,
            large_state=l_state,
            diff=diff,
            single_box=diff is not None,
        )
        for sense, base_rule in semantics:
            key = semantics_key(sense, base_rule)
            wall = next_wall if base_rule == BASE_UPCOMING else last_wall
            if diff is None or wall is None:
                chamber.goodness[key] = None
            else:
                chamber.goodness[key] = _is_good_added_box(s_state, diff, wall.base, sense)
        chambers.append(chamber)
        if next_wall is not None:
            try:
                if next_wall.base <= small.size:
                    s_state = cross_wall(s_state, next_wall, variant).post
                l_state = cross_wall(l_state, next_wall, variant).post
            except NeitherRegularNorRestrictedError as exc:
                obstruction = f"stuck at wall {next_wall}: {exc}"
                break
    return GoodBoxDiffReport(
        small=small,
        large=large,
        chambers=chambers,
        single_box_everywhere=all(c.single_box for c in chambers),
        obstruction=obstruction,
    )


def check_goodbox_conjecture(
    m: int, semantics=ALL_SEMANTICS, variant: str = VARIANT_AUTO
) -> list[GoodBoxDiffReport]:
    """All first-row pairs with larger size m, in enumeration order."""
    if m < 2:
        raise ValueError(f"need pairs of sizes m-1 and m with m >= 2, got {m}")
    reports = []
    for small in enumerate_partitions(m - 1):
        large = small.add_box(Box(1, small.row_length(1) + 1))
        reports.append(check_goodbox_pair(small, large, semantics=semantics, variant=variant))
    return reports
