"""Bulk verification drivers: the chamber-chain equivalence and sweeps.

The central check ties the three independent routes together: for every
size n and every wall w of the Farey order (plus the terminal bound 1/1),
the trivial orbit's state after crossing w must equal the chamber diagram
of the next wall, and must also equal the ladder regularization of the
previous chamber at w.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from wallcross.farey import TERMINAL, Wall, farey_walls
from wallcross.ladders import TIE_SHALLOW, chamber_partition, rc_regularize
from wallcross.orbits import VARIANT_AUTO, OrbitTrace, compose_orbit, plain_orbit
from wallcross.partitions import Partition, enumerate_partitions

JOBS_ENV_VAR = "WALLCROSS_JOBS"


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass
class SizeResult:
    n: int
    chambers: int
    ok: bool
    seconds: float
    first_failure: str | None = None


@dataclass
class TheoremSummary:
    n_max: int
    tie: str
    results: list[SizeResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def verify_size(n: int, tie: str = TIE_SHALLOW) -> SizeResult:
    """Three-way check for one size: orbit == chamber == regularization."""
    started = time.perf_counter()
    walls = list(farey_walls(n)) + [TERMINAL]
    failure = None
    trace = compose_orbit(Partition([n]))
    states = trace.states()
    cascade = Partition([n])
    for j, upcoming in enumerate(walls):
        chamber = chamber_partition(n, upcoming, tie)
        if j > 0:
            cascade = rc_regularize(cascade, walls[j - 1])
        orbit_state = states[j]
        if not (orbit_state == chamber == cascade):
            failure = (
                f"n={n} after wall {walls[j - 1] if j else 'start'}: orbit {orbit_state},"
                f" chamber({upcoming}) {chamber}, cascade {cascade}"
            )
            break
    return SizeResult(
        n=n,
        chambers=len(walls),
        ok=failure is None,
        seconds=time.perf_counter() - started,
        first_failure=failure,
    )


def run_verify_theorem2(n_max: int, tie: str = TIE_SHALLOW) -> TheoremSummary:
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    return TheoremSummary(n_max=n_max, tie=tie, results=[verify_size(n, tie) for n in range(1, n_max + 1)])


def _orbit_unit(args: tuple[tuple[int, ...], tuple[int, int] | None, str, str]) -> OrbitTrace:
    parts, upper, variant, mode = args
    p = Partition(parts)
    bound = Wall(*upper) if upper else TERMINAL
    if mode == "plain":
        return plain_orbit(p, bound, variant, partial=True)
    return compose_orbit(p, bound, variant, partial=True)


def orbit_sweep(
    n: int,
    upper: Wall = TERMINAL,
    variant: str = VARIANT_AUTO,
    mode: str = "crossing",
    jobs: int | None = None,
) -> list[OrbitTrace]:
    """Orbits of every partition of n, in enumeration order.

    Work units are independent; results are assembled in enumeration order
    so the output does not depend on the parallelism degree. Units whose
    sweep leaves the involutions' domain carry an obstruction note instead
    of failing the run.
    """
    jobs = default_jobs() if jobs is None else max(1, jobs)
    units = [(p.parts, (upper.a, upper.b), variant, mode) for p in enumerate_partitions(n)]
    if jobs == 1 or len(units) <= 1:
        return [_orbit_unit(u) for u in units]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_orbit_unit, units, chunksize=max(1, len(units) // (4 * jobs))))
