"""Report serialization: JSON for machines, CSV for tables, text for humans.

Every report embeds the run configuration and the tool version so a file
is reproducible on its own. JSON output is built from plain dicts in a
fixed insertion order and is byte-stable for a fixed configuration.
"""

from __future__ import annotations

import csv
import io
import json

import wallcross
from wallcross.conjectures import (
    ALL_SEMANTICS,
    GoodBoxDiffReport,
    RimRemarkReport,
    SignReport,
    semantics_key,
)
from wallcross.orbits import OrbitTrace
from wallcross.partitions import Partition
from wallcross.verify import TheoremSummary


def run_header(config: dict) -> dict:
    return {"tool": "wallcross", "version": wallcross.__version__, "config": config}


def partition_json(p: Partition) -> list[int]:
    return list(p.parts)


def step_dict(step) -> dict:
    out = {
        "wall": str(step.wall),
        "base": step.base,
        "variant": step.variant,
        "image": partition_json(step.image),
        "post": partition_json(step.post),
    }
    if step.note:
        out["note"] = step.note
    return out


def trace_dict(trace: OrbitTrace) -> dict:
    out = {
        "start": partition_json(trace.start),
        "mode": trace.mode,
        "steps": [step_dict(s) for s in trace.steps],
    }
    if trace.obstruction:
        out["obstruction"] = trace.obstruction
    return out


def trace_text(trace: OrbitTrace) -> str:
    lines = [f"start {trace.start} ({trace.mode})"]
    for s in trace.steps:
        note = f"  [{s.note}]" if s.note else ""
        lines.append(f"  x {s.wall} ({s.variant}, base {s.base}): image {s.image} -> {s.post}{note}")
    if trace.obstruction:
        lines.append(f"  ! {trace.obstruction}")
    return "\n".join(lines)


def theorem_dict(summary: TheoremSummary) -> dict:
    return {
        "n_max": summary.n_max,
        "tie": summary.tie,
        "status": "PASS" if summary.ok else "FAIL",
        "results": [
            {
                "n": r.n,
                "chambers": r.chambers,
                "status": "PASS" if r.ok else "FAIL",
                "seconds": round(r.seconds, 4),
                **({"first_failure": r.first_failure} if r.first_failure else {}),
            }
            for r in summary.results
        ],
    }


def theorem_text(summary: TheoremSummary) -> str:
    lines = [
        f"n={r.n:>3} chambers={r.chambers:>3} {'PASS' if r.ok else 'FAIL ' + str(r.first_failure)}"
        f" ({r.seconds:.3f}s)"
        for r in summary.results
    ]
    lines.append(f"overall: {'PASS' if summary.ok else 'FAIL'}")
    return "\n".join(lines)


def _shape_cells(shape) -> list:
    if shape is None:
        return ["", "", "", ""]
    return [shape.x, shape.y, shape.z, shape.t]


def sign_dict(report: SignReport) -> dict:
    return {
        "n": report.n,
        "variant": report.variant,
        "status": report.status,
        "sizes_ok": report.sizes_ok,
        "thresholds": [str(w) for w in report.thresholds],
        "interior_walls": report.interior_count,
        "counterexample": report.counterexample,
        "walls": [
            {
                "wall": str(row.wall),
                "state": partition_json(row.state),
                "shape": row.state.exponent_form(),
                "role": row.role,
                "bracket": [str(row.bracket[0]), str(row.bracket[1])] if row.bracket else None,
                "fit": (
                    {"x": row.assignment.x, "y": row.assignment.y,
                     "z": row.assignment.z, "t": row.assignment.t}
                    if row.assignment
                    else None
                ),
                "two_block_ok": row.two_block_ok,
            }
            for row in report.rows
        ],
    }


def sign_csv(report: SignReport, config: dict) -> str:
    buf = io.StringIO()
    buf.write(f"# wallcross {wallcross.__version__} check-sign {json.dumps(config)}\n")
    writer = csv.writer(buf)
    writer.writerow(
        ["wall", "role", "lower_wall", "upper_wall", "state", "x", "y", "z", "t",
         "two_block_ok", "equations_ok"]
    )
    for row in report.rows:
        lo, hi = (str(row.bracket[0]), str(row.bracket[1])) if row.bracket else ("", "")
        writer.writerow(
            [str(row.wall), row.role, lo, hi, str(row.state)]
            + _shape_cells(row.assignment)
            + [row.two_block_ok, row.assignment is not None if row.role == "interior" else ""]
        )
    return buf.getvalue()


def sign_text(report: SignReport) -> str:
    lines = [f"sign sweep n={report.n} ({report.variant}): {report.status}"]
    lines.append("thresholds: " + (" < ".join(str(w) for w in report.thresholds) or "(none)"))
    for row in report.rows:
        mark = "T" if row.role == "threshold" else " "
        fit = ""
        if row.assignment:
            a = row.assignment
            fit = f"  x={a.x} y={a.y} z={a.z} t={a.t}"
        lines.append(f" {mark} {str(row.wall):>6}  {row.state.exponent_form():<12}{fit}")
    if report.counterexample:
        lines.append(f"counterexample: {report.counterexample}")
    return "\n".join(lines)


def rim_dict(report: RimRemarkReport) -> dict:
    return {
        "n": report.n,
        "thresholds": [str(w) for w in report.sign.thresholds],
        "rows": [
            {
                "wall": str(r.wall),
                "state": partition_json(r.state),
                "bracket": [str(r.bracket[0]), str(r.bracket[1])],
                "rim_matches_below_top": r.rim_matches_below_top,
                "transposed_rim_matches": r.transposed_rim_matches,
                "remainder_two_block": r.remainder_two_block,
            }
            for r in report.rows
        ],
    }


def goodbox_pair_dict(report: GoodBoxDiffReport) -> dict:
    return {
        "small": partition_json(report.small),
        "large": partition_json(report.large),
        "single_box_everywhere": report.single_box_everywhere,
        "obstruction": report.obstruction,
        "chambers": [
            {
                "index": ch.index,
                "after_wall": str(ch.last_wall) if ch.last_wall else None,
                "next_wall": str(ch.next_wall) if ch.next_wall else None,
                "small_state": partition_json(ch.small_state),
                "large_state": partition_json(ch.large_state),
                "diff": list(ch.diff) if ch.diff else None,
                "single_box": ch.single_box,
                "good": ch.goodness,
            }
            for ch in report.chambers
        ],
    }


def goodbox_csv(reports: list[GoodBoxDiffReport], config: dict) -> str:
    buf = io.StringIO()
    buf.write(f"# wallcross {wallcross.__version__} check-goodbox {json.dumps(config)}\n")
    writer = csv.writer(buf)
    sem_cols = [semantics_key(sense, rule) for sense, rule in ALL_SEMANTICS]
    writer.writerow(
        ["small", "large", "chamber", "after_wall", "next_wall", "small_state",
         "large_state", "diff_row", "diff_col", "single_box"] + sem_cols
    )
    for rep in reports:
        for ch in rep.chambers:
            row = [
                str(rep.small), str(rep.large), ch.index,
                str(ch.last_wall) if ch.last_wall else "",
                str(ch.next_wall) if ch.next_wall else "",
                str(ch.small_state), str(ch.large_state),
                ch.diff.row if ch.diff else "", ch.diff.col if ch.diff else "",
                ch.single_box,
            ]
            row += ["" if ch.goodness.get(c) is None else ch.goodness[c] for c in sem_cols]
            writer.writerow(row)
    return buf.getvalue()


def goodbox_text(reports: list[GoodBoxDiffReport]) -> str:
    lines = []
    for rep in reports:
        status = "ok" if rep.single_box_everywhere else "HARD MISMATCH"
        if rep.obstruction:
            status += f" ({rep.obstruction})"
        lines.append(f"pair {rep.small} -> {rep.large}: {status}")
        for ch in rep.chambers:
            where = f"({ch.last_wall or '0'}, {ch.next_wall or '1'})"
            verdicts = " ".join(
                f"{key}={'-' if v is None else ('Y' if v else 'N')}"
                for key, v in ch.goodness.items()
            )
            diff = ch.diff if ch.diff else "NOT A SINGLE BOX"
            lines.append(
                f"  {where:>14} {str(ch.small_state):<14} vs {str(ch.large_state):<14}"
                f" diff {diff}  {verdicts}"
            )
    return "\n".join(lines)


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
