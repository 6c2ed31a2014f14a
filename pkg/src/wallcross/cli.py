"""Command-line front end.

Exit codes: 0 all checks pass, 1 counterexample or failed check, 2 usage
error, 3 internal invariant violation. Report-producing subcommands write
figures next to the delimited output (disable with --no-figures, redirect
with --figures DIR).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import wallcross
from wallcross import reports
from wallcross.conjectures import (
    ALL_SEMANTICS,
    check_goodbox_conjecture,
    check_sign_conjecture,
    fit_two_block,
    semantics_key,
)
from wallcross.crystal import good_addable, good_removable, reduced_signature, signature
from wallcross.errors import ConventionError, NeitherRegularNorRestrictedError, NotAYoungDiagramError
from wallcross.farey import TERMINAL, farey_walls, neighbor_check, parse_wall
from wallcross.ladders import TIE_RULES, TIE_SHALLOW, chamber_partition, rc_regularize
from wallcross.mullineux import mullineux, mullineux_restricted, mullineux_symbol
from wallcross.orbits import (
    MODE_CROSSING,
    MODE_PLAIN,
    VARIANT_AUTO,
    VARIANT_REGULAR,
    VARIANT_RESTRICTED,
    VARIANTS,
    compose_orbit,
    is_prime,
    plain_orbit,
)
from wallcross.partitions import Partition
from wallcross.verify import default_jobs, orbit_sweep, run_verify_theorem2

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

SEMANTICS_CHOICES = ["all"] + [semantics_key(sense, rule) for sense, rule in ALL_SEMANTICS]


def _common_flags(sub, formats=("text", "json"), tie=False, variant=False, jobs=False):
    sub.add_argument("--format", choices=formats, default=formats[0], help="output format")
    sub.add_argument("--out", type=Path, default=None, help="write output to this file")
    sub.add_argument("--figures", type=Path, default=None,
                     help="directory for figures (default: next to --out)")
    sub.add_argument("--no-figures", action="store_true", help="skip figure rendering")
    if tie:
        sub.add_argument("--tie", choices=TIE_RULES, default=TIE_SHALLOW,
                         help="tie rule for equal order values")
    if variant:
        sub.add_argument("--variant", choices=VARIANTS, default=VARIANT_AUTO)
    if jobs:
        sub.add_argument("--jobs", type=int, default=None,
                         help=f"worker processes (default: $WALLCROSS_JOBS or cores, now {default_jobs()})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallcross",
        description="Wall-crossing combinatorics on partitions: Mullineux sweeps, "
                    "chamber diagrams, and conjecture harnesses.",
    )
    parser.add_argument("--version", action="version", version=f"wallcross {wallcross.__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("mull", help="apply the base-e Mullineux involution")
    p.add_argument("-p", "--partition", required=True)
    p.add_argument("-e", "--base", type=int, required=True)
    p.add_argument("--variant", choices=[VARIANT_REGULAR, VARIANT_RESTRICTED],
                   default=VARIANT_REGULAR)
    p.add_argument("--certify", action="store_true",
                   help="also check the rim-symbol law and print both symbols")
    _common_flags(p)

    p = subs.add_parser("farey", help="list the walls of one Farey order")
    p.add_argument("-n", "--order", type=int, required=True)
    p.add_argument("--upper", default="1", help="exclusive upper bound a/b (default 1)")
    _common_flags(p)

    p = subs.add_parser("crystal", help="signature word and good boxes of one residue")
    p.add_argument("-p", "--partition", required=True)
    p.add_argument("-e", "--base", type=int, required=True)
    p.add_argument("-i", "--residue", type=int, required=True)
    _common_flags(p)

    p = subs.add_parser("chamber", help="the n smallest cells left of a wall")
    p.add_argument("-n", "--boxes", type=int, required=True)
    p.add_argument("--wall", required=True)
    _common_flags(p, tie=True)

    p = subs.add_parser("regularize", help="slide a partition down the ladders of a wall")
    p.add_argument("-p", "--partition", required=True)
    p.add_argument("--wall", required=True)
    _common_flags(p)

    p = subs.add_parser("orbit", help="cross every wall ascending from one start partition")
    p.add_argument("-p", "--partition", required=True)
    p.add_argument("--upper", default="1", help="exclusive upper bound a/b")
    p.add_argument("--mode", choices=[MODE_CROSSING, MODE_PLAIN], default=MODE_CROSSING)
    _common_flags(p, variant=True)

    p = subs.add_parser("orbit-all", help="orbits of every partition of n")
    p.add_argument("-n", "--size", type=int, required=True)
    p.add_argument("--upper", default="1")
    p.add_argument("--mode", choices=[MODE_CROSSING, MODE_PLAIN], default=MODE_CROSSING)
    _common_flags(p, variant=True, jobs=True)

    p = subs.add_parser("verify-thm2", help="orbit == chamber == regularization, all sizes up to n")
    p.add_argument("--n-max", type=int, required=True)
    _common_flags(p, tie=True)

    p = subs.add_parser("check-sign", help="two-block shape law along the sign sweep")
    p.add_argument("-n", "--size", type=int, required=True)
    p.add_argument("--allow-composite", action="store_true")
    p.add_argument("--variant", choices=VARIANTS, default=VARIANT_RESTRICTED)
    _common_flags(p, formats=("text", "json", "csv"))

    p = subs.add_parser("check-goodbox", help="single good-box difference of first-row pairs")
    p.add_argument("-m", "--size", type=int, required=True,
                   help="size of the larger diagram in each pair")
    p.add_argument("--semantics", choices=SEMANTICS_CHOICES, default="all")
    _common_flags(p, formats=("text", "json", "csv"), variant=True)

    return parser


def _emit(args, text: str) -> None:
    if args.out:
        args.out.write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _figure_targets(args, names: list[str]) -> list[Path] | None:
    """Paths for this run's figures, or None when figures are off."""
    if args.no_figures:
        return None
    if args.figures is None and args.out is None:
        return None
    directory = args.figures if args.figures is not None else args.out.parent
    stem = args.out.stem if args.out is not None else args.command
    directory.mkdir(parents=True, exist_ok=True)
    return [directory / f"{stem}_{name}.png" for name in names]


def _render(args, builders: dict[str, object]) -> None:
    targets = _figure_targets(args, list(builders))
    if targets is None:
        return
    from wallcross import plots

    for path, build in zip(targets, builders.values()):
        plots.save_figure(build(), path)
        print(f"wrote {path}")


def _config(args, *fields) -> dict:
    return {name: getattr(args, name.replace("-", "_")) for name in fields}


def cmd_mull(args) -> int:
    p = Partition.parse(args.partition)
    if args.variant == VARIANT_RESTRICTED:
        image = mullineux_restricted(p, args.base)
    else:
        image = mullineux(p, args.base)
    payload = {"input": reports.partition_json(p), "base": args.base,
               "variant": args.variant, "image": reports.partition_json(image)}
    lines = [str(image)]
    if args.certify:
        src, dst = (p.transpose(), image.transpose()) if args.variant == VARIANT_RESTRICTED else (p, image)
        sym, mirror = mullineux_symbol(src, args.base), mullineux_symbol(dst, args.base)
        certified = mirror.sizes == sym.sizes and mirror.rows == sym.mirrored_rows()
        payload["symbols"] = {
            "source": {"sizes": list(sym.sizes), "rows": list(sym.rows)},
            "image": {"sizes": list(mirror.sizes), "rows": list(mirror.rows)},
            "expected_image_rows": list(sym.mirrored_rows()),
        }
        payload["certified"] = certified
        lines.append(f"symbol source: sizes={list(sym.sizes)} rows={list(sym.rows)}")
        lines.append(f"symbol image:  sizes={list(mirror.sizes)} rows={list(mirror.rows)}")
        if not certified:
            payload["discrepancy"] = "rim-symbol law disagrees with the good-box recursion"
            _emit(args, reports.dumps(payload))
            return EXIT_INTERNAL
        lines.append("certificate: ok")
    _emit(args, reports.dumps(payload) if args.format == "json" else "\n".join(lines))
    return EXIT_OK


def cmd_farey(args) -> int:
    seq = farey_walls(args.order, parse_wall(args.upper))
    if args.format == "json":
        payload = reports.run_header(_config(args, "order", "upper"))
        payload["walls"] = [str(w) for w in seq]
        _emit(args, reports.dumps(payload))
    else:
        _emit(args, " ".join(str(w) for w in seq) if len(seq) else "(no walls)")
    return EXIT_OK


def cmd_crystal(args) -> int:
    p = Partition.parse(args.partition)
    raw = signature(p, args.base, args.residue)
    red = reduced_signature(p, args.base, args.residue)
    rem = good_removable(p, args.base, args.residue)
    add = good_addable(p, args.base, args.residue)
    if args.format == "json":
        payload = {
            "partition": reports.partition_json(p), "base": args.base, "residue": args.residue,
            "word": [{"box": list(b), "sign": s} for b, s in raw.entries],
            "reduced": [{"box": list(b), "sign": s} for b, s in red.entries],
            "good_removable": list(rem) if rem else None,
            "good_addable": list(add) if add else None,
        }
        _emit(args, reports.dumps(payload))
    else:
        fmt = lambda w: " ".join(f"{s}{tuple(b)}" for b, s in w.entries) or "(empty)"
        _emit(args, "\n".join([
            f"word (bottom to top): {fmt(raw)}",
            f"reduced:              {fmt(red)}",
            f"good removable: {tuple(rem) if rem else 'none'}",
            f"good addable:   {tuple(add) if add else 'none'}",
        ]))
    return EXIT_OK


def cmd_chamber(args) -> int:
    result = chamber_partition(args.boxes, parse_wall(args.wall), args.tie)
    if args.format == "json":
        _emit(args, reports.dumps({"n": args.boxes, "wall": args.wall, "tie": args.tie,
                                   "partition": reports.partition_json(result)}))
    else:
        _emit(args, str(result))
    return EXIT_OK


def cmd_regularize(args) -> int:
    p = Partition.parse(args.partition)
    try:
        result = rc_regularize(p, parse_wall(args.wall))
    except NotAYoungDiagramError as exc:
        print(f"not a diagram: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    if args.format == "json":
        _emit(args, reports.dumps({"input": reports.partition_json(p), "wall": args.wall,
                                   "partition": reports.partition_json(result)}))
    else:
        _emit(args, str(result))
    return EXIT_OK


def cmd_orbit(args) -> int:
    p = Partition.parse(args.partition)
    upper = parse_wall(args.upper)
    if args.mode == MODE_PLAIN:
        variant = VARIANT_RESTRICTED if args.variant == VARIANT_AUTO else args.variant
        trace = plain_orbit(p, upper, variant)
    else:
        trace = compose_orbit(p, upper, args.variant)
    if args.format == "json":
        _emit(args, reports.dumps(reports.trace_dict(trace)))
    else:
        _emit(args, reports.trace_text(trace))
    from wallcross import plots

    _render(args, {"orbit": lambda: plots.orbit_figure(trace)})
    return EXIT_OK


def cmd_orbit_all(args) -> int:
    upper = parse_wall(args.upper)
    traces = orbit_sweep(args.size, upper, args.variant, args.mode, jobs=args.jobs)
    if args.format == "json":
        payload = reports.run_header(_config(args, "size", "upper", "mode", "variant"))
        payload["traces"] = [reports.trace_dict(t) for t in traces]
        _emit(args, reports.dumps(payload))
    else:
        _emit(args, "\n\n".join(reports.trace_text(t) for t in traces))
    return EXIT_OK


def cmd_verify_thm2(args) -> int:
    summary = run_verify_theorem2(args.n_max, args.tie)
    if args.format == "json":
        payload = reports.run_header(_config(args, "n_max", "tie"))
        payload.update(reports.theorem_dict(summary))
        _emit(args, reports.dumps(payload))
    else:
        _emit(args, reports.theorem_text(summary))
    from wallcross import plots

    _render(args, {"timing": lambda: plots.theorem_figure(summary)})
    return EXIT_OK if summary.ok else EXIT_COUNTEREXAMPLE


def cmd_check_sign(args) -> int:
    report = check_sign_conjecture(args.size, variant=args.variant,
                                   allow_composite=args.allow_composite)
    config = _config(args, "size", "variant")
    if args.format == "json":
        payload = reports.run_header(config)
        payload.update(reports.sign_dict(report))
        _emit(args, reports.dumps(payload))
    elif args.format == "csv":
        _emit(args, reports.sign_csv(report, config))
    else:
        _emit(args, reports.sign_text(report))
    from wallcross import plots

    _render(args, {"fit": lambda: plots.sign_figure(report)})
    return EXIT_OK if report.status == "PASS" else EXIT_COUNTEREXAMPLE


def cmd_check_goodbox(args) -> int:
    semantics = ALL_SEMANTICS if args.semantics == "all" else tuple(
        pair for pair in ALL_SEMANTICS if semantics_key(*pair) == args.semantics
    )
    result = check_goodbox_conjecture(args.size, semantics=semantics, variant=args.variant)
    config = _config(args, "size", "semantics", "variant")
    if args.format == "json":
        payload = reports.run_header(config)
        payload["pairs"] = [reports.goodbox_pair_dict(r) for r in result]
        payload["hard_counterexamples"] = sum(not r.single_box_everywhere for r in result)
        _emit(args, reports.dumps(payload))
    elif args.format == "csv":
        _emit(args, reports.goodbox_csv(result, config))
    else:
        _emit(args, reports.goodbox_text(result))
    from wallcross import plots

    _render(args, {"goodness": lambda: plots.goodbox_figure(result)})
    return EXIT_OK if all(r.single_box_everywhere for r in result) else EXIT_COUNTEREXAMPLE


HANDLERS = {
    "mull": cmd_mull,
    "farey": cmd_farey,
    "crystal": cmd_crystal,
    "chamber": cmd_chamber,
    "regularize": cmd_regularize,
    "orbit": cmd_orbit,
    "orbit-all": cmd_orbit_all,
    "verify-thm2": cmd_verify_thm2,
    "check-sign": cmd_check_sign,
    "check-goodbox": cmd_check_goodbox,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except NeitherRegularNorRestrictedError as exc:
        print(f"obstruction: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConventionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
