"""Command line entry point: ``pgeo run|render|axioms|extend|probe``."""
from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from pathlib import Path

from . import extension as ext
from .axioms import run_axiom_suite
from .scalar import parse_scalar
from .script.evaluator import EXIT_CONSTRUCT, EXIT_OK, run_file
from .script.render import parse_viewport, render_svg


def _scalar_arg(text: str):
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational n/d: {text!r}") from exc


def _viewport_arg(text: str):
    try:
        return parse_viewport(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def cmd_run(args) -> int:
    report = run_file(args.file)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return report.exit_code


def cmd_render(args) -> int:
    report = run_file(args.file)
    if report.errors:
        sys.stderr.write(report.to_text())
        return report.exit_code
    try:
        render_svg(report.env, args.output, viewport=args.viewport)
    except OSError as exc:
        print(f"pgeo render: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT
    return report.exit_code


def cmd_axioms(args) -> int:
    report = run_axiom_suite(args.trials, args.seed, args.bound)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else 1


def cmd_extend(args) -> int:
    if args.plane == "rational":
        report = ext.extend(ext.RationalPlane()).verify_random(args.trials, args.seed)
        heyting = None
    else:
        plane = ext.FinitePlane(3 if args.plane == "f3" else 5)
        report = ext.extend(plane).verify()
        heyting = ext.verify_heyting(plane)
    if args.report == "json":
        data = {"extension": report.to_dict()}
        if heyting is not None:
            data["heyting"] = dataclasses.asdict(heyting)
        print(json.dumps(data, indent=2))
    else:
        print(report.to_text())
        if heyting is not None:
            print("heyting:")
            for k, v in dataclasses.asdict(heyting).items():
                print(f"  {k}: {v}")
    ok = report.ok and (heyting is None or heyting.cpp)
    return EXIT_OK if ok else 1


def cmd_probe(args) -> int:
    if args.probe == "llpo":
        report = ext.brouwerian_probe(args.alpha)
    else:
        report = ext.cotransitivity_probe(args.c)
    if args.report == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pgeo", description="Exact constructive projective geometry over the rationals.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="evaluate a construction script")
    r.add_argument("file", type=Path)
    r.add_argument("--json", action="store_true", help="print the JSON report")
    r.set_defaults(func=cmd_run)

    r = sub.add_parser("render", help="evaluate a script and draw its environment as SVG")
    r.add_argument("file", type=Path)
    r.add_argument("-o", "--output", type=Path, required=True)
    r.add_argument("--viewport", type=_viewport_arg, default=None, metavar="x0,y0,x1,y1")
    r.set_defaults(func=cmd_render)

    r = sub.add_parser("axioms", help="randomized check of the plane axioms, primal and dual")
    r.add_argument("--trials", type=int, default=1000)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--bound", type=int, default=10)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_axioms)

    r = sub.add_parser("extend", help="build and check a projective extension")
    r.add_argument("--plane", choices=["f3", "f5", "rational"], required=True)
    r.add_argument("--report", choices=["json", "text"], default="text")
    r.add_argument("--trials", type=int, default=200, help="random cases for the rational plane")
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_extend)

    r = sub.add_parser("probe", help="finite instances of the Brouwerian examples")
    psub = r.add_subparsers(dest="probe", required=True)
    q = psub.add_parser("llpo", help="meet of [a+,0,1] and [0,a-,1]")
    q.add_argument("--alpha", type=_scalar_arg, required=True, help="n/d, e.g. -1/1000")
    q.add_argument("--report", choices=["json", "text"], default="text")
    q = psub.add_parser("cotrans", help="cotransitivity at the pencil phi(p, p)")
    q.add_argument("--c", type=_scalar_arg, required=True, help="n/d, e.g. 1/7")
    q.add_argument("--report", choices=["json", "text"], default="text")
    r.set_defaults(func=cmd_probe)
    return p


_VALUE_OPTIONS = ("--viewport", "--alpha", "--c")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--alpha -1/2`` into ``--alpha=-1/2`` so argparse does not take
    the value for an option."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTIONS and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
