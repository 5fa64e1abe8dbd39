"""Command-line front end.

    braidquot build sphere_braid n=4 q=3 > b4s2q3.json
    braidquot order b4s2q3.json
    braidquot abelian b4s2q3.json
    braidquot identify b4s2q3.json
    braidquot paper-suite --format markdown

Exit codes: 0 success, 1 usage or input error (and failed suite checks),
2 when the only problem is an inconclusive enumeration.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import catalog as cat
from .abelianizer import abelian_invariants
from .enumerator import STRATEGIES, default_max_cosets, enumerate_cosets
from .identify import analyze
from .suite import exit_code, run_suite, to_markdown
from .words import Presentation, PresentationError

BUILDERS = {
    "artin_braid": cat.artin_braid,
    "symmetric_group": cat.symmetric_group,
    "sphere_braid": cat.sphere_braid,
    "projective_plane_braid": cat.projective_plane_braid,
    "crystallographic_disk": cat.crystallographic_disk,
    "crystallographic_surface": cat.crystallographic_surface,
    "triangle_group": cat.triangle_group,
    "nonorientable_abelianized": cat.nonorientable_abelianized,
}
ALIASES = {"triangle": "triangle_group", "artin": "artin_braid", "sphere": "sphere_braid",
           "projective_plane": "projective_plane_braid"}


class UsageError(Exception):
    pass


def build(name: str, params: list[str]) -> Presentation:
    """Run a catalog builder from ``key=value`` strings.

    ``q=<int>`` on a builder without its own ``q`` adds ``s1^q``.
    """
    name = ALIASES.get(name, name)
    if name not in BUILDERS:
        raise UsageError(f"unknown builder {name!r}; choose from {', '.join(sorted(BUILDERS))}")
    fn = BUILDERS[name]
    kwargs = {}
    for item in params:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {item!r}")
        try:
            kwargs[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {value!r}") from None
    accepted = inspect.signature(fn).parameters
    q = kwargs.pop("q") if "q" in kwargs and "q" not in accepted else None
    unknown = set(kwargs) - set(accepted)
    if unknown:
        raise UsageError(f"{name} does not take {', '.join(sorted(unknown))}; "
                         f"parameters: {', '.join(accepted)}")
    try:
        p = fn(**kwargs)
        return cat.coxeter_quotient(p, q) if q is not None else p
    except TypeError as exc:
        raise UsageError(str(exc)) from None


def _read(source: str) -> Presentation:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    return Presentation.loads(text)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def cmd_build(args) -> int:
    _emit(build(args.builder, args.params).to_json())
    return 0


def cmd_order(args) -> int:
    res = enumerate_cosets(_read(args.source), (), args.max_cosets, args.strategy)
    if args.json:
        _emit(res.to_json())
    else:
        print(res.index if res.finite else "INCONCLUSIVE")
    return 0 if res.finite else 2


def cmd_abelian(args) -> int:
    _emit(abelian_invariants(_read(args.source)).to_json())
    return 0


def cmd_identify(args) -> int:
    report = analyze(_read(args.source), args.max_cosets, args.strategy)
    _emit(report.to_json())
    return 0 if report.order is not None else 2


def cmd_paper_suite(args) -> int:
    records = run_suite(args.max_cosets, args.strategy, args.only, args.timings)
    if args.format == "markdown":
        sys.stdout.write(to_markdown(records))
    else:
        _emit({"records": [r.to_json() for r in records],
               "summary": {s: sum(r.status == s for r in records)
                           for s in ("pass", "fail", "inconclusive")}})
    return exit_code(records)


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidquot", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def enum_flags(p):
        p.add_argument("--max-cosets", type=int, default=default_max_cosets())
        p.add_argument("--strategy", choices=STRATEGIES, default="hlt")

    p = sub.add_parser("build", help="print a catalog presentation as JSON")
    p.add_argument("builder")
    p.add_argument("params", nargs="*", help="key=value integer parameters")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("order", help="group order by coset enumeration")
    p.add_argument("source", nargs="?", default="-")
    p.add_argument("--json", action="store_true", help="print the enumeration result as JSON")
    enum_flags(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("abelian", help="abelian invariants of a presentation")
    p.add_argument("source", nargs="?", default="-")
    p.set_defaults(func=cmd_abelian)

    p = sub.add_parser("identify", help="structure report with fingerprint identification")
    p.add_argument("source", nargs="?", default="-")
    enum_flags(p)
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("paper-suite", help="run the full reproduction battery")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--only", help="run claims whose id starts with this prefix")
    p.add_argument("--timings", action="store_true", help="record runtime_ms per claim")
    enum_flags(p)
    p.set_defaults(func=cmd_paper_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, PresentationError, cat.ParameterError, ValueError) as exc:
        print(f"braidquot: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
