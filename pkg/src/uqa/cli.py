"""Command-line driver: ``uqa <command> --type A --rank 2 ...``.

Exit status 0 on success, 2 when a closure exceeds its cap (verdict Unknown),
1 on usage or input errors and failed self-checks.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .algebra import UqAlgebra
from .checks import run_selfcheck
from .cominuscule import CONVENTIONS, verify_fiber_family
from .modules import (
    CapExceeded,
    CapExceededError,
    cyclic_closure,
    default_cap,
    highest_weight_vectors,
    isotypic_multiplicities,
)
from .parser import ParseError, parse_element
from .poset import decompose_with_trace, interval, lattice_probe
from .render import FORMATS, RenderError, closure_json, interval_json, lattice_json, render
from .rootdata import LeviSpec, build_cartan, cominuscule_nodes, format_weight

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2

COMMANDS = ("info", "closure", "hwv", "decompose", "poset", "verify-cominuscule", "selfcheck")
SELFCHECK_DEFAULT = (("A", 2), ("B", 2), ("A", 3))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="uqa", description="Cyclic adjoint modules in quantized enveloping algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--type", dest="type_letter", help="Cartan type letter A..G")
    p.add_argument("--rank", type=int)
    lev = p.add_mutually_exclusive_group()
    lev.add_argument("--levi", help="comma separated nodes of S, e.g. 1,2 (empty string for S empty)")
    lev.add_argument("--x", type=int, help="S is the complement of this node")
    p.add_argument("--elem", help="element in text syntax, e.g. \"E2 + F2 K(-w1)\"")
    p.add_argument("--cap", type=int, help="dimension cap for closures (default: $UQA_CAP or 500)")
    p.add_argument("--probes", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", dest="n_range", default="1..5", help="range a..b or list 1,2,3")
    p.add_argument("--out", help="write the report to this path")
    p.add_argument("--format", choices=FORMATS, default="text")
    return p


def parse_n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad --n value {text!r}") from None


def _datum(args):
    if not args.type_letter or args.rank is None:
        raise UsageError("--type and --rank are required")
    try:
        return build_cartan(args.type_letter, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _levi(args, datum) -> LeviSpec:
    try:
        if args.x is not None:
            return LeviSpec.complement(datum, args.x)
        if args.levi is None:
            raise UsageError("one of --levi or --x is required")
        nodes = [int(t) for t in args.levi.split(",") if t.strip()]
        return LeviSpec.of(datum, nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _element(args, alg):
    if not args.elem:
        raise UsageError("--elem is required for this command")
    try:
        return parse_element(args.elem, alg)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def _cap(args) -> int:
    return args.cap if args.cap is not None else default_cap()


def _unknown_report(exc: CapExceededError, extra: dict) -> dict:
    v = exc.verdict
    out = {"status": "CapExceeded", "verdict": "Unknown", "dim": v.dim, "cap": v.cap,
           "last_step": v.last_step}
    out.update(extra)
    return out


def run(args) -> tuple[int, object]:
    """Execute one command; returns (exit status, renderable report)."""
    cmd = args.command
    if cmd == "selfcheck":
        data = [_datum(args)] if args.type_letter else [build_cartan(t, r) for t, r in SELFCHECK_DEFAULT]
        report = {d.name: run_selfcheck(d, seed=args.seed) for d in data}
        green = all(r["all_green"] for r in report.values())
        return (EXIT_OK if green else EXIT_ERROR), {"all_green": green, "types": report}

    datum = _datum(args)
    alg = UqAlgebra(datum)
    if cmd == "info":
        out = {
            "type": datum.name,
            "cartan": [list(r) for r in datum.cartan],
            "d": list(datum.d),
            "positive_roots": len(datum.positive_roots),
            "highest_root": list(datum.highest_root),
            "cominuscule_nodes": sorted(cominuscule_nodes(datum)),
            "conventions": CONVENTIONS,
        }
        if args.levi is not None or args.x is not None:
            out["levi"] = _levi(args, datum).nodes
        return EXIT_OK, out

    if cmd == "verify-cominuscule":
        if args.x is None:
            raise UsageError("verify-cominuscule needs --x")
        _levi(args, datum)
        report = verify_fiber_family(datum, args.x, parse_n_range(args.n_range), _cap(args), alg)
        unknown = any(e["literal_module"]["status"] != "Closed"
                      or (e.get("krahmer_module") or {}).get("status", "Closed") != "Closed"
                      for e in report.entries)
        return (EXIT_UNKNOWN if unknown else EXIT_OK), report

    levi = _levi(args, datum)
    v = _element(args, alg)
    if not v:
        raise UsageError("the zero element generates the zero module")
    cap = _cap(args)
    base = {"type": datum.name, "levi": levi.nodes, "element": alg.format(v)}

    if cmd == "closure":
        verdict = cyclic_closure(v, levi, cap)
        out = closure_json(verdict, datum, levi.nodes)
        out["element"] = alg.format(v)
        out["type"] = datum.name
        return (EXIT_UNKNOWN if isinstance(verdict, CapExceeded) else EXIT_OK), out

    try:
        if cmd == "hwv":
            verdict = cyclic_closure(v, levi, cap)
            if isinstance(verdict, CapExceeded):
                raise CapExceededError(verdict)
            M = verdict.module
            base["dim"] = M.dim
            base["hwvs"] = [{"weight": format_weight(w, datum), "vector": alg.format(h)}
                            for w, h in highest_weight_vectors(M)]
            base["multiplicities"] = [{"lambda": format_weight(w, datum), "count": n}
                                      for w, n in isotypic_multiplicities(M).items()]
            return EXIT_OK, base
        if cmd == "decompose":
            vectors, residuals = decompose_with_trace(v, levi, cap)
            base["vectors"] = [alg.format(w) for w in vectors]
            base["residual_dims"] = residuals
            return EXIT_OK, base
        if cmd == "poset":
            P = interval(v, levi, args.probes, args.seed, cap)
            if args.format == "dot":
                return EXIT_OK, P
            base.update(interval_json(P))
            base["lattice"] = lattice_json(lattice_probe(P.nodes, levi, cap, args.probes, args.seed))
            return EXIT_OK, base
    except CapExceededError as exc:
        return EXIT_UNKNOWN, _unknown_report(exc, base)
    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, report = run(args)
        if args.format == "dot" and args.command != "poset":
            raise UsageError("--format dot is only available for the poset command")
        text = render(report, args.format)
    except (UsageError, RenderError) as exc:
        sys.stderr.write(f"uqa: error: {exc}\n")
        return EXIT_ERROR
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
