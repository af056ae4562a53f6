"""Command-line front end: compute polynomials, list and render model states,
run the verification suites, and solve for the R-matrix.

Exit codes: 0 on success, 1 on a domain error or failed verification, 2 on
usage errors.  Output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, lattice, lgv, ybe
from .diffops import double_grothendieck, extended_lascoux, schubert_specialize
from .lattice import (
    build_atom_model,
    build_bumpless,
    build_five_vertex,
    build_semidual,
    enumerate_marked_states,
    enumerate_states,
    render_ascii,
    state_to_json,
)
from .permutations import NotVexillaryError, Permutation
from .polyring import NonzeroRemainderError, VarRegistry, render, to_json_dict
from .tableaux import (
    factorial_grothendieck,
    flagged_factorial_grothendieck,
    normalize_shape,
)


class DomainError(Exception):
    pass


def _parse_shape(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return normalize_shape(int(p) for p in text.split(","))


def _parse_flags(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(","))


def _require(args, names):
    for name in names:
        if getattr(args, name.replace("-", "_"), None) is None:
            raise DomainError(f"--{name} is required for this invocation")


def _emit_poly(poly, as_json: bool) -> None:
    if as_json:
        print(json.dumps(to_json_dict(poly), sort_keys=True))
    else:
        print(render(poly))


def cmd_compute(args) -> int:
    if args.what == "grothendieck":
        _require(args, ["perm"])
        w = Permutation.parse(args.perm)
        poly = double_grothendieck(w)
    elif args.what == "factorial":
        _require(args, ["shape", "n"])
        poly = factorial_grothendieck(_parse_shape(args.shape), args.n)
    elif args.what == "flagged":
        _require(args, ["shape", "flags"])
        poly = flagged_factorial_grothendieck(
            _parse_shape(args.shape), _parse_flags(args.flags)
        )
    else:  # lascoux-atom | lascoux-poly
        _require(args, ["shape", "perm", "n"])
        kind = "atom" if args.what == "lascoux-atom" else "poly"
        poly = extended_lascoux(kind, _parse_shape(args.shape), Permutation.parse(args.perm), args.n)
    if args.beta_zero:
        poly = schubert_specialize(poly)
    _emit_poly(poly, args.json)
    return 0


def _build_model(args) -> lattice.ModelInstance:
    if args.model == "bumpless":
        _require(args, ["perm"])
        return build_bumpless(Permutation.parse(args.perm))
    if args.model == "semidual":
        _require(args, ["n"])
        return build_semidual(args.n)
    if args.model == "atom":
        _require(args, ["shape", "perm"])
        return build_atom_model(
            _parse_shape(args.shape), Permutation.parse(args.perm), variant=args.variant
        )
    if args.model == "five-vertex":
        _require(args, ["shape", "n"])
        return build_five_vertex(_parse_shape(args.shape), args.n)
    raise DomainError(f"unknown model {args.model}")


def _state_listing(args):
    inst = _build_model(args)
    if args.marked:
        for ms in enumerate_marked_states(inst):
            yield ms.state, ms.marks
    else:
        for st in enumerate_states(inst):
            yield st, None


def cmd_states(args) -> int:
    listing = list(_state_listing(args))
    if args.count:
        print(len(listing))
        return 0
    if args.render == "json":
        print(json.dumps(
            [state_to_json(st, marks) for st, marks in listing], sort_keys=True
        ))
        return 0
    for k, (st, marks) in enumerate(listing):
        print(f"state {k}:")
        print(render_ascii(st))
        if marks is not None:
            print("marks:", sorted(marks))
        print()
    return 0


def cmd_verify(args) -> int:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    results = checks.run_suites(names, max_n=args.max_n)
    bad = 0
    for name, ok, detail in results:
        line = f"{'pass' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        print(line)
        bad += 0 if ok else 1
    print(f"{len(results) - bad} of {len(results)} checks passed")
    return 1 if bad else 0


def cmd_lgv(args) -> int:
    if args.full is not None:
        poly = lgv.lgv_determinant_full(args.full)
    else:
        _require(args, ["perm"])
        poly = lgv.lgv_determinant(Permutation.parse(args.perm))
    _emit_poly(poly, args.json)
    return 0


def cmd_solve_r(args) -> int:
    solution = ybe.presented_solution(ybe.solve_r_matrix(lattice.bumpless_table(3)))
    if args.json:
        print(json.dumps(
            [
                {"key": list(key), "num": render(val.num), "den": render(val.den)}
                for key, val in sorted(solution.items())
            ],
            sort_keys=True,
        ))
        return 0
    for key, val in sorted(solution.items()):
        num, den = render(val.num), render(val.den)
        text = num if den == "1" else f"({num}) / ({den})"
        print(f"{key}: {text}")
    return 0


def cmd_export(args) -> int:
    listing = list(_state_listing(args))
    data = [state_to_json(st, marks) for st, marks in listing]
    text = json.dumps(data, sort_keys=True, indent=2)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0


def _add_model_args(p) -> None:
    p.add_argument("--model", required=True,
                   choices=["bumpless", "semidual", "atom", "five-vertex"])
    p.add_argument("--perm")
    p.add_argument("--shape")
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=["atom", "poly"], default="atom")
    p.add_argument("--marked", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grothlat",
        description="Exact double Grothendieck polynomials, lattice models, and checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print a polynomial")
    p.add_argument("--what", required=True,
                   choices=["grothendieck", "factorial", "flagged",
                            "lascoux-atom", "lascoux-poly"])
    p.add_argument("--perm")
    p.add_argument("--shape")
    p.add_argument("--flags")
    p.add_argument("--n", type=int)
    p.add_argument("--beta-zero", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("states", help="enumerate model states")
    _add_model_args(p)
    p.add_argument("--render", choices=["ascii", "json"], default="ascii")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + sorted(checks.SUITES))
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lgv", help="path-matrix determinants")
    p.add_argument("--perm")
    p.add_argument("--full", type=int, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lgv)

    p = sub.add_parser("solve-r", help="solve the RLL system for the R-matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve_r)

    p = sub.add_parser("export", help="write state listings as JSON")
    _add_model_args(p)
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, NotVexillaryError, NonzeroRemainderError,
            ybe.KernelDimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
