"""Command line front end: ``sagbiperm {analyze,basis,member,witness,sturm}``.

Exit codes: 0 ok, 1 usage, 2 input parse error, 3 group too large,
4 internal contradiction (no witness found for a non-reflection group).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cone import (
    ClosedVerdict,
    InitialCone,
    TheoremContradiction,
    contains,
    halfplane_irreducibles,
    nonclosedness_witness,
)
from .permgroup import (
    DEFAULT_CAP,
    GroupTooLarge,
    PermGroup,
    generate_group,
    parse_generators,
    read_group_file,
)
from .sagbi import DEFAULT_COUNT_BOUND, finiteness_verdict, minimal_sagbi_up_to
from .termorder import TermOrder, order_from_spec

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CAP, EXIT_CONTRADICTION = range(5)


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    group_path: str | None = None
    gens: str | None = None
    n: int | None = None
    order_spec: str = "lex"
    max_degree: int = DEFAULT_COUNT_BOUND
    group_cap: int = DEFAULT_CAP
    json: bool = False

    def load(self) -> tuple[PermGroup, TermOrder]:
        if (self.group_path is None) == (self.gens is None):
            raise UsageError("give exactly one of --group or --gens")
        try:
            if self.group_path is not None:
                with open(self.group_path, encoding="utf-8") as fh:
                    n, gens = read_group_file(fh.read())
                if self.n is not None and self.n != n:
                    raise ValueError(f"--n {self.n} disagrees with group file degree {n}")
            else:
                n, gens = parse_generators(self.gens, self.n)
            group = generate_group(gens, cap=self.group_cap, n=n)
            order = order_from_spec(self.order_spec, n)
        except (ValueError, OSError) as exc:
            raise InputError(str(exc)) from exc
        return group, order


def _fmt(x) -> str:
    return str(Fraction(x))


def _orbits_json(group):
    return [sorted(s) for s in group.orbits]


def cmd_analyze(cfg: RunConfig) -> tuple[dict, str]:
    group, order = cfg.load()
    verdict = finiteness_verdict(group, order, cfg.max_degree)
    data = {
        "n": group.n,
        "order": order.spec(),
        "group_order": group.order,
        "orbits": _orbits_json(group),
        **verdict.to_json(order),
    }
    lines = [
        f"n = {group.n}",
        f"order: {order.spec()}",
        f"|G| = {group.order}",
        "orbits: " + " ".join("{" + ",".join(map(str, s)) + "}" for s in data["orbits"]),
        f"generated by transpositions: {'yes' if verdict.certificate.verdict else 'no'}",
    ]
    if verdict.finite:
        lines.append("SAGBI basis: finite (elementary symmetric polynomials of each orbit)")
        for (i, d), p in zip(verdict.basis.labels, verdict.basis.polys):
            lines.append(f"  e{d}(S{i}) = {p.to_text(order)}")
    else:
        a, b = verdict.certificate.obstruction
        w = verdict.witness
        lines.append(f"obstruction: transposition ({a} {b}) missing")
        lines.append("SAGBI basis: infinite")
        lines.append(
            "witness: point ("
            + ", ".join(_fmt(x) for x in w.point)
            + ") not in cone, approached along ("
            + ", ".join(_fmt(x) for x in w.direction)
            + f") for 0 < s <= {_fmt(w.s_max)}; sigma = {w.translate}, t* = {_fmt(w.t_star)}"
        )
        lines.append("irreducibles per degree:")
        for d, c in verdict.irreducible_counts:
            lines.append(f"  {d}: {c}")
    return data, "\n".join(lines)


def cmd_basis(cfg: RunConfig) -> tuple[dict, str]:
    group, order = cfg.load()
    if cfg.max_degree < 1:
        raise InputError("--max-degree must be at least 1")
    elements = minimal_sagbi_up_to(InitialCone(group, order), cfg.max_degree)
    counts = {d: 0 for d in range(1, cfg.max_degree + 1)}
    for e in elements:
        counts[e.degree] += 1
    data = {
        "n": group.n,
        "order": order.spec(),
        "max_degree": cfg.max_degree,
        "counts": [{"degree": d, "count": c} for d, c in counts.items()],
        "elements": [e.to_json(order) for e in elements],
    }
    lines = []
    for d, c in counts.items():
        lines.append(f"degree {d}: {c}")
        for e in elements:
            if e.degree == d:
                lines.append(f"  {tuple(e.exponent)}  {e.polynomial.to_text(order)}")
    lines.append(f"total: {len(elements)}")
    return data, "\n".join(lines)


def _parse_vector(text: str, n: int) -> tuple[Fraction, ...]:
    try:
        vec = tuple(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational vector {text!r}") from exc
    if len(vec) != n:
        raise InputError(f"vector has {len(vec)} entries, expected {n}")
    if any(x < 0 for x in vec):
        raise InputError("vector entries must be nonnegative")
    return vec


def cmd_member(cfg: RunConfig, vector: str) -> tuple[dict, str]:
    group, order = cfg.load()
    vec = _parse_vector(vector, group.n)
    inside = contains(InitialCone(group, order), vec)
    data = {"vector": [_fmt(x) for x in vec], "order": order.spec(), "in_cone": inside}
    text = f"({', '.join(_fmt(x) for x in vec)}) {'is' if inside else 'is not'} in the initial cone"
    return data, text


def cmd_witness(cfg: RunConfig) -> tuple[dict, str]:
    group, order = cfg.load()
    w = nonclosedness_witness(InitialCone(group, order))
    if isinstance(w, ClosedVerdict):
        raise UsageError(
            "cone closed; no witness: the group is generated by transpositions, "
            "so its SAGBI basis is finite"
        )
    data = w.to_json()
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return data, text


def cmd_sturm(slope: str, x_max: int) -> tuple[dict, str]:
    try:
        a = Fraction(slope)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad slope {slope!r}") from exc
    if a <= 0:
        raise InputError("slope must be positive")
    if x_max < 0:
        raise InputError("x-max must be nonnegative")
    pts = halfplane_irreducibles(a, x_max)
    data = {"slope": _fmt(a), "x_max": x_max, "irreducibles": [list(p) for p in pts]}
    return data, "\n".join(f"{x} {y}" for x, y in pts)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--group", dest="group_path", help="group file (first line 'n = <int>')")
    src.add_argument("--gens", help='generators, e.g. "(1 2 3);(1 2)"')
    common.add_argument("--n", type=int, help="degree (number of variables)")
    common.add_argument("--order", dest="order_spec", default="lex",
                        help="lex | grlex | grevlex | matrix:<path>")
    common.add_argument("--cap", dest="group_cap", type=int, default=DEFAULT_CAP,
                        help="maximum group size to enumerate")
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = _Parser(prog="sagbiperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("analyze", parents=[common], help="finiteness verdict")
    p.add_argument("--max-degree", type=int, default=DEFAULT_COUNT_BOUND,
                   help="degree bound for irreducible counts")
    p = sub.add_parser("basis", parents=[common], help="minimal SAGBI basis up to a degree")
    p.add_argument("--max-degree", type=int, default=6)
    p = sub.add_parser("member", parents=[common], help="initial cone membership")
    p.add_argument("vector", help='comma-separated rationals, e.g. "1/2,1/3,0"')
    sub.add_parser("witness", parents=[common], help="non-closedness witness")
    p = sub.add_parser("sturm", help="irreducibles of the half-plane monoid y > a*x")
    p.add_argument("--slope", default="1")
    p.add_argument("--x-max", type=int, default=10)
    p.add_argument("--json", action="store_true")
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout text, stderr text)."""
    want_json = argv is not None and "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        want_json = args.json
        if args.command == "sturm":
            data, text = cmd_sturm(args.slope, args.x_max)
        else:
            cfg = RunConfig(
                group_path=args.group_path,
                gens=args.gens,
                n=args.n,
                order_spec=args.order_spec,
                max_degree=getattr(args, "max_degree", DEFAULT_COUNT_BOUND),
                group_cap=args.group_cap,
                json=args.json,
            )
            if args.command == "analyze":
                data, text = cmd_analyze(cfg)
            elif args.command == "basis":
                data, text = cmd_basis(cfg)
            elif args.command == "member":
                data, text = cmd_member(cfg, args.vector)
            else:
                data, text = cmd_witness(cfg)
    except UsageError as exc:
        return _fail(EXIT_USAGE, str(exc), want_json)
    except InputError as exc:
        return _fail(EXIT_PARSE, str(exc), want_json)
    except GroupTooLarge as exc:
        return _fail(EXIT_CAP, str(exc), want_json)
    except TheoremContradiction as exc:
        return _fail(EXIT_CONTRADICTION, str(exc), want_json)
    if want_json:
        return EXIT_OK, json.dumps(data, indent=2) + "\n", ""
    return EXIT_OK, text + "\n", ""


def _fail(code: int, message: str, want_json: bool) -> tuple[int, str, str]:
    out = json.dumps({"error": message, "exit_code": code}, indent=2) + "\n" if want_json else ""
    return code, out, f"sagbiperm: error: {message}\n"


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
