"""Command-line front end.

Every verb builds a JSON-ready payload.  ``--format json`` prints it as is;
the text format is rendered from that same payload, so both carry the same
information.  Rationals are serialized as strings, integers as integers.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .contact import build_tree, load_roots, tree_polygon
from .criteria import CRITERIA
from .errors import DomainError, InternalInconsistency, ParseError
from .jacobian import (PolarInvariants, ShearSearch, decide, jacobian_analysis)
from .polyalg import YPoly, approximate_root, parse_poly
from .polygon import Polygon, format_polygon, polygon_to_json, read_polygon
from .semigroup import (CharSeq, SgpGens, bresinsky_check, char_to_semigroup,
                        merle_polygon, parse_int_list, semigroup_to_char)
from .svg import write_svg
from .transform import abrade, reduce

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- payloads --------------------------------------------------------------------

def _is_polygon_json(v) -> bool:
    return isinstance(v, dict) and set(v) == {"terms", "horizontal", "vertical"}


def _is_pairs(v) -> bool:
    return isinstance(v, list) and all(isinstance(p, list) and len(p) == 2 for p in v) and bool(v)


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if _is_polygon_json(v):
        P = Polygon.from_terms([(Fraction(a), Fraction(b)) for a, b in v["terms"]],
                               v["horizontal"], v["vertical"])
        text = format_polygon(P)
        if not P.convenient:
            text += f" [horizontal={_scalar_text(P.touches_horizontal)}, " \
                    f"vertical={_scalar_text(P.touches_vertical)}]"
        return text
    if _is_pairs(v):
        return "<" + ", ".join(f"{a}:{b}" for a, b in v) + ">"
    if isinstance(v, list):
        return ",".join(_scalar_text(x) for x in v)
    return str(v)


def to_text(payload: Any) -> str:
    """Text rendering: a bare value, or one ``key: value`` line per leaf field."""
    if not isinstance(payload, dict) or _is_polygon_json(payload):
        return _scalar_text(payload)
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict) and not _is_polygon_json(v):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else k, x)
        elif isinstance(v, list) and v and all(isinstance(x, dict) and not _is_polygon_json(x) for x in v):
            for i, x in enumerate(v):
                walk(f"{prefix}.{i}", x)
        else:
            lines.append(f"{prefix}: {_scalar_text(v)}")

    walk("", payload)
    return "\n".join(lines)


def _polar_json(P: Polygon):
    return PolarInvariants.from_polygon(P).to_json()


def _search(args) -> ShearSearch:
    if args.max_shear < 1:
        raise DomainError("--max-shear must be at least 1 (two shears must agree)")
    return ShearSearch(max_shear=args.max_shear)


def cmd_njp(args):
    res = jacobian_analysis(parse_poly(args.poly), _search(args))
    return polygon_to_json(res.polygon), res.polygon


def cmd_disc(args):
    res = jacobian_analysis(parse_poly(args.poly), _search(args))
    payload = {"shear": res.shears_used[0], "discriminant": str(res.discriminant)}
    return payload, res.polygon


def cmd_polar(args):
    res = jacobian_analysis(parse_poly(args.poly), _search(args))
    return _polar_json(res.polygon), res.polygon


def cmd_irreducible(args):
    res = jacobian_analysis(parse_poly(args.poly), _search(args))
    ok, evidence = decide(res.polygon)
    gamma = evidence["gamma"]
    payload: dict = {"pass": ok}
    if not ok:
        payload["condition"] = gamma.condition
    if gamma.gamma is not None:
        payload["gamma"] = [_fmt(g) for g in gamma.gamma]
    if ok:
        payload["characteristic"] = list(gamma.characteristic)
        payload["semigroup"] = list(gamma.semigroup)
    payload["polygon"] = polygon_to_json(res.polygon)
    payload["polar"] = _polar_json(res.polygon)
    payload["shears"] = list(res.shears_used)
    payload["flagged"] = res.flagged
    payload["evidence"] = {name: v.to_json() for name, v in evidence.items()}
    return payload, res.polygon


def cmd_criteria(args):
    P = read_polygon(args.polygon)
    return {name: fn(P).to_json() for name, fn in CRITERIA.items()}, P


def cmd_reduce(args):
    P = reduce(read_polygon(args.polygon))
    return polygon_to_json(P), P


def cmd_abrade(args):
    P = abrade(read_polygon(args.polygon))
    return polygon_to_json(P), P


def cmd_merle(args):
    P = merle_polygon(SgpGens(tuple(parse_int_list(args.gens))))
    return polygon_to_json(P), P


def cmd_char2sgp(args):
    return list(char_to_semigroup(CharSeq(tuple(parse_int_list(args.seq))))), None


def cmd_sgp2char(args):
    return list(semigroup_to_char(SgpGens(tuple(parse_int_list(args.gens))))), None


def cmd_bresinsky(args):
    rep = bresinsky_check(parse_int_list(args.gens))
    payload: dict = {"valid": rep.valid}
    if not rep.valid:
        payload["condition"] = rep.failing_condition
        if rep.k is not None:
            payload["k"] = rep.k
    return payload, None


def cmd_tree(args):
    tree = build_tree(load_roots(args.file))
    P = tree_polygon(tree)
    nodes = [{"h": _fmt(B.h), "t": B.t, "q": _fmt(B.q), "members": list(B.members)}
             for B in tree.internal_nodes()]
    return {"polygon": polygon_to_json(P), "polar": _polar_json(P), "nodes": nodes}, P


def cmd_approx(args):
    f = YPoly.from_bipoly(parse_poly(args.poly))
    return str(approximate_root(f, args.p).to_bipoly()), None


VERBS = {
    "njp": (cmd_njp, ["poly"], "jacobian Newton polygon of a polynomial"),
    "disc": (cmd_disc, ["poly"], "discriminant D(u,v) in the accepted coordinates"),
    "polar": (cmd_polar, ["poly"], "polar invariants <q:m, ...>"),
    "irreducible": (cmd_irreducible, ["poly"], "combinatorial irreducibility test"),
    "criteria": (cmd_criteria, ["polygon"], "run all three criteria on a polygon"),
    "reduce": (cmd_reduce, ["polygon"], "reduction operator"),
    "abrade": (cmd_abrade, ["polygon"], "abrasion operator"),
    "merle": (cmd_merle, ["gens"], "jacobian polygon of a branch from its semigroup"),
    "char2sgp": (cmd_char2sgp, ["seq"], "characteristic to semigroup generators"),
    "sgp2char": (cmd_sgp2char, ["gens"], "semigroup generators to characteristic"),
    "bresinsky": (cmd_bresinsky, ["gens"], "check Bresinsky's conditions"),
    "tree": (cmd_tree, ["file"], "Kuo-Lu tree polygon from a roots JSON file"),
    "approx": (cmd_approx, ["poly", "p"], "p-th approximate root of a monic polynomial"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--svg", metavar="PATH", help="write an SVG drawing of the polygon")
    common.add_argument("--max-shear", type=int, default=16, metavar="N")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = argparse.ArgumentParser(prog="jacnp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    for verb, (_, params, help_) in VERBS.items():
        sp = sub.add_parser(verb, parents=[common], help=help_)
        for p in params:
            sp.add_argument(p, type=int if p == "p" else str)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=err)
    handler = VERBS[args.verb][0]
    try:
        payload, polygon = handler(args)
    except (DomainError, InternalInconsistency) as exc:
        code = EXIT_INTERNAL if isinstance(exc, InternalInconsistency) else EXIT_DOMAIN
        info = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError) and exc.pos is not None:
            info["position"] = exc.pos
        if args.format == "json":
            print(json.dumps(info), file=out)
        else:
            print(f"error: {exc}", file=err)
        return code
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    if args.svg:
        if polygon is None:
            print(f"error: verb '{args.verb}' produces no polygon to draw", file=err)
            return EXIT_USAGE
        write_svg(polygon, args.svg)
    print(json.dumps(payload) if args.format == "json" else to_text(payload), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
