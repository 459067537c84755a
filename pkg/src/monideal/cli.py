"""Command line interface: ``monideal <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a violation and 2 on
bad input (parse errors, degenerate or mixed-degree ideals, budget overruns).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classify import classify, radical
from .core import (DegenerateIdeal, MonomialError, NotEquigenerated,
                   shrink_to_support)
from .covers import minimal_vertex_covers
from .enumeration import (BudgetExceeded, CensusRow, EnumSpec, VerificationError,
                          census, verify_classification)
from .exchange import (ExchangeAxiomViolated, exchange_path, exchange_violation,
                       is_matroidal, product)
from .io import ParseError, format_ideal, format_monomial, ideal_to_dict, load_ideal, parse_monomial
from .quotients import linear_quotients_revlex


def _yn(flag: Optional[bool]) -> str:
    if flag is None:
        return "unknown"
    return "yes" if flag else "no"


def _vars(indices) -> str:
    return "{" + ",".join(str(i + 1) for i in indices) + "}"


def _emit(args, text: str, record: dict) -> None:
    if args.format == "structured":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _load(args, path: str):
    ideal = load_ideal(path)
    return shrink_to_support(ideal) if getattr(args, "shrink", False) else ideal


def cmd_check(args) -> int:
    ideal = _load(args, args.file)
    w = exchange_violation(ideal)
    record = {"n": ideal.n, "polymatroidal": w is None,
              "matroidal": w is None and is_matroidal(ideal)}
    text = f"polymatroidal={_yn(record['polymatroidal'])} matroidal={_yn(record['matroidal'])}"
    if w is not None:
        record["witness"] = {"u": format_monomial(w.u), "v": format_monomial(w.v), "i": w.i + 1}
        text += (f" witness: u={format_monomial(w.u)} v={format_monomial(w.v)} i={w.i + 1}"
                 f" (no x_j*u/x{w.i + 1} in G(I))")
    _emit(args, text, record)
    return 0


def cmd_invariants(args) -> int:
    ideal = _load(args, args.file)
    cover = minimal_vertex_covers(ideal)
    quot = linear_quotients_revlex(ideal)
    cm = None if not quot.linear else cover.h == quot.q + 1
    record = {"n": ideal.n, "h": cover.h, "unmixed": cover.unmixed,
              "minimal_covers": [[i + 1 for i in c] for c in cover.minimal_covers],
              "dim": cover.dim, "linear": quot.linear, "q": quot.q,
              "q_values": quot.q_values, "depth": quot.depth, "cm": cm}
    q_text = str(quot.q) if quot.linear else "none (no linear quotients)"
    depth_text = str(quot.depth) if quot.linear else "unknown"
    text = (f"n={ideal.n} h={cover.h} unmixed={_yn(cover.unmixed)} q={q_text} "
            f"dim={cover.dim} depth={depth_text} CM={_yn(cm)}")
    if args.verbose:
        text += "\ncovers: " + " ".join(_vars(c) for c in cover.minimal_covers)
        text += "\nordering: " + ", ".join(format_monomial(u) for u in quot.ordering)
        for j, vs in enumerate(quot.colon_vars, start=2):
            text += f"\n  colon {j}: {_vars(vs)}"
        if not quot.linear:
            text += (f"\n  colon {quot.failed_step + 1}: "
                     + ", ".join(format_monomial(m) for m in quot.failed_colon)
                     + "  <- not generated by variables")
    _emit(args, text, record)
    return 0


def cmd_classify(args) -> int:
    ideal = _load(args, args.file)
    c = classify(ideal)
    q_text = "none" if c.q is None else str(c.q)
    text = (f"verdict={c.verdict.value} vars={_vars(c.support_vars)} d={c.degree} "
            f"h={c.h} q={q_text} dim={c.dim} depth={'-' if c.depth is None else c.depth} "
            f"CM={_yn(c.cohen_macaulay)} principal={_yn(c.principal)} "
            f"veronese={_yn(c.veronese)} squarefree_veronese={_yn(c.squarefree_veronese)}")
    if c.witness is not None:
        text += (f" witness: u={format_monomial(c.witness.u)} "
                 f"v={format_monomial(c.witness.v)} i={c.witness.i + 1}")
    _emit(args, text, c.to_dict())
    return 0


def cmd_radical(args) -> int:
    r = radical(_load(args, args.file))
    _emit(args, format_ideal(r).rstrip("\n"), ideal_to_dict(r))
    return 0


def cmd_product(args) -> int:
    p = product(_load(args, args.left), _load(args, args.right))
    _emit(args, format_ideal(p).rstrip("\n"), ideal_to_dict(p))
    return 0


def cmd_path(args) -> int:
    ideal = _load(args, args.file)
    u = parse_monomial(args.u, ideal.n)
    v = parse_monomial(args.v, ideal.n)
    if not 1 <= args.i <= ideal.n:
        raise ValueError(f"index {args.i} is outside 1..{ideal.n}")
    p = exchange_path(ideal, u, v, args.i - 1)
    record = {"u": format_monomial(u), "v": format_monomial(v), "i": args.i,
              "steps": [format_monomial(w) for w in p.steps],
              "distances": p.distances, "j0": p.j0 + 1,
              "result": format_monomial(p.result)}
    lines = [f"{format_monomial(w)}  dist={dd}" for w, dd in zip(p.steps, p.distances)]
    lines.append(f"j0={p.j0 + 1} x{args.i}*u/x{p.j0 + 1}={format_monomial(p.result)}")
    _emit(args, "\n".join(lines), record)
    return 0


def _spec(args) -> EnumSpec:
    return EnumSpec(args.n, args.d, args.cap, args.min_gens, args.max_gens, args.mod_sym)


def cmd_enumerate(args) -> int:
    rows = census(_spec(args), args.workers)
    if args.only == "polymatroidal":
        rows = [r for r in rows if r.is_polymatroidal]
    elif args.only == "unmixed":
        rows = [r for r in rows if r.is_polymatroidal and r.unmixed and r.cm is False]
    if args.format == "structured":
        for r in rows:
            print(json.dumps(r.to_dict(), sort_keys=True))
    else:
        print("\t".join(CensusRow.COLUMNS))
        for r in rows:
            print(r.to_line())
    print(f"# rows={len(rows)}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    spec = _spec(args)
    try:
        report = verify_classification(spec, args.workers, paths=args.paths)
    except VerificationError as exc:
        record = {"violations": 1, "message": str(exc).splitlines()[0],
                  "row": exc.row.to_dict()}
        _emit(args, f"violations=1\n{exc}", record)
        return 1
    s = report.summary()
    verdicts = " ".join(f"{k}={v}" for k, v in s["verdicts"].items())
    text = (f"ideals={s['ideals']} polymatroidal={s['polymatroidal']} "
            f"violations={s['violations']}\n"
            f"matroidal={s['matroidal']} linear={s['linear']} cm={s['cm']} "
            f"unmixed_not_cm={s['unmixed_not_cm']} seconds={s['seconds']}\n{verdicts}")
    _emit(args, text, s)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--shrink", action="store_true",
                        help="drop variables that divide no generator first")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--format", choices=("text", "structured"), default="text")
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--d", type=int, required=True)
    sweep.add_argument("--cap", type=int, default=1)
    sweep.add_argument("--min-gens", type=int, default=1)
    sweep.add_argument("--max-gens", type=int, default=None)
    sweep.add_argument("--mod-sym", action="store_true",
                       help="one ideal per variable-permutation class")
    sweep.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="monideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="polymatroidal / matroidal test")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", parents=[common], help="h, q, dim, depth, CM")
    p.add_argument("file")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", parents=[common], help="CM family verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("radical", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("product", parents=[common])
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("path", parents=[common], help="exchange path from v towards u")
    p.add_argument("file")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("i", type=int, help="1-based index with a_i < b_i")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("enumerate", parents=[sweep], help="census rows for a sweep")
    p.add_argument("--only", choices=("all", "polymatroidal", "unmixed"), default="all")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[sweep], help="check the classification on a sweep")
    p.add_argument("--paths", action="store_true",
                   help="also audit the exchange-path construction")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, MonomialError, DegenerateIdeal, NotEquigenerated,
            BudgetExceeded, ExchangeAxiomViolated, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
