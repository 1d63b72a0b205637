"""Command line interface.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 search limit hit,
4 inapplicable move, 5 property violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .bounds import E, F as f_functional, G, H as h_functional, MAX_LIMIT, best_certificate, rlength_exact
from .conway import c2
from .diagram import DiagramError, build_Dn, build_En, parse_pd, serialize_pd
from .group import format_element, parse_element
from .invariants import cowrithe, crossing_number, invariant_Ilk, writhe
from .moves import (ClassificationError, InapplicableMove, MoveSite, apply_move,
                    check_delta, delta_of, dn_to_en_sequence, enumerate_moves)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_LIMIT, EXIT_MOVE, EXIT_VIOLATION = range(6)


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _diagram(text: str):
    try:
        return parse_pd(text)
    except DiagramError as exc:
        raise ParseError(str(exc)) from exc


def _invariants(d) -> dict:
    ilk = invariant_Ilk(d)
    return {
        "I_lk": format_element(ilk),
        "writhe": writhe(d),
        "crossing_number": crossing_number(d),
        "H": cowrithe(d),
    }


# -- commands: each returns (payload, text lines, exit status) ----------------


def cmd_invariant(args):
    d = _diagram(args.text)
    res = _invariants(d)
    lines = [f"I_lk = {res['I_lk']}", f"writhe = {res['writhe']}",
             f"crossing number = {res['crossing_number']}",
             f"H (negative cowrithe) = {res['H']}"]
    return res, lines, EXIT_OK


def _site_record(d, m: MoveSite) -> dict:
    delta = check_delta(d, m, delta_of(d, apply_move(d, m)))
    rec = m.to_dict(delta.change)
    rec["delta_text"] = format_element(delta.change)
    rec["generator"] = delta.label
    rec["n"] = delta.n
    return rec


def cmd_moves(args):
    d = _diagram(args.text)
    sites = [_site_record(d, m) for m in enumerate_moves(d)]
    lines = [f"{len(sites)} moves"]
    for s in sites:
        lines.append(f"{s['kind']:10s} face {s['face']:<3d} edges {s['edges']!s:12s} "
                     f"delta {s['delta_text']:16s} [{s['generator']}, n={s['n']}]")
    return {"count": len(sites), "moves": sites}, lines, EXIT_OK


def _load_moves(text: str) -> list[MoveSite]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"move description is not JSON: {exc}") from exc
    if isinstance(obj, dict) and "moves" in obj:
        obj = obj["moves"]
    if isinstance(obj, dict):
        obj = [obj]
    if not isinstance(obj, list):
        raise ParseError("expected a move object or an array of moves")
    return [MoveSite.from_dict(m) for m in obj]


def cmd_apply(args):
    d = _diagram(args.text)
    move_text = args.move
    if not move_text.lstrip().startswith(("{", "[")):
        move_text = _read_input(move_text)
    sites = _load_moves(move_text)
    steps = []
    cur = d
    for m in sites:
        after = apply_move(cur, m)
        change = delta_of(cur, after)
        steps.append({"kind": m.kind, "delta": format_element(change)})
        cur = after
    total = invariant_Ilk(cur) - invariant_Ilk(d)
    res = {"before": _invariants(d), "after": _invariants(cur), "steps": steps,
           "delta": format_element(total), "result": serialize_pd(cur)}
    lines = [f"{i + 1}. {s['kind']}: {s['delta']}" for i, s in enumerate(steps)]
    lines += [f"before: I_lk = {res['before']['I_lk']}",
              f"after:  I_lk = {res['after']['I_lk']}",
              f"total delta = {res['delta']}", res["result"]]
    return res, lines, EXIT_OK


def cmd_rlength(args):
    try:
        v = parse_element(args.text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if not 0 < args.limit <= MAX_LIMIT:
        raise UsageError(f"--limit must be in 1..{MAX_LIMIT}")
    bound, cert = best_certificate(v, (f_functional, G, E, h_functional))
    exact = None
    limit_hit = False
    if not args.bound_only:
        if bound > args.limit:
            limit_hit = True
        else:
            exact = rlength_exact(v, args.limit)
            limit_hit = exact is None
    res = {"element": format_element(v), "lower_bound": bound, "certificate": cert,
           "exact": exact, "limit_hit": limit_hit}
    lines = [f"element = {res['element']}",
             f"lower bound = {bound}" + (f" (certificate {cert})" if cert else "")]
    if not args.bound_only:
        lines.append(f"exact = {exact}" if exact is not None
                     else f"exact: limit {args.limit} reached")
    return res, lines, EXIT_LIMIT if limit_hit else EXIT_OK


def cmd_family(args):
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    if args.which in ("Dn", "En"):
        d = build_Dn(args.n) if args.which == "Dn" else build_En(args.n)
        pd = serialize_pd(d)
        return ({"n": args.n, "which": args.which, "crossings": d.n, "pd": pd},
                [pd], EXIT_OK)
    steps = dn_to_en_sequence(args.n)
    moves = [st.site.to_dict(st.delta.change) for st in steps]
    res = {"n": args.n, "which": "sequence", "start": serialize_pd(build_Dn(args.n)),
           "moves": moves}
    lines = [f"{i + 1}. {st.site.kind}: {format_element(st.delta.change)}"
             for i, st in enumerate(steps)]
    return res, lines, EXIT_OK


def _conway_payload(d) -> dict:
    c, h = c2(d), cowrithe(d)
    return {"c2": c, "H": h, "A": h + 4 * c}


def cmd_c2(args):
    res = _conway_payload(_diagram(args.text))
    return res, [f"c2 = {res['c2']}"], EXIT_OK


def cmd_arnold(args):
    res = _conway_payload(_diagram(args.text))
    lines = [f"c2 = {res['c2']}", f"H (negative cowrithe) = {res['H']}", f"A = {res['A']}"]
    return res, lines, EXIT_OK


def cmd_verify(args):
    from .verify import builtin_entries, load_corpus, run_suites
    if args.builtin == (args.corpus is not None):
        raise UsageError("give either --builtin or a corpus path")
    try:
        entries = builtin_entries(args.seed) if args.builtin else load_corpus(_read_input(args.corpus))
    except (DiagramError, ValueError, KeyError) as exc:
        raise ParseError(str(exc)) from exc
    report = run_suites(entries, seed=args.seed)
    res = report.to_dict()
    lines = [f"{len(entries)} diagrams, {report.total_checks} checks"]
    for s in report.suites:
        status = "ok" if s.ok else f"{len(s.violations)} VIOLATIONS"
        lines.append(f"  {s.name}: {s.checks} checks, {status}")
    if not report.ok:
        lines.append("counterexample: " + json.dumps(res["counterexample"], sort_keys=True))
    return res, lines, EXIT_OK if report.ok else EXIT_VIOLATION


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = _Parser(prog="knotdelta", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, fn, helptext):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(func=fn)
        return sp

    for name, fn, helptext in (
        ("invariant", cmd_invariant, "I_lk, writhe, crossing number and H of a PD diagram"),
        ("moves", cmd_moves, "list Reidemeister move sites with their I_lk change"),
        ("c2", cmd_c2, "Conway coefficient c_2"),
        ("arnold", cmd_arnold, "Arnold invariant A = H + 4 c_2"),
    ):
        add(name, fn, helptext).add_argument("input", nargs="?", help="PD file (default stdin)")

    sp = add("apply", cmd_apply, "apply a move or a move sequence")
    sp.add_argument("input", nargs="?", help="PD file (default stdin)")
    sp.add_argument("--move", required=True, help="move JSON, or a file holding it")

    sp = add("rlength", cmd_rlength, "lower bound and exact R-length of a group element")
    sp.add_argument("element", nargs="?", help='e.g. "2X_0 + Y_1 - 2Y_0 - X_-1" (default stdin)')
    sp.add_argument("--limit", type=int, default=12)
    sp.add_argument("--bound-only", action="store_true")

    sp = add("family", cmd_family, "the D_n / E_n family and the move sequence between them")
    sp.add_argument("n", type=int)
    sp.add_argument("which", choices=("Dn", "En", "sequence"))

    sp = add("verify", cmd_verify, "run the property suites over a corpus")
    sp.add_argument("corpus", nargs="?", help="corpus file: PD or JSON lines")
    sp.add_argument("--builtin", action="store_true")
    return p


def _emit(args, payload, lines, status, elapsed, raw: str | None):
    if args.format == "json":
        report = {"command": args.command,
                  "input_sha256": hashlib.sha256(raw.encode()).hexdigest() if raw is not None else None,
                  "status": status, "result": payload}
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)
        print(f"({elapsed:.3f}s)", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        if hasattr(args, "input"):
            args.text = _read_input(args.input)
        elif hasattr(args, "element"):
            args.text = args.element if args.element is not None else sys.stdin.read()
        else:
            args.text = None
        payload, lines, status = args.func(args)
    except UsageError as exc:
        print(f"knotdelta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"knotdelta: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InapplicableMove as exc:
        print(f"knotdelta: inapplicable move: {exc}", file=sys.stderr)
        return EXIT_MOVE
    except ClassificationError as exc:
        print(f"knotdelta: property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    _emit(args, payload, lines, status, time.perf_counter() - t0, args.text)
    return status


if __name__ == "__main__":
    sys.exit(main())
