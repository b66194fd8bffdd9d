"""Command-line front end.

Exit codes: 0 success, 1 failed check, 2 bad input (unreadable, malformed or
over the state budget).
"""
from __future__ import annotations

import argparse
import json
import sys

from .battery import run_battery
from .diagram import DiagramError, counts, link_components, parse
from .evaluator import DEFAULT_MAX_STATES, StateBudgetExceeded, _check_budget, invariants, state_table
from .fixtures import BUILTIN, fixture_text
from .laurent import to_records
from .moves import MOVE_NAMES


class InputError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return parse(text)
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from None


def result_document(d, res=None) -> dict:
    res = res or invariants(d)
    c, s, v, w = counts(d)
    return {
        "k": res.k, "c": c, "s": s, "v": v, "writhe": w,
        "bracket": to_records(res.bracket),
        "r": to_records(res.r_poly),
        "phi": to_records(res.phi),
        "psi": to_records(res.psi),
    }


def cmd_eval(args, out) -> int:
    d = _load(args.path)
    res = invariants(d, workers=args.workers, max_states=args.max_states)
    if args.output == "json":
        json.dump(result_document(d, res), out, indent=2)
        out.write("\n")
        return 0
    c, s, v, w = counts(d)
    out.write(f"k: {res.k}\nc: {c}  s: {s}  v: {v}  writhe: {w}\nstates: {res.state_count}\n")
    out.write(f"bracket: {res.bracket}\nR: {res.r_poly}\nphi: {res.phi}\npsi: {res.psi}\n")
    return 0


def cmd_states(args, out) -> int:
    d = _load(args.path)
    _check_budget(d, args.max_states)
    ids = [x.id for x in d.resolvable()]
    rows = []
    for row in state_table(d):
        s = row.stats
        rows.append({
            "mask": row.state.mask,
            "resolutions": {str(k): r.name.lower() for k, r in row.state.assignment},
            "a": s.a, "b": s.b, "alpha": s.alpha, "beta": s.beta,
            "components": s.n_components, "parity": s.parity,
            "contribution": to_records(row.contribution),
            "_text": str(row.contribution),
        })
    if args.output == "json":
        json.dump([{k: v for k, v in r.items() if k != "_text"} for r in rows], out, indent=2)
        out.write("\n")
        return 0
    width = max(len(ids), 5)
    out.write(f"# crossings (bit order, low first): {' '.join(map(str, ids))}; bit 1 = disoriented\n")
    out.write(f"{'state':>{width}}  {'a':>3} {'b':>3} {'alpha':>5} {'beta':>4} {'||S||':>5} {'i':>3}  contribution\n")
    for r in rows:
        bits = format(r["mask"], f"0{len(ids)}b")[::-1] if ids else "-"
        out.write(f"{bits:>{width}}  {r['a']:>3} {r['b']:>3} {r['alpha']:>5} {r['beta']:>4} "
                  f"{r['components']:>5} {r['parity']:>3}  {r['_text']}\n")
    return 0


def cmd_check(args, out) -> int:
    reports = run_battery(args.scope, seed=args.seed, n_random=args.random)
    ok = True
    for name, rep in reports.items():
        status = "PASS" if rep.ok else "FAIL"
        ok &= rep.ok
        out.write(f"{status} {name}: {rep.checked} cases")
        out.write(f", {len(rep.failures)} failures\n" if rep.failures else "\n")
        for f in rep.failures[:10]:
            out.write(f"    {f}\n")
    return 0 if ok else 1


def cmd_examples(args, out) -> int:
    if args.name is None:
        for name in BUILTIN:
            out.write(name + "\n")
        return 0
    if args.name not in BUILTIN:
        raise InputError(f"unknown example {args.name!r}; choose from {', '.join(BUILTIN)}")
    out.write(fixture_text(args.name))
    return 0


def cmd_validate(args, out) -> int:
    d = _load(args.path)
    c, s, v, w = counts(d)
    out.write(f"ok: c={c} s={s} v={v} writhe={w} k={link_components(d)} loops={d.free_loops}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    common.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES,
                        help="refuse diagrams with more states (default 2^20)")
    common.add_argument("--workers", type=int, default=None,
                        help="processes for the state sum (default: all cores)")

    p = argparse.ArgumentParser(prog="vsjones", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="compute bracket, R, phi, psi")
    e.add_argument("path")
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("states", parents=[common], help="dump the per-state table")
    s.add_argument("path")
    s.set_defaults(func=cmd_states)

    c = sub.add_parser("check", parents=[common], help="run the invariance battery")
    c.add_argument("scope", nargs="?", default="all", choices=("all",) + MOVE_NAMES)
    c.add_argument("--random", type=int, default=5, help="random diagrams added to the battery")
    c.set_defaults(func=cmd_check)

    x = sub.add_parser("examples", parents=[common], help="list or print built-in diagrams")
    x.add_argument("name", nargs="?")
    x.set_defaults(func=cmd_examples)

    v = sub.add_parser("validate", parents=[common], help="parse and validate a diagram file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, StateBudgetExceeded) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
