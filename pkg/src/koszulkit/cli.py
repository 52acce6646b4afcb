"""Command-line interface.

Two subcommands:

* ``koszulkit compute <what>`` evaluates one invariant on an explicitly
  given ring / ideal / module instance;
* ``koszulkit suite <id>`` runs a named verification suite and prints
  its deterministic report.

Exit codes: 0 on success, 2 when a checked identity is violated (or a
suite reports a counterexample), 3 on parse errors or when the request
is outside the engine's capabilities.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import finitering as fr
from .complexes import ComplexError, koszul_homology_certified
from .derived import UnstabilizedError, ext, local_cohomology_socle, tor
from .modules import FPModule
from .rings import IdealGens, ParseError, parse_ideal, parse_poly, parse_ring
from .serre import (INF, TheoremViolation, builtin_predicates, depth_triple,
                    p_depth, p_width, width_pair)
from .suites import SUITE_IDS, SuiteError, run_suite

COMPUTE_WHATS = ("koszul", "tor", "ext", "depth", "width", "pdepth",
                 "pwidth", "socle", "localhom")


def _split_depth0(text: str, sep: str):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_module(ring, text: str) -> FPModule:
    """Module literals: 'R', 'R^n', 'R/(f, ..)', or
    'coker [p11, p12; p21, p22]' (rows = ambient positions,
    columns = relations).  The 'module .. over R;' wrapper of
    FPModule.literal is accepted too."""
    text = text.strip()
    if text.startswith("module"):
        text = text[len("module"):].strip()
    if text.endswith(";"):
        text = text[:-1].strip()
    if text.endswith("over R"):
        text = text[: -len("over R")].strip()
    if text == "R":
        return FPModule.free(ring, 1)
    if text.startswith("R^"):
        return FPModule.free(ring, int(text[2:]))
    if text.startswith("R/"):
        return FPModule.cyclic(ring, parse_ideal(ring, text[2:].strip()))
    if text.startswith("coker"):
        inner = text[len("coker"):].strip()
        if not (inner.startswith("[") and inner.endswith("]")):
            raise ParseError(f"coker literal must be bracketed: {text!r}")
        inner = inner[1:-1].strip()
        if not inner:
            return FPModule.free(ring, 1)
        rows = [[parse_poly(ring, p) for p in _split_depth0(r, ",")]
                for r in _split_depth0(inner, ";")]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ParseError("ragged coker matrix")
        cols = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
        return FPModule.from_columns(ring, len(rows), cols)
    raise ParseError(f"cannot parse module literal {text!r}")


def _module_summary(name: str, M: FPModule) -> str:
    from .groebner import buchberger
    P = M.pruned()
    if P.is_zero():
        return f"{name}: 0"
    ann = ", ".join(sorted({str(g) for g in buchberger(P.annihilator())})) or "0"
    return (f"{name}: rank {P.rank}, {len(P.relations)} relations, "
            f"ann = ({ann})")


def _fmt_depth(v) -> str:
    return "inf" if v is INF else str(int(v))


def _finite_ideal(ring, text: str):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"ideal literal must be parenthesized: {text!r}")
    inner = text[1:-1].strip()
    gens = []
    for part in inner.split(","):
        part = part.strip()
        if not part:
            continue
        g = ring.zero
        for _ in range(int(part)):
            g = ring.add(g, ring.one)
        gens.append(g)
    return fr.FiniteIdeal(ring, gens)


def _cmd_compute(args) -> int:
    lines = []
    if args.what == "localhom":
        # only the finite-ring backend computes local homology exactly
        try:
            ring = fr.parse_finite_ring(args.ring)
        except fr.FiniteRingError:
            print("localhom is not supported on the polynomial backend; "
                  "use a finite ring literal such as 'Z/8'", file=sys.stderr)
            return 3
        a = _finite_ideal(ring, args.ideal)
        M = fr.FiniteModule.regular(ring)
        if args.module and args.module.strip() != "R":
            M = fr.FiniteModule.quotient_by_ideal(
                ring, _finite_ideal(ring, args.module.strip().removeprefix("R/")).gens)
        H = fr.local_homology_fr(ring, a, args.i, M)
        lines.append(f"H^a_{args.i}: size {H.size}")
        out = "\n".join(lines)
        _emit(out, args.out)
        return 0

    ring = parse_ring(args.ring)
    a = parse_ideal(ring, args.ideal)
    M = parse_module(ring, args.module)
    preds = builtin_predicates(ring)
    if args.pred not in preds:
        print(f"unknown predicate {args.pred!r}; choose from "
              f"{sorted(preds)}", file=sys.stderr)
        return 3
    pred = preds[args.pred]
    rng = random.Random(args.seed)

    if args.what == "koszul":
        H = koszul_homology_certified(a, M, rng)
        for i, Hi in enumerate(H):
            lines.append(_module_summary(f"H_{i}", Hi))
    elif args.what in ("tor", "ext"):
        if not args.module2:
            print("--module2 is required for tor/ext", file=sys.stderr)
            return 3
        N = parse_module(ring, args.module2)
        fn = tor if args.what == "tor" else ext
        T = fn(args.i, N, M)
        label = f"Tor_{args.i}" if args.what == "tor" else f"Ext^{args.i}"
        lines.append(_module_summary(label, T))
    elif args.what == "depth":
        res = depth_triple(a, M, rng)
        lines.append(f"depth: {_fmt_depth(res.value)}")
        lines.append(f"by regular sequence: {_fmt_depth(res.by_regular_sequence)}")
        lines.append(f"by Koszul homology: {_fmt_depth(res.by_koszul)}")
        lines.append(f"by Ext scan: {_fmt_depth(res.by_ext)}")
    elif args.what == "width":
        lines.append(f"width: {_fmt_depth(width_pair(a, M))}")
    elif args.what == "pdepth":
        lines.append(f"{args.pred}-depth: {_fmt_depth(p_depth(pred, a, M))}")
    elif args.what == "pwidth":
        lines.append(f"{args.pred}-width: {_fmt_depth(p_width(pred, a, M))}")
    elif args.what == "socle":
        res = local_cohomology_socle(a, M, args.i, t_max=args.tmax)
        lines.append(f"tower stabilized at t = {res.t_stable}")
        if res.module is None:
            lines.append(f"H^{args.i}_a: stabilized at socle level only "
                         "(colimit need not be finitely generated)")
        else:
            lines.append(_module_summary(f"H^{args.i}_a", res.module))
        lines.append(_module_summary("socle", res.socle))
    out = "\n".join(lines)
    _emit(out, args.out)
    return 0


def _cmd_suite(args) -> int:
    rep = run_suite(args.suite_id, trials=args.trials, seed=args.seed,
                    pred=args.pred, ring=args.ring, bound=args.bound,
                    tmax=args.tmax, threads=args.threads)
    text = rep.to_csv() if args.format == "csv" else rep.to_text()
    _emit(text, args.out)
    return 2 if rep.verdict == "fail" else 0


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="koszulkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate one invariant")
    c.add_argument("what", choices=COMPUTE_WHATS)
    c.add_argument("--ring", required=True)
    c.add_argument("--ideal", required=True)
    c.add_argument("--module", default="R")
    c.add_argument("--module2")
    c.add_argument("--pred", default="zero")
    c.add_argument("--i", type=int, default=0)
    c.add_argument("--s", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--tmax", type=int, default=8)
    c.add_argument("--L", type=int, default=None)
    c.add_argument("--out")
    c.add_argument("--format", choices=("text", "csv"), default="text")

    s = sub.add_parser("suite", help="run a named verification suite")
    s.add_argument("suite_id", choices=SUITE_IDS)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--pred")
    s.add_argument("--ring")
    s.add_argument("--bound", type=int, default=64)
    s.add_argument("--tmax", type=int, default=8)
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--out")
    s.add_argument("--format", choices=("text", "csv"), default="text")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        return _cmd_suite(args)
    except (TheoremViolation, ComplexError) as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 2
    except (ParseError, SuiteError, fr.FiniteRingError,
            UnstabilizedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
