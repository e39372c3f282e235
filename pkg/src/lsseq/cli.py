"""Command line front end: ``lsseq <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .algebra import FieldContext, QuadElem, format_elem, parse_elem, to_float
from .analysis import (as_float, cor2_bound, discrepancy_curve, iz_bound, report)
from .cfrac import cf_of_beta, convergents, ostrowski
from .equivalence import (denominator_probe, verify_lemma2_blocks,
                          verify_union_contiguity, verify_vdc)
from .partitions import DEFAULT_CAP, CapacityError, counts, left_endpoints, ls_partition, partition_csv
from .sequences import kronecker, ls_points, symmetrized_kronecker, van_der_corput

KINDS = ("ls", "vdc", "kronecker", "symkron")
DISC_COLUMNS = ["N", "D_extreme", "D_star", "N_D_over_logN", "iz_bound", "cor2_bound"]


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", "verification failed"))
        self.payload = payload


# ------------------------------------------------------------ helpers

def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _exact_text(v, ctx: FieldContext) -> str:
    if isinstance(v, QuadElem):
        return format_elem(v)
    if isinstance(v, (int, Fraction)):
        return format_elem(QuadElem(v, 0, ctx))
    return ""


def _points(args, count: int):
    ctx = FieldContext(args.L, args.S)
    if args.kind == "ls":
        return ls_points(args.L, args.S, count, args.cap), ctx
    if args.kind == "vdc":
        if args.L < 2:
            raise UsageError("vdc uses --L as the base, which must be >= 2")
        return van_der_corput(args.L, count, exact=args.exact), FieldContext(args.L, 0)
    z = float(args.z) if args.z is not None else ctx.beta
    gen = kronecker if args.kind == "kronecker" else symmetrized_kronecker
    return gen(z, count), ctx


def parse_gen_csv(text: str, ctx: FieldContext) -> list[QuadElem]:
    """Read back the exact column written by ``gen --exact``."""
    rows = csv.DictReader(io.StringIO(text))
    return [parse_elem(r["value_exact"], ctx) for r in rows]


# ----------------------------------------------------------- commands

def cmd_gen(args) -> str:
    pts, ctx = _points(args, args.count)
    rows = []
    for i, p in enumerate(pts, start=1):
        fv = p if isinstance(p, float) else (to_float(p) if isinstance(p, QuadElem) else float(p))
        rows.append((i, repr(fv), _exact_text(p, ctx) if args.exact else ""))
    if args.format == "json":
        return _json([{"index": i, "value_float": float(f), "value_exact": e} for i, f, e in rows])
    return _csv(["index", "value_float", "value_exact"], rows)


def cmd_partition(args) -> str:
    state = ls_partition(args.L, args.S, args.levels, args.cap)
    if args.format == "json":
        t, l, s = state.counts
        return _json({
            "L": args.L, "S": args.S, "step": state.step, "t": t, "l": l, "s": s,
            "intervals": [{"left_exact": format_elem(iv.left), "left_float": to_float(iv.left),
                           "length_exponent": iv.exponent} for iv in state.intervals],
        })
    return partition_csv(state)


def cmd_cf(args) -> str:
    exp = cf_of_beta(args.L, args.S, args.depth)
    table = convergents(exp.coefficients)
    if args.format == "csv":
        rows = [(i, exp.coefficients[i] if i >= 0 else "", table.p(i), table.q(i))
                for i in range(-1, table.depth + 1)]
        return _csv(["i", "a", "p", "q"], rows)
    out = {"L": args.L, "S": args.S, "rational": exp.rational, **table.to_dict()}
    if args.count and args.S == 1:
        out["ostrowski"] = json.loads(ostrowski(args.count, table, args.L).to_json())
    return _json(out)


def _Ns(args) -> list[int]:
    if not args.Ns:
        raise UsageError("--Ns is required, e.g. --Ns 10,100,1000")
    try:
        Ns = [int(v) for v in args.Ns.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --Ns: {exc}") from None
    if not Ns or min(Ns) < 1:
        raise UsageError("--Ns values must be positive")
    return Ns


def _disc_rows(reports) -> list[dict]:
    return [r.row() for r in reports]


def _emit_disc(args, rows) -> str:
    if args.format == "json":
        return _json(rows)
    return _csv(DISC_COLUMNS, [[r[c] for c in DISC_COLUMNS] for r in rows])


def cmd_disc(args) -> str:
    Ns = _Ns(args)
    if args.kind == "ls":
        return _emit_disc(args, _disc_rows(discrepancy_curve(args.L, args.S, Ns)))
    pts, _ = _points(args, max(Ns))
    return _emit_disc(args, _disc_rows(report(pts[:N]) for N in Ns))


def cmd_curve(args) -> str:
    Ns = [counts(args.L, args.S, n)[0] for n in range(1, args.levels + 1)]
    Ns = [N for N in Ns if 1 < N <= args.cap]
    if not Ns:
        raise UsageError("no level with 1 < t_n <= cap")
    return _emit_disc(args, _disc_rows(discrepancy_curve(args.L, args.S, Ns)))


def cmd_bounds(args) -> str:
    found = []
    if args.L >= args.S >= 1:
        found.append(iz_bound(args.L, args.S))
    if args.S == 1:
        found.append(cor2_bound(args.L))
    if not found:
        raise UsageError("bounds need L >= S >= 1 (the second bound also needs S = 1)")
    dicts = [b.as_dict() for b in found]
    if args.format == "json":
        return _json(dicts)
    if args.format == "csv":
        cols = ["name", "L", "S", "gamma", "delta", "printed_gamma", "printed_delta"]
        return _csv(cols, [[d.get(c, "") for c in cols] for d in dicts])
    lines = []
    for b in found:
        line = f"{b.name:5s} L={b.L} S={b.S}  gamma={b.gamma:.4g}  delta={b.delta:.4g}"
        if b.printed is not None:
            line += f"  | printed: gamma={b.printed[0]:g} delta={b.printed[1]:g}"
        if b.name == "iz":
            line += "  [" + ", ".join(f"{k}={float(v):.6g}" for k, v in b.extras.items()) + "]"
        if b.note:
            line += f"  ({b.note})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> str:
    L, S, levels = args.L, args.S, args.levels
    if S == 1:
        blocks = verify_lemma2_blocks(L, levels)
        contiguous = verify_union_contiguity(L, max(levels - 1, 0))
        payload = {"L": L, "S": S, "levels": levels,
                   "union_contiguous": contiguous,
                   "blocks": [b.as_dict() for b in blocks]}
        if not args.full:
            for b in payload["blocks"]:
                if b["passed"] and len(b["observed"]) > 16:
                    b["observed"] = b["observed"][:16] + ["..."]
        ok = contiguous and all(b.passed for b in blocks)
    elif S == 0:
        N = counts(L, 0, levels)[0]
        if N > args.cap:
            raise CapacityError(f"t_{levels} = {N} exceeds cap {args.cap}")
        ok = verify_vdc(L, N)
        payload = {"L": L, "S": S, "levels": levels, "N": N, "van_der_corput": ok}
    else:
        payload = {"L": L, "S": S, "levels": levels, "levels_checked": []}
        ok = True
        for n in range(levels + 1):
            res = _structure_check(L, S, n, args.cap)
            payload["levels_checked"].append(res)
            ok = ok and res["prefix_matches_partition"] and res["two_gap"]
    payload["passed"] = ok
    if not ok:
        payload["reason"] = "verification failed"
        raise VerificationFailed(payload)
    return _json(payload)


def _structure_check(L: int, S: int, n: int, cap: int) -> dict:
    from .algebra import exact_sorted, power_basis
    state = ls_partition(L, S, n, cap)
    pts = exact_sorted(ls_points(L, S, counts(L, S, n)[0], cap))
    ctx = state.context
    gaps = {b - a for a, b in zip(pts, pts[1:] + [ctx.one])}
    want = {power_basis(ctx, n)}
    if counts(L, S, n)[2]:
        want.add(power_basis(ctx, n + 1))
    return {"level": n, "t": len(pts),
            "prefix_matches_partition": pts == left_endpoints(state),
            "two_gap": gaps == want}


def cmd_probe(args) -> str:
    res = denominator_probe(args.L, args.S, args.kmax)
    if args.format == "csv":
        return _csv(["k", "denominator"], res.denominators)
    return res.to_json() + "\n"


COMMANDS = {
    "gen": cmd_gen, "partition": cmd_partition, "cf": cmd_cf, "disc": cmd_disc,
    "bounds": cmd_bounds, "verify": cmd_verify, "probe": cmd_probe, "curve": cmd_curve,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--L", type=int, default=1)
    common.add_argument("--S", type=int, default=1)
    common.add_argument("--count", type=int, default=None)
    common.add_argument("--levels", type=int, default=8)
    common.add_argument("--Ns", default=None, help="comma separated sample sizes")
    common.add_argument("--exact", action="store_true")
    common.add_argument("--format", choices=("csv", "json", "text"), default=None)
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max points held in memory")

    p = argparse.ArgumentParser(prog="lsseq", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate sequence points")
    g.add_argument("--kind", choices=KINDS, default="ls")
    g.add_argument("--z", default=None, help="float rotation for kronecker kinds (default: exact beta)")
    sub.add_parser("partition", parents=[common], help="LS partition after --levels refinements")
    c = sub.add_parser("cf", parents=[common], help="continued fraction of beta")
    c.add_argument("--depth", type=int, default=20)
    d = sub.add_parser("disc", parents=[common], help="discrepancy at the sizes in --Ns")
    d.add_argument("--kind", choices=KINDS, default="ls")
    d.add_argument("--z", default=None)
    sub.add_parser("bounds", parents=[common], help="bound constants")
    v = sub.add_parser("verify", parents=[common], help="check the structure of LS points")
    v.add_argument("--full", action="store_true", help="list every observed index")
    pr = sub.add_parser("probe", parents=[common], help="denominators of beta**k for S >= 2")
    pr.add_argument("--kmax", type=int, default=20)
    sub.add_parser("curve", parents=[common], help="discrepancy at N = t_1 .. t_levels")
    return p


DEFAULT_FORMAT = {"bounds": "text", "cf": "json", "verify": "json", "probe": "json"}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = args.format or DEFAULT_FORMAT.get(args.command, "csv")
    if args.L < 1 or args.S < 0:
        parser.error("need --L >= 1 and --S >= 0")
    if args.command == "gen":
        if args.count is None or args.count < 1:
            parser.error("gen needs --count >= 1")
    if args.format == "text" and args.command != "bounds":
        parser.error("--format text is only available for bounds")
    try:
        text = COMMANDS[args.command](args)
    except VerificationFailed as exc:
        sys.stdout.write(_json(exc.payload))
        return 1
    except (UsageError, CapacityError, ValueError) as exc:
        parser.error(str(exc))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
