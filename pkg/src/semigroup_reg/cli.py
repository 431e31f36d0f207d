"""Command-line front end.

Input files are line oriented: ``d alpha`` on the first line, then one
extra generator per line as ``d`` integers. ``--json`` reads the object
``{"d": .., "alpha": .., "generators": [[..], ..]}`` instead. Reports go to
standard output as JSON with sorted keys; diagnostics go to standard error.

Exit codes: 0 success, 2 invalid presentation, 3 enumeration cap hit,
4 pair points not equivalent Apery elements, 5 gaps requested for d != 2.
"""
import argparse
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from math import gcd

from .apery import apery_classes, apery_set
from .ideals import TooLargeError
from .lattice import SemigroupPresentation, degree, residue, validate
from .regularity import check_eisenbud_goto, decompose, gap_report
from .sequences import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_SEQS,
    SCOPES,
    CapExceeded,
    are_crossless,
    check_conjecture,
    check_pair,
    count_full,
    delta_min,
    delta_set,
    enumerate_full,
    find_crosses,
    h_min,
    is_adjacent,
    is_crossless,
    maximal_cross,
    third_element,
)

log = logging.getLogger("semigroup_reg")

EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_PAIR = 4
EXIT_DIM = 5

# listing every sequence pair is only done for small products
LIST_PAIRS = 64


class InputError(ValueError):
    pass


def parse_text(text):
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(v) for v in line.replace(",", " ").split()])
    if not rows or len(rows[0]) != 2:
        raise InputError("first line must be 'd alpha'")
    d, alpha = rows[0]
    return SemigroupPresentation(d, alpha, rows[1:])


def parse_json(text):
    obj = json.loads(text)
    return SemigroupPresentation(int(obj["d"]), int(obj["alpha"]), obj.get("generators", []))


def read_presentation(path, as_json=False):
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        return parse_json(text) if as_json else parse_text(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse {path}: {exc}") from exc


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def emit(obj, out=None):
    (out or sys.stdout).write(dumps(obj) + "\n")


def parse_point(s):
    return tuple(int(v) for v in s.replace(" ", "").strip("()[]").split(","))


# commands


def cmd_validate(args):
    P = read_presentation(args.file, args.json)
    rep = validate(P)
    emit(rep.to_dict())
    return 0 if rep.valid else EXIT_INVALID


def _load_valid(args):
    P = read_presentation(args.file, args.json)
    rep = validate(P)
    if not rep.valid:
        emit(rep.to_dict())
        for e in rep.errors:
            log.error("invalid presentation: %s", e)
        return None
    for w in rep.warnings:
        log.warning("%s", w)
    return P


def cmd_decompose(args):
    P = _load_valid(args)
    if P is None:
        return EXIT_INVALID
    report = decompose(P, args.field)
    out = report.to_dict()
    out["eisenbudGoto"] = check_eisenbud_goto(P, report=report).to_dict()
    emit(out)
    return 0


def cmd_gaps(args):
    P = _load_valid(args)
    if P is None:
        return EXIT_INVALID
    if P.d != 2:
        log.error("gaps need d = 2, got d = %d", P.d)
        return EXIT_DIM
    emit(gap_report(P).to_dict())
    return 0


def pair_report(P, x, y, max_seqs=DEFAULT_MAX_SEQS, max_pairs=DEFAULT_MAX_PAIRS):
    """Everything the pair command prints, as a dict."""
    alpha = P.alpha
    dh = int(degree(h_min(x, y), alpha))
    out = {
        "x": list(x),
        "y": list(y),
        "degX": int(degree(x, alpha)),
        "degY": int(degree(y, alpha)),
        "h": list(h_min(x, y)),
        "degH": dh,
        "lambdaCount": count_full(P, x),
        "nuCount": count_full(P, y),
    }
    dm = delta_min(P, x, y, max_seqs)
    out["delta"] = dm.value
    out["deltaBound"] = dm.bound
    out["deltaExact"] = dm.exact
    if dm.witness is not None:
        out["deltaWitness"] = {"lambda": dm.witness[0].to_list(), "nu": dm.witness[1].to_list()}
    cl = are_crossless(P, x, y, max_seqs)
    out["crossless"] = cl.value

    if out["lambdaCount"] * out["nuCount"] <= min(LIST_PAIRS, max_pairs):
        pairs = [(a, b) for a in enumerate_full(P, x) for b in enumerate_full(P, y)]
        out["listedPairs"] = "all"
    else:
        pairs = [dm.witness] if dm.witness is not None else []
        out["listedPairs"] = "witness"
    listed = []
    third = None
    for lam, nu in pairs:
        crosses = find_crosses(lam, nu, alpha)
        entry = {
            "lambda": lam.to_list(),
            "nu": nu.to_list(),
            "Delta": [list(p) for p in delta_set(lam, nu, alpha)],
            "delta": len(delta_set(lam, nu, alpha)) - 2,
            "crossless": is_crossless(lam, nu, alpha),
            "crosses": [c.to_dict() for c in crosses],
        }
        best = maximal_cross(crosses)
        if best is not None:
            entry["maximalCross"] = best.to_dict()
            if third is None and x != y:
                third = third_element(P, best)
        listed.append(entry)
    out["pairs"] = listed
    if third is not None:
        out["thirdElement"] = list(third)
    if P.d == 2 and x != y:
        cls = next(c for c in apery_classes(P) if x in c.elements)
        out["adjacent"] = is_adjacent(cls, x, y)
    verdict = check_pair(P, x, y, False, max_seqs)
    out["conjecture"] = verdict.verdict
    out["conjectureStrong"] = check_pair(P, x, y, True, max_seqs).verdict
    if x == y:
        ok = dm.bound is not None and dm.bound <= out["degX"] - 1
        out["selfBound"] = {"degXMinusOne": out["degX"] - 1, "holds": ok}
    return out


def cmd_pair(args):
    P = _load_valid(args)
    if P is None:
        return EXIT_INVALID
    x, y = parse_point(args.x), parse_point(args.y)
    if len(x) != P.d or len(y) != P.d:
        log.error("points must have %d coordinates", P.d)
        return EXIT_PAIR
    ba = apery_set(P)
    if x not in ba or y not in ba or not any(x) or not any(y):
        log.error("both points must be nonzero elements of the Apery set")
        return EXIT_PAIR
    if residue(x, P.alpha) != residue(y, P.alpha):
        log.error("points are not equivalent modulo alpha")
        return EXIT_PAIR
    emit(pair_report(P, x, y, args.max_seqs, args.max_pairs))
    return 0


# search


def degree_one_points(d, alpha):
    """All of M_{d,alpha} except the scaled unit vectors, in lexicographic order."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for v in range(left, -1, -1):
            rec(prefix + (v,), left - v, slots - 1)

    rec((), alpha, d)
    return [p for p in out if max(p) != alpha]


def sample_presentation(rng, cfg):
    """Draw a presentation; draws failing the coprimality condition are redrawn."""
    redraws = 0
    while True:
        d = rng.randint(cfg["d_min"], cfg["d_max"])
        alpha = rng.randint(cfg["alpha_min"], cfg["alpha_max"])
        pool = degree_one_points(d, alpha)
        hi = min(cfg["c_max"], len(pool))
        if pool and hi >= cfg["c_min"]:
            c = rng.randint(cfg["c_min"], hi)
            extras = rng.sample(pool, c)
            if reduce(gcd, (v for a in extras for v in a), 0) == 1:
                return SemigroupPresentation(d, alpha, extras), redraws
        redraws += 1
        if redraws > 10000:
            raise RuntimeError("could not draw a coprime presentation")


def run_trial(cfg, trial):
    rng = random.Random(f"{cfg['seed']}:{trial}")
    P, redraws = sample_presentation(rng, cfg)
    rec = {"trial": trial, "presentation": P.to_dict(), "redraws": redraws}
    try:
        report = decompose(P, cfg.get("field"))
        rec.update(regKB=report.reg, egBound=report.eg_bound, egHolds=report.eg_holds)
        scope = cfg["scope"]
        if scope == "adjacent-only" and P.d != 2:
            rec["skipped"] = "adjacent-only scope needs d = 2"
            return rec
        conj = check_conjecture(P, scope, cfg["max_seqs"], report.classes)
        rec.update(conj.to_dict())
        rec["indeterminatePairs"] = [
            [list(p.x), list(p.y)] for p in conj.pairs if p.verdict == "indeterminate"
        ]
    except (CapExceeded, TooLargeError) as exc:
        rec["error"] = str(exc)
    return rec


def search(cfg, workers=1):
    """Per-trial records in trial order, then a summary record."""
    trials = range(cfg["trials"])
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(run_trial, [cfg] * len(trials), trials))
    else:
        records = [run_trial(cfg, t) for t in trials]
    summary = {
        "trials": cfg["trials"],
        "config": {k: v for k, v in sorted(cfg.items())},
        "pairs": sum(r.get("pairs", 0) for r in records),
        "violations": sum(r.get("violated", 0) for r in records),
        "indeterminate": sum(r.get("indeterminate", 0) for r in records),
        "egFailures": sum(r.get("egHolds") is False for r in records),
        "errors": sum("error" in r for r in records),
        "redraws": sum(r["redraws"] for r in records),
    }
    return records, summary


def config_from_args(args):
    d_min = args.d_min if args.d_min is not None else args.d
    d_max = args.d_max if args.d_max is not None else args.d
    return {
        "seed": args.seed,
        "trials": args.trials,
        "alpha_min": args.alpha_min,
        "alpha_max": args.alpha_max,
        "d_min": d_min,
        "d_max": d_max,
        "c_min": args.c_min,
        "c_max": args.c_max,
        "scope": args.scope,
        "max_seqs": args.max_seqs,
        "max_pairs": args.max_pairs,
        "field": args.field,
    }


def cmd_search(args):
    cfg = config_from_args(args)
    t0 = time.perf_counter()
    records, summary = search(cfg, args.workers)
    for r in records:
        if "error" in r:
            log.warning("trial %d skipped: %s", r["trial"], r["error"])
        emit(r)
    emit({"summary": summary})
    log.info("search finished in %.2fs", time.perf_counter() - t0)
    return 0


def replay(record, max_seqs=DEFAULT_MAX_SEQS):
    """Re-run one emitted pair (presentation + x + y) through the pair analysis."""
    pres = record["presentation"]
    P = SemigroupPresentation(pres["d"], pres["alpha"], pres["generators"])
    x, y = tuple(record["x"]), tuple(record["y"])
    return pair_report(P, x, y, max_seqs)


def build_parser():
    ap = argparse.ArgumentParser(prog="semigroup-reg", description=__doc__.split("\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="instance file, '-' for stdin")
            p.add_argument("--json", action="store_true", help="input is a JSON object")
        p.add_argument("--field", default="q", help="q (default) or fp:P")
        p.add_argument("--max-seqs", type=int, default=DEFAULT_MAX_SEQS)
        p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    p = sub.add_parser("validate", help="check an instance file")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("decompose", help="decomposition, regularity and the EG verdict")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gaps", help="degree-one gaps and the derived bounds (d = 2)")
    common(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("pair", help="coincidences, crosses and conjecture verdict for x ~ y")
    common(p)
    p.add_argument("x", help="point, e.g. 27,243")
    p.add_argument("y", help="point, e.g. 207,63")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("search", help="randomised conjecture search")
    common(p, with_file=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--alpha-min", type=int, default=3)
    p.add_argument("--alpha-max", type=int, default=20)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--d-min", type=int)
    p.add_argument("--d-max", type=int)
    p.add_argument("--c-min", type=int, default=1)
    p.add_argument("--c-max", type=int, default=6)
    p.add_argument("--scope", choices=SCOPES, default="all-pairs")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INVALID
    except (CapExceeded, TooLargeError) as exc:
        log.error("cap exceeded: %s", exc)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
