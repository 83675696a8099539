"""
Command-line front end.

Exit codes: 0 every verdict passed, 1 some verdict failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import corpus as builtin
from .aomoto import (aomoto_betti, build_os, check_cup_nonzero, cup_ranks, linearized_dims,
                     random_weights)
from .arrangement import (Arrangement, ArrangementError, betti, enumerate_chambers, intersection_poset,
                          is_central, whitney_betti)
from .exactfield import GF, QQ, Field, root_of_unity, smallest_prime_with_roots
from .fileformat import ParseError, read_arrangement
from .flagcomplex import CharacterSpec, build_flag, local_cohomology, opposite_pairs, stratify
from .sweep import SweepConfig, SweepTooLarge, cross_validate, run_sweep
from .triples import betti_additivity, make_triple, triple_inequality

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _summary(A: Arrangement) -> dict:
    return {"ell": A.ell, "n": A.n, "hyperplanes": [str(h) for h in A], "betti": list(betti(A)),
            "infinity_points": [[i + 1 for i in c] for c in A.infinity_points]}


def character_from_args(A: Arrangement, args) -> CharacterSpec:
    if args.roots is not None:
        if args.prime is None:
            raise UsageError("--roots requires --prime")
        K = GF(args.prime)
        roots = _ints(args.roots)
        if len(roots) != A.n:
            raise UsageError(f"--roots needs {A.n} values, got {len(roots)}")
        if any(r % args.prime == 0 for r in roots):
            raise UsageError("square roots must be nonzero mod p")
        return CharacterSpec(K, tuple(K(r) for r in roots))
    m = args.m if args.m is not None else 1
    exps = _ints(args.exponents) if args.exponents else [0] * A.n
    if len(exps) != A.n:
        raise UsageError(f"--exponents needs {A.n} values, got {len(exps)}")
    try:
        config = SweepConfig(A, m, args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return config.character([a % m for a in exps])


def _verdicts(h, b, trivial: bool) -> dict:
    return {
        "inequality": all(x <= y for x, y in zip(h, b)),
        "euler": sum((-1) ** k * (x - y) for k, (x, y) in enumerate(zip(h, b))) == 0,
        "strictness": h == b if trivial else all(x < y for x, y in zip(h, b)),
    }


def cmd_analyze(A: Arrangement, args) -> tuple[dict, bool]:
    poset = intersection_poset(A)
    chambers = enumerate_chambers(A)
    doc = {"arrangement": _summary(A), "whitney_betti": list(whitney_betti(A)),
           "vertices": [{"point": [str(c) for c in e.point], "lines": [i + 1 for i in e.hyperplanes],
                         "mobius": e.mobius} for e in poset.points],
           "chambers": {"total": len(chambers), "bounded": sum(c.bounded for c in chambers)},
           "flags": []}
    ok = whitney_betti(A) == betti(A)
    for seed in args.seeds:
        F = build_flag(A, seed)
        st = stratify(A, F)
        pairs = opposite_pairs(A, F)
        table = [{"chamber": str(C), "opposite": str(D), "dim_X": dim, "degree": deg,
                  "expected": (-1) ** (A.ell - 1 - dim)} for C, D, dim, deg in pairs]
        sizes = st.sizes(A.ell)
        strata_match_betti = sizes == betti(A) and all(len(st.bch[k]) == len(st.uch[k + 1]) for k in range(A.ell))
        opposite_degrees = all(r["degree"] == r["expected"] for r in table)
        ok &= strata_match_betti and opposite_degrees
        doc["flags"].append({
            "seed": seed,
            "direction": [str(c) for c in F.direction],
            "strata": [[str(C) for C in s] for s in st.strata[: A.ell + 1]],
            "sizes": list(sizes),
            "bch": [len(x) for x in st.bch[: A.ell + 1]],
            "uch": [len(x) for x in st.uch[: A.ell + 1]],
            "opposite_pairs": table,
            "strata_match_betti": strata_match_betti,
            "opposite_degrees": opposite_degrees,
        })
    return doc, ok


def cmd_cohomology(A: Arrangement, args) -> tuple[dict, bool]:
    chi = character_from_args(A, args)
    rep = local_cohomology(A, chi, args.seed)
    verdicts = _verdicts(rep.h, rep.betti, chi.is_trivial())
    verdicts["flag_independent"] = local_cohomology(A, chi, args.seed + 7).h == rep.h
    doc = {"arrangement": _summary(A), "character": chi.to_json(), "trivial": chi.is_trivial(),
           "h": list(rep.h), "ranks": list(rep.ranks), "verdicts": verdicts}
    return doc, all(verdicts.values())


def cmd_sweep(A: Arrangement, args) -> tuple[dict, bool]:
    prime = args.prime
    if prime == 0:
        prime = smallest_prime_with_roots(2 * args.m)
    try:
        config = SweepConfig(A, args.m, prime, limit=args.limit)
        rep = run_sweep(config, workers=args.workers)
    except (ValueError, SweepTooLarge) as exc:
        raise UsageError(str(exc)) from None
    doc = {"arrangement": _summary(A), "sweep": rep.to_json(full=args.full)}
    return doc, rep.passed


def _field(text: str) -> Field:
    if text.upper() in ("QQ", "Q"):
        return QQ
    try:
        return GF(int(text.upper().removeprefix("GF")))
    except ValueError as exc:
        raise UsageError(f"bad field {text!r}: {exc}") from None


def cmd_aomoto(A: Arrangement, args) -> tuple[dict, bool]:
    K = _field(args.field)
    if args.weights is None:
        raise UsageError("--weights is required")
    w = tuple(K(v) for v in _ints(args.weights))
    if len(w) != A.n:
        raise UsageError(f"--weights needs {A.n} values, got {len(w)}")
    dims = aomoto_betti(A, w)
    lin = {seed: linearized_dims(A, w, seed) for seed in (args.seed, args.seed + 7)}
    ranks = cup_ranks(A, w)
    verdicts = {"linearization_agrees": all(d == dims for d in lin.values())}
    if any(w):
        verdicts["cup_nonzero"] = all(r > 0 for r in ranks)
    if is_central(A) and sum(w, K.zero()):
        verdicts["central_exact"] = all(x == 0 for x in dims)
    doc = {"arrangement": _summary(A), "field": repr(K), "weights": [x.to_json() for x in w],
           "os_dims": list(build_os(A).dims), "aomoto_dims": list(dims), "cup_ranks": list(ranks),
           "linearized_dims": {str(s): list(d) for s, d in lin.items()}, "verdicts": verdicts}
    return doc, all(verdicts.values())


def cmd_triple(A: Arrangement, args) -> tuple[dict, bool]:
    H = args.delete - 1
    if not 0 <= H < A.n:
        raise UsageError(f"--delete must be between 1 and {A.n}")
    chi = character_from_args(A, args)
    if chi.q[H] != chi.field.one():
        raise UsageError(f"the monodromy around hyperplane {args.delete} must be trivial")
    T = make_triple(A, H)
    add = betti_additivity(A, H)
    rep = triple_inequality(A, H, chi)
    doc = {"arrangement": _summary(A), "delete": args.delete, "character": chi.to_json(),
           "deleted_essential": T.deleted_essential,
           "restricted_points": len(T.restricted_lines),
           "betti_additivity": add.ok, "report": rep.to_json(),
           "equality_case": "triggered" if rep.equality_degrees else "hypothesis not triggered"}
    return doc, add.ok and rep.inequality_ok and rep.equality_case_ok


def selftest_checks(name: str, A: Arrangement, m_values=(2, 3), log=print) -> bool:
    """Invariant battery for one arrangement; logs one PASS/FAIL line per check."""
    ok = True

    def record(check, passed):
        nonlocal ok
        ok &= bool(passed)
        log(f"{'PASS' if passed else 'FAIL'}  {name:<16} {check}")

    for seed in (1, 8):
        F = build_flag(A, seed)
        st = stratify(A, F)
        record(f"strata sizes seed={seed}", st.sizes(A.ell) == betti(A))
        record(f"opposite degrees seed={seed}", all(d == (-1) ** (A.ell - 1 - x) for _, _, x, d in opposite_pairs(A, F)))
    for m in m_values:
        config = SweepConfig(A, m)
        record(f"sweep m={m}", run_sweep(config).passed)
        record(f"cross-validate m={m}", cross_validate(config).ok)
    if A.n <= 5:
        for p in (2, 3):
            record(f"cup nonzero GF({p})", check_cup_nonzero(A, GF(p)).ok)
    rng = random.Random(0)
    for K in (QQ, GF(7)):
        agree = all(aomoto_betti(A, w) == linearized_dims(A, w) for w in
                    (random_weights(K, A.n, rng) for _ in range(10)))
        record(f"linearization {K!r}", agree)
    if A.ell == 2:
        record("betti additivity", all(betti_additivity(A, H).ok for H in range(A.n)))
    return ok


def cmd_selftest(args) -> int:
    if args.file:
        arrangements = {args.file: read_arrangement(args.file)}
    else:
        arrangements = builtin.corpus()
    start = time.perf_counter()
    ok = True
    for name, A in arrangements.items():
        ok &= selftest_checks(name, A, log=lambda s: print(s, file=sys.stderr if args.quiet else sys.stdout))
    print(f"selftest {'passed' if ok else 'FAILED'} in {time.perf_counter() - start:.1f}s")
    return EXIT_OK if ok else EXIT_FAIL


def _print_table(cmd: str, doc: dict) -> None:
    arr = doc.get("arrangement", {})
    if arr:
        print(f"ell={arr['ell']}  n={arr['n']}  betti={tuple(arr['betti'])}")
    if cmd == "analyze":
        print(f"chambers: {doc['chambers']['total']} ({doc['chambers']['bounded']} bounded)")
        for fl in doc["flags"]:
            print(f"flag seed {fl['seed']}: strata sizes {tuple(fl['sizes'])}, "
                  f"bch {tuple(fl['bch'])}, uch {tuple(fl['uch'])}")
            print(f"  {'C':<10}{'C^v':<10}{'dimX':>5}{'deg':>5}{'expect':>8}")
            for r in fl["opposite_pairs"]:
                print(f"  {r['chamber']:<10}{r['opposite']:<10}{r['dim_X']:>5}{r['degree']:>5}{r['expected']:>8}")
    elif cmd == "sweep":
        s = doc["sweep"]
        print(f"m={s['m']} field={s['field']} characters={s['characters']} pass={s['pass']}")
        for row in s["h_distribution"]:
            print(f"  h={tuple(row['h'])}: {row['count']}")
        print("  " + ", ".join(f"{k}={v}" for k, v in s["summary"].items()))
    else:
        for key in ("h", "aomoto_dims", "cup_ranks", "verdicts", "report", "equality_case"):
            if key in doc:
                print(f"{key}: {doc[key]}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chamberlocal",
                                     description="Local system cohomology of real line arrangement complements")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, character=False):
        p.add_argument("file", help="arrangement file ('dim <ell>' header, then 'a1 [a2] c' per line)")
        p.add_argument("--table", action="store_true", help="human-readable summary instead of JSON")
        p.add_argument("--seed", type=int, default=1, help="flag seed")
        if character:
            p.add_argument("--m", type=int, help="character order: q_i = zeta_m^a_i")
            p.add_argument("--exponents", help="comma-separated exponents a_1..a_n")
            p.add_argument("--prime", type=int, help="work in F_p (needs 2m | p-1, or raw --roots)")
            p.add_argument("--roots", help="comma-separated square roots r_i in F_p")

    p = sub.add_parser("analyze", help="poset, Betti numbers, chambers, strata and opposite pairs")
    common(p)
    p.add_argument("--seeds", type=_ints, default=[1, 8])
    common(sub.add_parser("cohomology", help="cohomology of one rank-one local system"), character=True)
    p = sub.add_parser("sweep", help="all characters of order dividing m")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--prime", type=int, nargs="?", const=0, default=None,
                   help="use F_p (default: smallest p with 2m | p-1)")
    p.add_argument("--limit", type=int, default=10 ** 6, help="maximum number of characters")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--full", action="store_true", help="include every character in the report")
    p = sub.add_parser("aomoto", help="Aomoto complex of a weight vector")
    common(p)
    p.add_argument("--weights", help="comma-separated integers w_1..w_n")
    p.add_argument("--field", default="QQ", help="QQ or a prime p")
    p = sub.add_parser("triple", help="deletion-restriction triple for one hyperplane")
    common(p, character=True)
    p.add_argument("--delete", type=int, required=True, help="1-based index of the distinguished hyperplane")
    p = sub.add_parser("selftest", help="invariant battery on the built-in corpus or one file")
    p.add_argument("file", nargs="?")
    p.add_argument("--quiet", action="store_true")
    return parser


COMMANDS = {"analyze": cmd_analyze, "cohomology": cmd_cohomology, "sweep": cmd_sweep,
            "aomoto": cmd_aomoto, "triple": cmd_triple}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return cmd_selftest(args)
        A = read_arrangement(args.file)
        start = time.perf_counter()
        doc, ok = COMMANDS[args.command](A, args)
    except (ParseError, ArrangementError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc["pass"] = ok
    doc["seconds"] = round(time.perf_counter() - start, 3)
    if args.table:
        _print_table(args.command, doc)
        print(f"pass: {ok}")
    else:
        json.dump(doc, sys.stdout, indent=2)
        print()
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
