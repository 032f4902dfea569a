"""Command-line front door.

One binary, subcommand style.  Human tables go to stdout; --json switches to
machine-readable output with stable keys.  Exit codes: 0 success, 1 a
verifier found a counterexample, 2 usage or input error, 3 budget exceeded.
The WORDLEN_BUDGET environment variable overrides the default enumeration
budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import algebra, bounds, oracles, powers, structure, verify, words

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_SWEEPS = {
    "mh": verify.sweep_mh,
    "mhgen": verify.sweep_mh_general,
    "tc": verify.sweep_tc,
}


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _parse_word_arg(text: str, alphabet_spec: str | None) -> tuple[words.Word, bool]:
    if alphabet_spec is not None:
        return words.parse_word(text, words.Alphabet.from_spec(alphabet_spec)), False
    tokens = words.tokenize(text)
    if not tokens:
        raise words.UnknownToken("", 0)
    first_seen = list(dict.fromkeys(tokens))
    alphabet = words.Alphabet(tuple(first_seen))
    return words.parse_word(text, alphabet), True


def _cmd_complexity(args: argparse.Namespace) -> int:
    w, inferred = _parse_word_arg(args.word, args.alphabet)
    prof = words.complexity_profile(w)
    payload = {
        "word": w.render(),
        "alphabet": list(w.alphabet.symbols),
        "alphabet_inferred": inferred,
        "counts": list(prof.counts),
        "total": prof.total,
    }
    if args.json:
        _emit(payload)
    else:
        if inferred:
            print(f"alphabet (inferred): {' '.join(w.alphabet.symbols)}")
        for n, f in enumerate(prof.counts):
            print(f"f({n}) = {f}")
        print(f"total c(W) = {prof.total}")
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    w, inferred = _parse_word_arg(args.word, args.alphabet)
    dec = structure.minimal_qpt(w)
    prof = words.complexity_profile(w)
    payload = {
        "word": w.render(),
        "alphabet_inferred": inferred,
        "q": dec.q,
        "p": dec.p,
        "t": dec.t,
        "l": dec.l,
        "cost": dec.cost,
        "core_exponent": f"{dec.core_exponent.num}/{dec.core_exponent.den}",
        "profile_max": max(prof.counts),
    }
    if args.n is not None:
        lhs, rhs = structure.mh_equivalence(w, args.n)
        payload.update({"n": args.n, "lhs": lhs, "rhs": rhs, "agree": lhs == rhs})
    if args.json:
        _emit(payload)
    else:
        print(
            f"q={dec.q} p={dec.p} t={dec.t} cost={dec.cost} "
            f"exponent={payload['core_exponent']} max_f={payload['profile_max']}"
        )
        if args.n is not None:
            print(f"n={args.n}: f(n)<=n is {payload['lhs']}, cost<=n is {payload['rhs']}")
    if args.n is not None and not payload["agree"]:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_powers(args: argparse.Namespace) -> int:
    w, _ = _parse_word_arg(args.word, args.alphabet)
    exp, span = powers.max_factor_exponent(w)
    _emit(
        {
            "max_exponent": str(exp),
            "value": str(Fraction(exp.num, exp.den)),
            "witness": [span[0], span[1]],
            "witness_factor": w.factor(span[0], span[1]).render(),
        }
    )
    return EXIT_OK


def _default_budget(args: argparse.Namespace) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("WORDLEN_BUDGET")
    return int(env) if env else None


def _run_sweep_shard(job: tuple[str, int, int, int | None, int, int]) -> verify.SweepReport:
    name, alphabet_size, max_len, budget, which, of = job
    return _SWEEPS[name](alphabet_size, max_len, budget, shard=(which, of))


def _cmd_verify(args: argparse.Namespace) -> int:
    budget = _default_budget(args)
    if args.theorem == "shape":
        report = verify.sweep_profile_shape(args.count, args.maxlen, seed=args.seed)
    elif args.jobs > 1:
        import multiprocessing

        jobs = [
            (args.theorem, args.alphabet, args.maxlen, budget, i, args.jobs)
            for i in range(args.jobs)
        ]
        with multiprocessing.Pool(args.jobs) as pool:
            parts = pool.map(_run_sweep_shard, jobs)
        report = verify.merge_reports(parts)
    else:
        report = _SWEEPS[args.theorem](args.alphabet, args.maxlen, budget)
    for ce in report.counterexamples:
        _emit(ce)
    _emit(report.summary())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _cmd_alg(args: argparse.Namespace) -> int:
    S = algebra.GeneratorSet.from_file(args.file)
    if args.action == "length":
        trace = algebra.length_trace(S, max_len=args.cap or S.n * S.n)
        payload = {
            "dims": list(trace.dims),
            "length": trace.length,
            "generated_dim": trace.generated_dim,
        }
        if args.json:
            _emit(payload)
        else:
            print(f"dims: {list(trace.dims)}")
            print(f"l(S) = {trace.length}, dim L(S) = {trace.generated_dim}")
        return EXIT_OK

    trace = algebra.length_trace(S, max_len=args.cap or S.n * S.n)
    full = trace.generated_dim == S.n * S.n
    if full:
        m, estimated = S.n, False
    else:
        m = algebra.estimate_m_star(S, word_len_cap=max(trace.length, 1) + 1)
        estimated = True
    comp = algebra.check_liw_complexity(S, budget=args.budget or algebra.DEFAULT_SEARCH_BUDGET)
    power_report = None
    if S.field.p > m:
        power_report = algebra.check_irreducible_power_free(
            S, m, budget=args.budget or algebra.DEFAULT_SEARCH_BUDGET
        )
    alphabet = S.word_alphabet
    rows = []
    for idx, entry in enumerate(comp.entries):
        row = {
            "i": entry.i,
            "word": words.Word(entry.word, alphabet).render(),
            "c": entry.complexity_total,
            "c_ok": entry.ok,
        }
        if power_report is not None:
            pentry = power_report.entries[idx]
            row["max_exponent"] = str(pentry.exponent)
            row["power_ok"] = pentry.ok
        rows.append(row)
    payload = {
        "length": trace.length,
        "generated_dim": trace.generated_dim,
        "m": m,
        "m_estimated": estimated,
        "power_checked": power_report is not None,
        "liw": rows,
    }
    if args.json:
        _emit(payload)
    else:
        print(f"l(S) = {trace.length}, dim = {trace.generated_dim}, m = {m}"
              + (" (estimated)" if estimated else ""))
        for row in rows:
            print(f"  i={row['i']} word={row['word']} c={row['c']} ok={row['c_ok']}"
                  + (f" exp={row['max_exponent']} power_ok={row['power_ok']}"
                     if "max_exponent" in row else ""))
    ok = comp.all_ok and (power_report is None or power_report.all_ok)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.grid:
        bad = []
        cells = 0
        for m in range(2, args.m_max + 1):
            for d in range(m, args.d_max + 1):
                cells += 1
                if not bounds.pappacena_exceeds_main(d, m):
                    bad.append({"d": d, "m": m})
        for ce in bad:
            _emit(ce)
        _emit({"cells": cells, "counterexamples": len(bad),
               "d_max": args.d_max, "m_max": args.m_max})
        return EXIT_OK if not bad else EXIT_COUNTEREXAMPLE

    if args.dim is None or args.m is None:
        print("error: bounds requires --dim and --m (or --grid)", file=sys.stderr)
        return EXIT_USAGE
    report = bounds.bound_table(args.dim, args.m, args.n)
    payload = {
        "d": report.d,
        "m": report.m,
        "n": report.n,
        "trivial": report.trivial,
        "halfdim": str(report.halfdim),
        "paz": report.paz,
        "pappacena_approx": round(report.pappacena.approx(), 6),
        "best_main": {
            "k": report.best_main.k_star,
            "value": str(report.best_main.value),
            "integer_value": report.best_main.integer_value,
        },
        "pappacena_exceeds_main": bounds.pappacena_exceeds_main(report.d, report.m),
    }
    if args.json:
        _emit(payload)
    else:
        print(f"{'bound':<22}{'value':>14}")
        print(f"{'trivial (d-1)':<22}{report.trivial:>14}")
        print(f"{'half-dimension':<22}{str(report.halfdim):>14}")
        if report.paz is not None:
            print(f"{'matrix ceil bound':<22}{report.paz:>14}")
        print(f"{'sqrt-form (approx)':<22}{payload['pappacena_approx']:>14}")
        print(f"{'best max-form':<22}{str(report.best_main.value):>14}"
              f"  (k={report.best_main.k_star}, floor={report.best_main.integer_value})")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    checks = [
        verify.cross_validate_profiles(args.words, args.maxlen, seed=args.seed),
        verify.cross_validate_qpt(2, args.qpt_maxlen, seed=args.seed),
        verify.cross_validate_length(args.sets, seed=args.seed),
    ]
    failed = False
    for report in checks:
        status = "PASS" if report.ok else "FAIL"
        if args.json:
            _emit(report.summary() | {"status": status})
        else:
            print(f"{status} {report.name}: {report.words_checked} cases, "
                  f"{len(report.counterexamples)} mismatches")
        for ce in report.counterexamples:
            _emit(ce)
        failed = failed or not report.ok
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordlen",
        description="Subword complexity, periodic decompositions, power "
        "avoidance, and length bounds for matrix algebras over prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("complexity", help="factor counts and total complexity")
    c.add_argument("word")
    c.add_argument("--alphabet", help="explicit alphabet (chars or comma tokens)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_complexity)

    d = sub.add_parser("decompose", help="minimal (q, p, t) decomposition")
    d.add_argument("word")
    d.add_argument("--n", type=int, help="also check the equivalence at this n")
    d.add_argument("--alphabet")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("powers", help="max factor exponent and witness (JSON)")
    p.add_argument("word")
    p.add_argument("--alphabet")
    p.set_defaults(func=_cmd_powers)

    v = sub.add_parser("verify", help="exhaustive theorem sweeps")
    v.add_argument("theorem", choices=["mh", "mhgen", "tc", "shape"])
    v.add_argument("--alphabet", type=int, default=2, help="alphabet size")
    v.add_argument("--maxlen", type=int, default=12)
    v.add_argument("--count", type=int, default=10_000, help="random words (shape only)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--budget", type=int, help="enumeration budget override")
    v.set_defaults(func=_cmd_verify)

    a = sub.add_parser("alg", help="generating-set length and irreducible words")
    a.add_argument("action", choices=["length", "liw"])
    a.add_argument("file", help="matrix JSON {p, n, matrices}")
    a.add_argument("--cap", type=int, help="step cap (default n^2)")
    a.add_argument("--budget", type=int, help="word search budget")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=_cmd_alg)

    b = sub.add_parser("bounds", help="closed-form length bounds")
    b.add_argument("--dim", type=int, help="algebra dimension d")
    b.add_argument("--m", type=int, help="max minimal-polynomial degree")
    b.add_argument("--n", type=int, help="matrix size (enables the ceil bound)")
    b.add_argument("--grid", action="store_true", help="dominance sweep")
    b.add_argument("--m-max", type=int, default=20)
    b.add_argument("--d-max", type=int, default=400)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bounds)

    o = sub.add_parser("oracle", help="fast-path versus brute-force cross checks")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--words", type=int, default=2000, help="random profile checks")
    o.add_argument("--maxlen", type=int, default=300)
    o.add_argument("--qpt-maxlen", type=int, default=12, help="exhaustive qpt length")
    o.add_argument("--sets", type=int, default=50, help="random generator sets")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        oracles.BudgetExceeded,
        algebra.SearchBudgetExceeded,
        algebra.CapExceeded,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
