"""Command-line front end.

Commands:
  compute     homology / graded homology and the Euler-Jones cross-check
  verify      axiom report and 4-Tu check for a theory
  invariance  randomized R1/R2 harness and the R3-pair corpus check
  surface     closed-surface evaluation

Exit codes: 0 all checks pass, 1 computation error, 2 assertion or
mismatch, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import corpus
from .algebra import (preset, theory_from_params, theory_from_triple,
                      verify_4tu, verify_axioms)
from .diagram import load_diagram, random_moves
from .errors import InputError, MismatchError, VlinkhomError
from .fields import field_by_name
from .homology import (build_complex, graded_euler_poly, graded_homology,
                       homology)
from .jones import jones_at_one, kauffman_jones
from .tqft import evaluate_closed_surface

EXIT_OK = 0
EXIT_COMPUTE = 1
EXIT_MISMATCH = 2
EXIT_INPUT = 3


def _add_theory_flags(p):
    p.add_argument("--theory", help="preset name (f2_row1..f2_row8, manturov)")
    p.add_argument("--params", help="explicit a=..,t=..,lambda=..,mu=..,beta=..[,field=..]")
    p.add_argument("--triple", help="a,lambda,mu[,field=..] with beta = 0 and t solved")
    p.add_argument("--field", default=None, help="q | f2 | fp:P (default q)")


def _add_output_flags(p):
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")


def _split_kv(text):
    plain, keyed = [], {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" in item:
            k, v = item.split("=", 1)
            keyed[k.strip().lower()] = v.strip()
        else:
            plain.append(item)
    return plain, keyed


def resolve_theory(args):
    """Build (theory, selector-echo) from the CLI flags; exactly one selector."""
    chosen = [x for x in (args.theory, args.params, args.triple) if x]
    if len(chosen) != 1:
        raise InputError("exactly one of --theory / --params / --triple is required")
    if args.theory:
        return preset(args.theory), {"preset": args.theory.strip().lower()}
    if args.params:
        plain, keyed = _split_kv(args.params)
        if plain:
            raise InputError(f"--params items must be key=value, got {plain!r}")
        fld = field_by_name(keyed.pop("field", args.field or "q"))
        try:
            vals = {k: fld.parse(keyed.pop(k)) for k in ("a", "t", "lambda", "mu", "beta")}
        except KeyError as exc:
            raise InputError(f"--params is missing {exc.args[0]!r}") from None
        if keyed:
            raise InputError(f"unknown --params keys {sorted(keyed)}")
        th = theory_from_params(vals["a"], vals["t"], vals["lambda"],
                                vals["mu"], vals["beta"], field=fld)
        return th, {"params": {k: fld.to_str(v) for k, v in vals.items()},
                    "field": fld.name}
    plain, keyed = _split_kv(args.triple)
    if len(plain) != 3:
        raise InputError("--triple needs exactly three values a,lambda,mu")
    fld = field_by_name(keyed.pop("field", args.field or "q"))
    if keyed:
        raise InputError(f"unknown --triple keys {sorted(keyed)}")
    a, lam, mu = (fld.parse(x) for x in plain)
    th = theory_from_triple(a, lam, mu, field=fld)
    return th, {"triple": [fld.to_str(a), fld.to_str(lam), fld.to_str(mu)],
                "field": fld.name}


def _load_diagrams(args):
    if args.diagram:
        return [load_diagram(p) for p in args.diagram]
    return corpus.load_corpus()


def _emit(args, payload, text_lines):
    if args.format == "text":
        body = "\n".join(text_lines) + "\n"
    else:
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _betti_json(result):
    return {str(i): b for i, b in sorted(result.betti.items())}


def _qtable_json(result):
    return {f"{i},{q}": v for (i, q), v in sorted(result.qtable.items())}


def cmd_compute(args):
    th, echo = resolve_theory(args)
    reports, lines = [], []
    all_ok = True
    for d in _load_diagrams(args):
        c = build_complex(d, th)
        res = graded_homology(c) if args.graded else homology(c)
        j1 = jones_at_one(d, c.smoothings)
        ok = res.euler == j1
        all_ok = all_ok and ok
        rep = {
            "diagram": d.name or d.serialize(),
            "theory": echo,
            "dims": c.dims(),
            "betti": _betti_json(res),
            "euler": res.euler,
            "jones_at_one": j1,
            "euler_matches_jones": ok,
        }
        if args.graded:
            rep["qtable"] = _qtable_json(res)
            rep["graded_euler"] = graded_euler_poly(res).to_json()
            rep["kauffman_jones"] = kauffman_jones(d, c.smoothings).to_json()
        reports.append(rep)
        lines.append(f"{rep['diagram']}: dims={rep['dims']} betti={rep['betti']} "
                     f"euler={res.euler} jones(1)={j1} match={ok}")
        if args.graded:
            lines.append(f"  qtable={rep['qtable']}")
    _emit(args, reports, lines)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_verify(args):
    chosen = [x for x in (args.theory, args.params, args.triple) if x]
    if len(chosen) != 1:
        raise InputError("exactly one of --theory / --params / --triple is required")
    if args.params:
        # report constraint failures instead of refusing to construct
        plain, keyed = _split_kv(args.params)
        if plain:
            raise InputError(f"--params items must be key=value, got {plain!r}")
        fld = field_by_name(keyed.pop("field", args.field or "q"))
        vals = {k: fld.parse(keyed.pop(k)) for k in ("a", "t", "lambda", "mu", "beta")}
        th = _theory_unchecked(fld, vals)
        echo = {"params": {k: fld.to_str(v) for k, v in vals.items()},
                "field": fld.name}
    else:
        th, echo = resolve_theory(args)
    report = verify_axioms(th)
    ok4, witness4 = verify_4tu(th)
    F = th.field
    resolved = {k: F.to_str(v) for k, v in
                (("a", th.a), ("t", th.t), ("lambda", th.lam), ("mu", th.mu),
                 ("beta", th.beta), ("f", th.f), ("h", th.h))}
    payload = {
        "theory": echo,
        "resolved": resolved,
        "axioms": [{"name": c.name, "passed": c.passed,
                    **({"witness": c.witness} if c.witness and not c.passed else {})}
                   for c in report.checks],
        "four_tu": {"passed": ok4, **({"witness": witness4} if not ok4 else {})},
        "passed": report.passed and ok4,
    }
    lines = [f"theory {json.dumps(echo, sort_keys=True)}"]
    lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
              + (f"  {c.witness}" if c.witness and not c.passed else "")
              for c in report.checks]
    lines.append(f"  [{'ok' if ok4 else 'FAIL'}] four_tu"
                 + (f"  {witness4}" if not ok4 else ""))
    _emit(args, payload, lines)
    return EXIT_OK if payload["passed"] else EXIT_MISMATCH


def _theory_unchecked(fld, vals):
    from .algebra import TheoryParams, _derive
    f, h = _derive(fld, vals["a"], vals["t"], vals["lambda"], vals["mu"], vals["beta"])
    return TheoryParams(fld, vals["a"], vals["t"], vals["lambda"], vals["mu"],
                        vals["beta"], f, h, "")


def cmd_invariance(args):
    th, echo = resolve_theory(args)
    diagrams = _load_diagrams(args)
    use_builtin_pairs = not args.diagram
    reports, lines = [], []
    mismatches = 0
    for d in diagrams:
        rng = random.Random(f"{args.seed}:{d.name or d.serialize()}")
        before = homology(build_complex(d, th))
        moved, trail = random_moves(d, args.moves, rng)
        after = homology(build_complex(moved, th))
        ok = before.betti == after.betti
        mismatches += 0 if ok else 1
        reports.append({
            "diagram": d.name or d.serialize(),
            "moves_applied": len(trail),
            "final_crossings": moved.n,
            "betti_before": _betti_json(before),
            "betti_after": _betti_json(after),
            "match": ok,
            **({} if ok else {"trail": trail}),
        })
        lines.append(f"{d.name or d.serialize()}: {len(trail)} moves, "
                     f"n={moved.n}, betti {'unchanged' if ok else 'CHANGED'}")
    pair_reports = []
    if use_builtin_pairs:
        for da, db in corpus.load_r3_pairs():
            ba = homology(build_complex(da, th))
            bb = homology(build_complex(db, th))
            ok = ba.betti == bb.betti
            mismatches += 0 if ok else 1
            pair_reports.append({
                "pair": [da.name, db.name],
                "betti": [_betti_json(ba), _betti_json(bb)],
                "match": ok,
            })
            lines.append(f"pair {da.name}/{db.name}: betti "
                         f"{'equal' if ok else 'DIFFER'}")
    payload = {"theory": echo, "seed": args.seed, "moves": args.moves,
               "diagrams": reports, "r3_pairs": pair_reports,
               "mismatches": mismatches}
    lines.append(f"mismatches: {mismatches}")
    _emit(args, payload, lines)
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_surface(args):
    th, echo = resolve_theory(args)
    value = evaluate_closed_surface(th, args.genus, args.crosscaps)
    payload = {"theory": echo, "genus": args.genus, "crosscaps": args.crosscaps,
               "value": th.field.to_str(value)}
    _emit(args, payload,
          [f"surface genus={args.genus} crosscaps={args.crosscaps}: "
           f"{th.field.to_str(value)}"])
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vlinkhom",
        description="Exact link homology for virtual links from rank-two "
                    "extended Frobenius algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="homology and the Euler/Jones cross-check")
    p.add_argument("--diagram", action="append",
                   help="diagram file (text or JSON); repeatable; "
                        "defaults to the built-in corpus")
    _add_theory_flags(p)
    p.add_argument("--graded", action="store_true",
                   help="quantum-graded homology (manturov-compatible theories)")
    _add_output_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="axiom report and 4-Tu check")
    _add_theory_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariance", help="randomized R1/R2 harness")
    p.add_argument("--diagram", action="append",
                   help="diagram file; repeatable; defaults to the corpus plus R3 pairs")
    _add_theory_flags(p)
    p.add_argument("--moves", type=int, default=50)
    p.add_argument("--seed", type=int, default=42)
    _add_output_flags(p)
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser("surface", help="evaluate a closed surface")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--crosscaps", type=int, default=0)
    _add_theory_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_surface)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stdout.write(json.dumps(
            {"error": {"kind": type(exc).__name__, "message": str(exc)}}) + "\n")
        return EXIT_INPUT
    except (MismatchError,) as exc:
        sys.stdout.write(json.dumps(
            {"error": {"kind": type(exc).__name__, "message": str(exc)}}) + "\n")
        return EXIT_MISMATCH
    except VlinkhomError as exc:
        from .errors import DSquaredNonzero
        kind = type(exc).__name__
        sys.stdout.write(json.dumps(
            {"error": {"kind": kind, "message": str(exc)}}) + "\n")
        return EXIT_MISMATCH if isinstance(exc, DSquaredNonzero) else EXIT_COMPUTE
    except OSError as exc:
        sys.stdout.write(json.dumps(
            {"error": {"kind": "OSError", "message": str(exc)}}) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
