"""Command-line front end.

Exit codes: 0 all checks pass (or the implication is not violated),
1 an identity fails (witness in the report), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from superjacobi import catalog, generator, poisson, reconstruction
from superjacobi.expr import identity_to_json
from superjacobi.reports import SCHEMA_VERSION
from superjacobi.structconst import (
    DimensionMismatch,
    InvariantError,
    StructureTensor,
    algebra_from_dict,
    check_associativity,
    check_fundamental_identity,
    check_identity_on_basis,
    check_sc_identities,
    decompose,
    dual_path_report,
    fuzz_implications,
    ops_from_tables,
)

SUITES = ("all", "associativity", "fundamental", "double-bracket", "sc", "dual", "catalog", "poisson")


class InputError(Exception):
    pass


def parse_range(text: str) -> Tuple[int, ...]:
    """``"3"`` or ``"2..4"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}")
    return tuple(range(lo, hi + 1))


def positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc


def _load_any(path: str):
    d = _read_json(path)
    if poisson.is_structure_dict(d):
        return poisson.structure_from_dict(d)
    return algebra_from_dict(d)


class Output:
    """Collects text lines and a JSON record; prints one of them."""

    def __init__(self, fmt: str, command: str):
        self.fmt = fmt
        self.record: Dict = {"schema": SCHEMA_VERSION, "command": command}
        self.text: List[str] = []

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.fmt == "json":
            stream.write(json.dumps(self.record, indent=2) + "\n")
        else:
            stream.write("\n".join(self.text) + "\n")


# -- verify ------------------------------------------------------------------

def _verify_catalog(out: Output) -> bool:
    results = catalog.check_catalog()
    chain = catalog.derive_chain_report()
    proof = reconstruction.proof_chain_check()
    ok = all(r.holds for r in results) and chain.ok and proof.ok
    out.record["catalog"] = [r.to_record() for r in results]
    out.record["derivations"] = [chain.to_record(), proof.to_record()]
    held = sum(r.holds for r in results)
    out.text.append(f"free-algebra catalog: {held}/{len(results)} checks expand to zero")
    out.text += [f"  {r.describe()}" for r in results if not r.holds]
    out.text += chain.lines() + proof.lines()
    return ok


def _verify_algebra(A, suites: Sequence[str], out: Output) -> bool:
    if isinstance(A, StructureTensor):
        product, tables = A, decompose(A)
    else:
        tables = A
        tables.validate_symmetry()
        product = reconstruction.reconstruct_product(tables)
    results = []
    if "associativity" in suites:
        results.append(check_associativity(product))
    if "fundamental" in suites:
        results.append(check_fundamental_identity(product))
    if "double-bracket" in suites:
        ops = ops_from_tables(tables)
        results += [check_identity_on_basis(catalog.CATALOG[n], ops) for n in reconstruction.HYPOTHESIS]
    if "sc" in suites:
        results += list(check_sc_identities(tables).values())
    ok = all(r.holds for r in results)
    name = A.name or "algebra"
    out.record["algebra"] = {"name": A.name, "dim": A.dim, "parity": list(A.parity)}
    out.record["results"] = [r.to_record() for r in results]
    out.text.append(f"{name} (dim {A.dim}, parity {''.join(map(str, A.parity))})")
    labels = product.labels()
    for r in results:
        line = r.describe()
        if r.witness is not None:
            line += "   [" + ", ".join(labels[i] for i in r.witness) + "]"
        out.text.append("  " + line)
    if "dual" in suites:
        if isinstance(A, StructureTensor):
            dual = dual_path_report(A)
        else:
            dual = dual_path_report(product)
        out.record["dual_path"] = dual
        agree = all(dual.values())
        ok = ok and agree
        out.text.append(f"  dual-path cross-check: {'agree' if agree else 'DISAGREE'} on {len(dual)} identities")
        out.text += [f"    {k}: disagree" for k, v in dual.items() if not v]
    return ok


def _run_poisson(S: poisson.PoissonStructure, seed: int, random_count: int, out: Output) -> bool:
    samples = poisson.sample_set(S, seed=seed, random_count=random_count)
    report = poisson.check_pb_properties(S, samples)
    out.record["poisson"] = report.to_record()
    out.record["poisson"]["seed"] = seed
    out.text += report.lines()
    return report.ok


def cmd_verify(args, out: Output) -> int:
    suites = [args.suite]
    if args.suite == "catalog":
        if args.file:
            raise InputError("--suite catalog takes no file")
        return 0 if _verify_catalog(out) else 1
    if not args.file:
        raise InputError("verify needs an algebra or structure file (or --suite catalog)")
    obj = _load_any(args.file)
    if isinstance(obj, poisson.PoissonStructure):
        if args.suite not in ("all", "poisson"):
            raise InputError(f"suite {args.suite!r} does not apply to a Poisson structure")
        return 0 if _run_poisson(obj, args.seed, args.random, out) else 1
    if args.suite == "poisson":
        raise InputError("suite 'poisson' needs a Poisson structure file")
    if args.suite == "all":
        suites = ["associativity", "fundamental", "double-bracket", "sc", "dual"]
    return 0 if _verify_algebra(obj, suites, out) else 1


# -- theorem -----------------------------------------------------------------

def cmd_theorem(args, out: Output) -> int:
    ok = True
    if args.file:
        A = algebra_from_dict(_read_json(args.file))
        B = decompose(A) if isinstance(A, StructureTensor) else A
        report = reconstruction.theorem2_check(B)
        out.record["theorem"] = report.to_record()
        out.text += report.lines()
        ok = not report.implication_violated
    if args.proof or not args.file:
        proof = reconstruction.proof_chain_check()
        out.record["proof"] = proof.to_record()
        out.text += proof.lines()
        ok = ok and proof.ok
    return 0 if ok else 1


# -- fuzz --------------------------------------------------------------------

def cmd_fuzz(args, out: Output) -> int:
    report = fuzz_implications(args.dim, args.trials, args.seed, graded=not args.even)
    out.record["fuzz"] = report.to_record()
    out.text += report.lines()
    bad = report.theorem1_violations + report.theorem2_violations
    if args.theorem:
        t2 = reconstruction.fuzz_theorem2(args.dim, args.trials, args.seed)
        out.record["theorem_fuzz"] = t2.to_record()
        out.text += t2.lines()
        bad += not t2.ok
    return 1 if bad else 0


# -- gen-identity --------------------------------------------------------------

def cmd_gen_identity(args, out: Output) -> int:
    fam = args.family
    if fam in ("wever", "jacobi3", "chain"):
        report = {"wever": generator.wever_check, "jacobi3": generator.jacobi3_check}.get(fam)
        rep = report() if report else generator.chain_check()
        if fam == "wever":
            idents = [generator.wever4(), generator.genji4_word_form()]
        elif fam == "jacobi3":
            idents = [generator.gen_jacobi3()]
        else:
            idents = []
        out.record["identities"] = [identity_to_json(i) for i in idents]
        out.record["report"] = rep.to_record()
        for i in idents:
            out.text.append(f"{i.name}: {generator.render(i.expr, generator.names(i.arity))}")
        out.text += rep.lines()
        return 0 if rep.ok else 1
    if args.n is None:
        raise InputError(f"family {fam!r} needs --n")
    try:
        info = generator.family_report(fam, args.n)
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    ident, result = info["identity"], info["result"]
    rec = identity_to_json(ident)
    rec["text"] = info["text"]
    out.record["identity"] = rec
    out.record["result"] = result.to_record()
    out.record["raw_terms"] = info["raw_terms"]
    out.text.append(f"{ident.name} (n={args.n}): {info['text']}")
    out.text.append(f"  {result.describe()}; {info['raw_terms']} words before cancellation")
    return 0 if result.holds else 1


# -- poisson -------------------------------------------------------------------

def cmd_poisson(args, out: Output) -> int:
    if args.file:
        S = _load_any(args.file)
        if not isinstance(S, poisson.PoissonStructure):
            raise InputError(f"{args.file} is not a Poisson structure file")
    elif args.counterexample:
        S = poisson.counterexample()
    else:
        p, q = args.canonical or (1, 0)
        S = poisson.canonical(p, q)
    out.record["structure"] = S.to_dict()
    try:
        if args.bracket:
            F, G = (S.parse(t) for t in args.bracket)
            value = poisson.poisson_bracket(S, F, G)
            out.record["bracket"] = {"F": str(F), "G": str(G), "value": str(value)}
            out.text.append(f"{{{F}, {G}}} = {value}")
            return 0
        if args.jacobiator:
            F, G, H = (S.parse(t) for t in args.jacobiator)
            value = poisson.jacobiator(S, F, G, H)
            out.record["jacobiator"] = {"F": str(F), "G": str(G), "H": str(H), "value": str(value)}
            out.text.append(f"Jacobiator({F}, {G}, {H}) = {value}")
            return 0 if value.is_zero() else 1
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return 0 if _run_poisson(S, args.seed, args.random, out) else 1


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS, help="report format")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")

    ap = argparse.ArgumentParser(
        prog="superjacobi",
        description="Check (super)algebra identities exactly over the rationals.",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run identity suites on an algebra or Poisson structure file")
    v.add_argument("file", nargs="?")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--random", type=int, default=50, help="random sample triples for the Poisson suite")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("theorem", parents=[common], help="bracket tables -> product -> associativity")
    t.add_argument("file", nargs="?", help="bracket tables or structure tensor; omit to replay the proof only")
    t.add_argument("--proof", action="store_true", help="also replay the symbolic proof")
    t.set_defaults(func=cmd_theorem)

    f = sub.add_parser("fuzz", parents=[common], help="tabulate identity implications on random tensors")
    f.add_argument("--dim", type=parse_range, default=(2, 3), help="N or LO..HI")
    f.add_argument("--trials", type=positive_int, default=200)
    f.add_argument("--even", action="store_true", help="all-even parities only")
    f.add_argument("--theorem", action="store_true", help="also fuzz the bracket-to-product theorem")
    f.set_defaults(func=cmd_fuzz)

    g = sub.add_parser("gen-identity", parents=[common], help="generate and verify n-ary identities")
    g.add_argument("--family", choices=("fundamental", "mixed", "helper", "wever", "jacobi3", "chain"), required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--emit", choices=("text", "json"), help="same as --format")
    g.set_defaults(func=cmd_gen_identity)

    p = sub.add_parser("poisson", parents=[common], help="Poisson superbracket property checks")
    p.add_argument("file", nargs="?", help="structure file")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--canonical", nargs=2, type=int, metavar=("P", "Q"))
    grp.add_argument("--counterexample", action="store_true")
    p.add_argument("--random", type=int, default=50, help="random sample triples")
    p.add_argument("--bracket", nargs=2, metavar=("F", "G"))
    p.add_argument("--jacobiator", nargs=3, metavar=("F", "G", "H"))
    p.set_defaults(func=cmd_poisson)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "emit", None) or getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    out = Output(fmt, args.command)
    try:
        code = args.func(args, out)
    except (InputError, InvariantError, DimensionMismatch, poisson.StructureError, poisson.ContextMismatch) as exc:
        print(f"superjacobi: error: {exc}", file=sys.stderr)
        return 2
    out.record["exit"] = code
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
