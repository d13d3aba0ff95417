"""Command-line front end. Every command prints one JSON document (``gen`` prints KB text)."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bench import compare
from .formulas import to_text
from .generate import GenParams, generate
from .kb import ContractError, KnowledgeBase, Partition, format_kb
from .operators import afp_from, e_fixpoint, w_fixpoint
from .parser import KBSyntaxError, parse_kb
from .simplify import simplify_pipeline
from .solver import enumerate_models, f_is_greatest_unfounded, solve, verify_total


def _load(path: str) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read())


def _atoms(arg: Optional[str]) -> list[str]:
    if not arg:
        return []
    return [a.strip() for a in arg.split(",") if a.strip()]


def _base(kb: KnowledgeBase, args) -> Partition:
    part = Partition.of(_atoms(args.true), _atoms(args.false))
    kb.check_subset(part.t, part.f)
    return part


def _assignment(kb: KnowledgeBase, part: Partition) -> dict:
    return {
        "true": kb.sort(part.t),
        "false": kb.sort(part.f),
        "undefined": kb.sort(kb.katoms - part.t - part.f),
    }


def cmd_check(args) -> dict:
    kb = _load(args.file)
    return {"status": "ok", "ontology": len(kb.ontology.formulas), "rules": len(kb.rules),
            "katoms": list(kb.ordered_katoms)}


def cmd_wfp(args) -> dict:
    kb = _load(args.file)
    base = _base(kb, args)
    if args.op == "afp":
        res = afp_from(kb, base)
        part = res.partition(kb)
        out = {"status": "consistent" if part.consistent else "inconsistent"}
        out.update(_assignment(kb, part))
        out.update(converged=res.converged, period=res.period)
        return out
    fix = w_fixpoint if args.op == "w" else e_fixpoint
    res = fix(kb, base)
    out = {"status": "consistent" if res.consistent else "inconsistent"}
    out.update(_assignment(kb, res.result))
    out["iterations"] = res.iterations
    return out


def _stats(res) -> dict:
    return {"decisions": res.decisions, "propagations": res.propagations,
            "conflicts": res.conflicts}


def _model(kb, w) -> dict:
    return {"true": kb.sort(w.partition.t), "false": kb.sort(w.partition.f)}


def cmd_solve(args) -> dict:
    kb = _load(args.file)
    res = solve(kb, args.op)
    out: dict = {"status": "sat" if res.sat else "unsat"}
    if res.sat:
        w = res.models[0]
        out["model"] = _model(kb, w)
        out["objective"] = sorted(to_text(f) for f in w.objective)
    out.update(_stats(res))
    return out


def cmd_enumerate(args) -> dict:
    kb = _load(args.file)
    res = enumerate_models(kb, args.op, args.limit)
    out = {"status": "sat" if res.sat else "unsat", "count": len(res.models),
           "models": [_model(kb, w) for w in res.models]}
    out.update(_stats(res))
    return out


def cmd_verify(args) -> dict:
    kb = _load(args.file)
    part = _base(kb, args)
    ok = verify_total(kb, part)
    return {"model": ok, "unfounded_free": f_is_greatest_unfounded(kb, part)}


def cmd_simplify(args) -> dict:
    kb = _load(args.file)
    s = simplify_pipeline(kb)
    out: dict = {"status": "unsat" if s.unsatisfiable else "reduced",
                 "partition": _assignment(kb, s.partition)}
    if not s.unsatisfiable:
        text = format_kb(s.reduced.kb)
        out["removed"] = kb.sort(s.reduced.removed_atoms)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out["kb"] = text
    return out


def _params(args) -> GenParams:
    return GenParams(args.atoms, args.rules, args.max_body, args.neg_prob,
                     args.clauses, args.width, args.seed)


def cmd_gen(args) -> str:
    return generate(_params(args))


def cmd_compare(args) -> dict:
    extra = [_load(p) for p in args.include]
    rep = compare(args.count, _params(args), extra, partitions=args.partitions)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(rep.to_csv(timing=args.timing))
    out = rep.summary()
    if rep.violations:
        out["violations"] = rep.violations
    return out


def _gen_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--atoms", type=int, required=required, default=5)
    p.add_argument("--rules", type=int, required=required, default=6)
    p.add_argument("--max-body", type=int, required=required, default=2)
    p.add_argument("--neg-prob", type=float, required=required, default=0.5)
    p.add_argument("--clauses", type=int, required=required, default=2)
    p.add_argument("--width", type=int, required=required, default=2)
    p.add_argument("--seed", type=int, required=True)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hmknf", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="parse a KB and list its K-atoms")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("wfp", help="well-founded partition by W, E or the alternating fixpoint")
    p.add_argument("file")
    p.add_argument("--op", choices=("w", "e", "afp"), required=True)
    p.add_argument("--true")
    p.add_argument("--false")
    p.set_defaults(func=cmd_wfp)

    p = sub.add_parser("solve", help="find one MKNF model")
    p.add_argument("file")
    p.add_argument("--op", choices=("w", "e"), required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="list MKNF models")
    p.add_argument("file")
    p.add_argument("--limit", type=int)
    p.add_argument("--op", choices=("w", "e"), default="e")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a total partition")
    p.add_argument("file")
    p.add_argument("--true", required=True)
    p.add_argument("--false", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simplify", help="reduce the rule base by the well-founded partition")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("gen", help="generate a random KB")
    _gen_flags(p, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compare", help="benchmark AFP, W and E on a generated corpus")
    p.add_argument("--count", type=int, required=True)
    _gen_flags(p, required=False)
    p.add_argument("--partitions", type=int, default=3,
                   help="random partial partitions checked per instance")
    p.add_argument("--include", action="append", default=[], metavar="FILE",
                   help="KB file to prepend to the corpus (repeatable)")
    p.add_argument("--csv", help="write the per-instance table here")
    p.add_argument("--timing", action="store_true", help="add wall time to the CSV")
    p.set_defaults(func=cmd_compare)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (KBSyntaxError, ContractError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, str):
        sys.stdout.write(out)
        return 0
    print(json.dumps(out))
    if args.command == "compare" and out.get("violations"):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
