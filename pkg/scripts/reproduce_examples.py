#!/usr/bin/env python3
"""Print the fixpoints, models and reductions of the bundled example KBs."""

import argparse
from pathlib import Path

from hmknf.kb import format_kb
from hmknf.operators import afp_from, e_fixpoint, w_fixpoint
from hmknf.parser import parse_kb
from hmknf.simplify import reduce
from hmknf.solver import enumerate_models

KB_DIR = Path(__file__).resolve().parent.parent / "kbs"


def fmt(p):
    return "({%s},{%s})" % (",".join(sorted(p.t)), ",".join(sorted(p.f)))


def show(path: Path) -> None:
    kb = parse_kb(path.read_text())
    w = w_fixpoint(kb).result
    e = e_fixpoint(kb).result
    afp = afp_from(kb)
    models = enumerate_models(kb).models
    print(f"== {path.name}")
    print(f"  W   {fmt(w)}")
    print(f"  E   {fmt(e)}")
    print(f"  AFP {fmt(afp.partition(kb))} converged={afp.converged}")
    print(f"  models: {', '.join(fmt(m.partition) for m in models) or 'none'}")
    if e.consistent and e != w:
        red = reduce(kb, e).kb
        n = len(enumerate_models(red).models)
        print(f"  reduced by E ({n} models):")
        print("    " + format_kb(red).replace("\n", "\n    ").rstrip())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="*", type=Path)
    args = ap.parse_args()
    for path in args.files or sorted(KB_DIR.glob("*.kb")):
        show(path)


if __name__ == "__main__":
    main()
