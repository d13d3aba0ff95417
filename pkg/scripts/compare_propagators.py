#!/usr/bin/env python3
"""Benchmark W against E on a generated corpus and write the per-instance CSV."""

import argparse
import json
from dataclasses import dataclass, fields
from pathlib import Path

from hmknf.bench import compare
from hmknf.generate import GenParams
from hmknf.parser import parse_kb


@dataclass
class Experiment:
    count: int = 200
    partitions: int = 3
    csv: Path = Path("compare.csv")
    include: tuple[Path, ...] = ()
    timing: bool = False


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=Experiment.count)
    ap.add_argument("--partitions", type=int, default=Experiment.partitions)
    ap.add_argument("--csv", type=Path, default=Experiment.csv)
    ap.add_argument("--include", type=Path, action="append", default=[])
    ap.add_argument("--timing", action="store_true")
    for f in fields(GenParams):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    args = ap.parse_args()
    exp = Experiment(args.count, args.partitions, args.csv, tuple(args.include), args.timing)
    params = GenParams(**{f.name: getattr(args, f.name) for f in fields(GenParams)})

    extra = [parse_kb(p.read_text()) for p in exp.include]
    rep = compare(exp.count, params, extra, partitions=exp.partitions)
    exp.csv.write_text(rep.to_csv(timing=exp.timing))
    print(json.dumps(rep.summary(), indent=2))
    for v in rep.violations:
        print("violation:", v)


if __name__ == "__main__":
    main()
