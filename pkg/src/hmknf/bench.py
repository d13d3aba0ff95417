"""Compare the propagation strength of AFP, W and E on generated corpora."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .generate import GenParams, generate_kb, random_partition
from .kb import KnowledgeBase, Partition
from .operators import afp_from, e_fixpoint, w_fixpoint
from .solver import enumerate_models

CSV_COLUMNS = ("instance", "propagator", "katoms", "root_true", "root_false",
               "root_undefined", "decisions", "conflicts")


@dataclass
class BenchRow:
    instance: int
    propagator: str
    katoms: int
    root: Partition
    decisions: Optional[int] = None
    conflicts: Optional[int] = None
    seconds: float = 0.0

    def cells(self, timing: bool) -> list[str]:
        undecided = self.katoms - len(self.root.t | self.root.f)
        out = [str(self.instance), self.propagator, str(self.katoms),
               str(len(self.root.t)), str(len(self.root.f)), str(undecided),
               "" if self.decisions is None else str(self.decisions),
               "" if self.conflicts is None else str(self.conflicts)]
        if timing:
            out.append(f"{self.seconds:.6f}")
        return out


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    instances: int = 0
    violations: list[str] = field(default_factory=list)
    strict: list[int] = field(default_factory=list)  # instances with W ⊏ E at the root

    def to_csv(self, timing: bool = False) -> str:
        header = list(CSV_COLUMNS) + (["seconds"] if timing else [])
        lines = [",".join(header)]
        lines += [",".join(r.cells(timing)) for r in self.rows]
        return "\n".join(lines) + "\n"

    def summary(self) -> dict:
        dec = {"w": 0, "e": 0}
        for r in self.rows:
            if r.propagator in dec:
                dec[r.propagator] += r.decisions or 0
        return {
            "instances": self.instances,
            "chain_violations": len(self.violations),
            "strict_gaps": len(self.strict),
            "strict_instances": self.strict,
            "decisions": dec,
        }


def _chain_violations(kb: KnowledgeBase, base: Partition) -> list[str]:
    w = w_fixpoint(kb, base).result
    e = e_fixpoint(kb, base).result
    out = []
    if not w <= e:
        out.append("W not below E")
    afp = afp_from(kb, base)
    for i, (p, n) in enumerate(afp.sequence[1:], start=1):
        if not Partition(p, kb.katoms - n) <= w:
            out.append(f"AFP iterate {i} not below W")
    return out


def compare_corpus(kbs: Sequence[KnowledgeBase], seed: int = 0,
                   partitions: int = 3) -> BenchReport:
    rng = random.Random(seed)
    rep = BenchReport(instances=len(kbs))
    for i, kb in enumerate(kbs):
        n = len(kb.katoms)
        t0 = time.perf_counter()
        afp = afp_from(kb).partition(kb)
        rep.rows.append(BenchRow(i, "afp", n, afp, seconds=time.perf_counter() - t0))
        roots = {}
        for prop, fix in (("w", w_fixpoint), ("e", e_fixpoint)):
            t0 = time.perf_counter()
            roots[prop] = fix(kb).result
            res = enumerate_models(kb, prop)
            rep.rows.append(BenchRow(i, prop, n, roots[prop], res.decisions, res.conflicts,
                                     time.perf_counter() - t0))
        if not (afp <= roots["w"] <= roots["e"]):
            rep.violations.append(f"instance {i}: root chain AFP ⊑ W ⊑ E fails")
        if roots["w"] < roots["e"]:
            rep.strict.append(i)
        bases = [Partition()] + [random_partition(kb, rng) for _ in range(partitions)]
        for base in bases:
            rep.violations += [f"instance {i}: {v}" for v in _chain_violations(kb, base)]
    return rep


def compare(count: int, params: GenParams, extra: Iterable[KnowledgeBase] = (),
            partitions: int = 3) -> BenchReport:
    """Benchmark ``extra`` followed by ``count`` instances generated from ``params``.

    Instance seeds are drawn from ``params.seed`` so the corpus is reproducible.
    """
    rng = random.Random(params.seed)
    kbs = list(extra)
    for _ in range(count):
        kbs.append(generate_kb(replace(params, seed=rng.getrandbits(64))))
    return compare_corpus(kbs, seed=params.seed, partitions=partitions)
