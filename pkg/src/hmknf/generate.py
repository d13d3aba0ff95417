"""Seeded random knowledge bases and partial partitions."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formulas import Atom, Formula, Not, Or
from .kb import KnowledgeBase, Ontology, Partition, Rule, format_kb


@dataclass(frozen=True)
class GenParams:
    n_atoms: int = 5
    n_rules: int = 6
    max_body: int = 2
    neg_prob: float = 0.5
    n_clauses: int = 2
    clause_width: int = 2
    seed: int = 0

    def validate(self) -> None:
        for name in ("n_atoms", "n_rules", "max_body", "n_clauses", "clause_width"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if not 0.0 <= self.neg_prob <= 1.0:
            raise ValueError("neg_prob must lie in [0, 1]")
        if self.n_rules and (self.n_atoms == 0 or self.max_body > self.n_atoms):
            raise ValueError("rules need at least max_body (and one) distinct atoms")
        if self.n_clauses and self.clause_width > self.n_atoms:
            raise ValueError("clause_width exceeds n_atoms")


def _clause(lits: list[Formula]) -> Formula:
    f = lits[0]
    for g in lits[1:]:
        f = Or(f, g)
    return f


def generate_kb(params: GenParams) -> KnowledgeBase:
    """Rules pick a uniform head and 0..max_body distinct body atoms, each
    negated with probability ``neg_prob``; ontology clauses draw
    ``clause_width`` distinct atoms with random signs."""
    params.validate()
    rng = random.Random(params.seed)
    atoms = [Atom(f"p{i}") for i in range(params.n_atoms)]
    rules = []
    for _ in range(params.n_rules):
        head = rng.choice(atoms)
        body = rng.sample(atoms, rng.randint(0, params.max_body))
        pos, neg = [], []
        for a in body:
            (neg if rng.random() < params.neg_prob else pos).append(a)
        rules.append(Rule(head, frozenset(pos), frozenset(neg), tuple(pos), tuple(neg)))
    clauses = []
    for _ in range(params.n_clauses):
        if params.clause_width == 0:
            continue
        picked = rng.sample(atoms, params.clause_width)
        clauses.append(_clause([a if rng.random() < 0.5 else Not(a) for a in picked]))
    return KnowledgeBase(Ontology(tuple(clauses)), tuple(rules))


def generate(params: GenParams) -> str:
    return format_kb(generate_kb(params))


def random_partition(kb: KnowledgeBase, rng: random.Random) -> Partition:
    """Each K-atom independently true, false or undefined."""
    t, f = set(), set()
    for a in kb.ordered_katoms:
        r = rng.randrange(3)
        if r == 0:
            t.add(a)
        elif r == 1:
            f.add(a)
    return Partition(frozenset(t), frozenset(f))


def random_corpus(count: int, seed: int, max_atoms: int = 6, max_rules: int = 6,
                  max_clauses: int = 3, max_body: int = 3) -> list[KnowledgeBase]:
    """Small KBs with per-instance sizes drawn from ``seed``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_atoms)
        p = GenParams(
            n_atoms=n,
            n_rules=rng.randint(0, max_rules),
            max_body=min(n, rng.randint(0, max_body)),
            neg_prob=rng.choice((0.25, 0.5, 0.75)),
            n_clauses=rng.randint(0, max_clauses),
            clause_width=min(n, rng.randint(1, 3)),
            seed=rng.getrandbits(64),
        )
        out.append(generate_kb(p))
    return out
