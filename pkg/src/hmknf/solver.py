"""DPLL search for MKNF models with W or E as the propagator."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .formulas import Atom
from .kb import ContractError, KnowledgeBase, Partition, Theory, objective_knowledge
from .objective import closure
from .operators import e_fixpoint, gamma, w_fixpoint
from .unfounded import greatest_unfounded

PROPAGATORS = {"w": w_fixpoint, "e": e_fixpoint}


@dataclass(frozen=True)
class ModelWitness:
    partition: Partition
    objective: Theory


@dataclass
class SolveResult:
    sat: bool = False
    models: list[ModelWitness] = field(default_factory=list)
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0


def constraints_hold(kb: KnowledgeBase, t: frozenset[Atom]) -> bool:
    """No headless rule has its body satisfied by the total assignment T."""
    return not any(
        r.head is None and r.body_pos <= t and not (r.body_neg & t) for r in kb.rules)


def verify_total(kb: KnowledgeBase, part: Partition) -> bool:
    """Guess-and-verify check of a total partition.

    Accepts iff OB_{O,T} is consistent, T is a fixpoint of Gamma, and no
    constraint is violated.
    """
    if not part.consistent or not part.is_total(kb.katoms):
        raise ContractError("verify_total needs a total, consistent partition")
    kb.check_subset(part.t, part.f)
    if not closure(kb, part.t).consistent:
        return False
    return gamma(kb, part.t) == part.t and constraints_hold(kb, part.t)


def f_is_greatest_unfounded(kb: KnowledgeBase, part: Partition) -> bool:
    """F equals the greatest unfounded set at (T, F)."""
    return greatest_unfounded(kb, part).greatest == part.f


def _search(kb: KnowledgeBase, propagator: str, limit: Optional[int]) -> SolveResult:
    try:
        wfm = PROPAGATORS[propagator.lower()]
    except KeyError:
        raise ContractError(f"unknown propagator {propagator!r}") from None
    res = SolveResult()

    def leaf_ok(p: Partition) -> bool:
        # W does not look at constraints or at an inconsistent ontology
        return closure(kb, p.t).consistent and constraints_hold(kb, p.t)

    def go(p: Partition) -> bool:
        """Returns True when the search should stop."""
        res.propagations += 1
        p = wfm(kb, p).result | p
        if not p.consistent:
            res.conflicts += 1
            return False
        undecided = [a for a in kb.ordered_katoms if a not in p.t and a not in p.f]
        if not undecided:
            if not leaf_ok(p):
                res.conflicts += 1
                return False
            res.models.append(ModelWitness(p, objective_knowledge(kb, p.t)))
            return limit is not None and len(res.models) >= limit
        a = undecided[0]
        res.decisions += 1
        if go(Partition(p.t | {a}, p.f)):
            return True
        return go(Partition(p.t, p.f | {a}))

    go(Partition())
    res.sat = bool(res.models)
    return res


def solve(kb: KnowledgeBase, propagator: str = "e") -> SolveResult:
    """First MKNF model in branch order (true branch first, lowest KB id)."""
    return _search(kb, propagator, 1)


def enumerate_models(kb: KnowledgeBase, propagator: str = "e",
                     limit: Optional[int] = None) -> SolveResult:
    return _search(kb, propagator, limit)


def models_by_guessing(kb: KnowledgeBase) -> list[Partition]:
    """All total partitions accepted by :func:`verify_total`, by enumeration."""
    out = []
    atoms = kb.ordered_katoms
    for bits in product((True, False), repeat=len(atoms)):
        t = frozenset(a for a, b in zip(atoms, bits) if b)
        part = Partition(t, kb.katoms - t)
        if verify_total(kb, part):
            out.append(part)
    return out
