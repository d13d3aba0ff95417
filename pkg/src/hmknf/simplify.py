"""Rule-base reduction by a partial partition, and the W-based simplifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .formulas import Atom
from .kb import ContractError, KnowledgeBase, Ontology, Partition, Rule
from .operators import w_fixpoint


@dataclass(frozen=True)
class ReducedKb:
    kb: KnowledgeBase
    added_facts: frozenset[Atom]
    removed_atoms: frozenset[Atom]


def reduce(kb: KnowledgeBase, part: Partition) -> ReducedKb:
    """K^(T,F): move T into the ontology and strip decided atoms from the rules.

    A rule whose head is false loses the head and stays as a constraint.
    """
    if not part.consistent:
        raise ContractError("cannot reduce by an inconsistent partition")
    kb.check_subset(part.t, part.f)
    t, f = part.t, part.f
    rules = []
    for r in kb.rules:
        if r.body_pos & f or r.body_neg & t or (r.head is not None and r.head in t):
            continue
        head = None if r.head in f else r.head
        pos = tuple(a for a in r.pos_order if a not in t)
        neg = tuple(a for a in r.neg_order if a not in f)
        rules.append(Rule(head, frozenset(pos), frozenset(neg), pos, neg))
    facts = kb.sort(t)
    ontology = Ontology(kb.ontology.formulas + tuple(a for a in facts if a not in kb.ontology.formulas))
    return ReducedKb(KnowledgeBase(ontology, tuple(rules)), frozenset(t), frozenset(t | f))


@dataclass(frozen=True)
class Simplified:
    partition: Partition
    reduced: Optional[ReducedKb]

    @property
    def unsatisfiable(self) -> bool:
        return self.reduced is None


def simplify_pipeline(kb: KnowledgeBase) -> Simplified:
    """Reduce by the well-founded partition W(∅, ∅); no reduction when it is inconsistent."""
    wfp = w_fixpoint(kb).result
    if not wfp.consistent:
        return Simplified(wfp, None)
    return Simplified(wfp, reduce(kb, wfp))
