"""Unfounded sets: the atmost fixpoint and a brute-force definitional checker."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, Iterator

from .formulas import Atom, Not
from .kb import KnowledgeBase, Partition, objective_knowledge
from .objective import admissible_heads, entailed
from .oracle import default_oracle

BRUTEFORCE_RULE_LIMIT = 16


@dataclass(frozen=True)
class UnfoundedResult:
    greatest: frozenset[Atom]
    atmost: frozenset[Atom]
    iterations: int


def v_step(kb: KnowledgeBase, part: Partition, x: AbstractSet[Atom]) -> frozenset[Atom]:
    """One application of the operator whose least fixpoint is atmost(T, F).

    A rule head ``a`` is admitted only if OB_{O,T} ∪ {a} is consistent, even
    when F is empty; otherwise Example-1 style heads that contradict the
    ontology would never be unfounded.
    """
    kb.check_subset(part.t, part.f, x)
    t, f = part.t, part.f
    out = set(entailed(kb, x))
    allowed = admissible_heads(kb, t, f)
    for r in kb.rules:
        a = r.head
        if a is None or a in out or a not in allowed:
            continue
        if r.body_pos <= x and not (r.body_pos & f) and not (r.body_neg & t):
            out.add(a)
    return frozenset(out)


def greatest_unfounded(kb: KnowledgeBase, part: Partition) -> UnfoundedResult:
    x: frozenset[Atom] = frozenset()
    n = 0
    while True:
        n += 1
        nxt = v_step(kb, part, x)
        if nxt == x:
            break
        x = nxt
    return UnfoundedResult(kb.katoms - x, x, n)


class _DefinitionCheck:
    """Precomputes, per rule subset R, what the unfoundedness condition needs.

    For each atom a, the "critical" subsets are those R that derive a
    (head(R) ∪ OB_{O,T} |= a), pass the consistency requirements, and contain
    no rule already blocked by (T, F). A set X is unfounded iff every critical
    R of every a in X has a positive body atom inside X.
    """

    def __init__(self, kb: KnowledgeBase, part: Partition):
        if len(kb.rules) > BRUTEFORCE_RULE_LIMIT:
            raise ValueError(
                f"brute-force check refuses {len(kb.rules)} rules (limit {BRUTEFORCE_RULE_LIMIT})")
        kb.check_subset(part.t, part.f)
        self.kb = kb
        t, f = part.t, part.f
        rules = kb.rules
        blocked = [bool(r.body_pos & f) or bool(r.body_neg & t) for r in rules]
        oracle = default_oracle
        base = objective_knowledge(kb, t)
        self.critical: dict[Atom, list[frozenset[Atom]]] = {a: [] for a in kb.katoms}
        for subset in _subsets(range(len(rules))):
            if any(blocked[i] for i in subset):
                continue
            heads = {rules[i].head for i in subset if rules[i].head is not None}
            theory = base | heads
            if f:
                ok = all(oracle.consistent(theory, [Not(b)]) for b in f)
            else:
                ok = oracle.consistent(theory)
            if not ok:
                continue
            body = frozenset().union(*(rules[i].body_pos for i in subset))
            for a in kb.katoms:
                if oracle.entails(theory, a):
                    self.critical[a].append(body)

    def is_unfounded(self, x: AbstractSet[Atom]) -> bool:
        return all(body & x for a in x for body in self.critical[a])


def _subsets(items) -> Iterator[tuple]:
    items = list(items)
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def is_unfounded_bruteforce(kb: KnowledgeBase, part: Partition, x: AbstractSet[Atom]) -> bool:
    """Decide unfoundedness of ``x`` straight from the definition (all 2^|P| rule subsets)."""
    kb.check_subset(x)
    return _DefinitionCheck(kb, part).is_unfounded(x)


def greatest_unfounded_bruteforce(kb: KnowledgeBase, part: Partition) -> frozenset[Atom]:
    """Union of every unfounded subset of KA(K), found by enumeration."""
    check = _DefinitionCheck(kb, part)
    union: set[Atom] = set()
    for xs in _subsets(kb.ordered_katoms):
        x = frozenset(xs)
        if not x <= union and check.is_unfounded(x):
            union |= x
    return frozenset(union)
