"""Cached reasoning about objective theories OB_{O,S} for S a set of K-atoms.

Every operator asks two questions of ``O ∪ S``: is it consistent, and which
K-atoms does it entail. Both are answered together and cached per KB, since
fixpoint loops ask about the same ``S`` many times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Optional

from .formulas import Atom
from .kb import KnowledgeBase, objective_knowledge
from .oracle import Oracle, default_oracle


@dataclass(frozen=True)
class Closure:
    consistent: bool
    entailed: frozenset[Atom]  # K-atoms a with OB_{O,S} |= a


def closure(kb: KnowledgeBase, s: AbstractSet[Atom], oracle: Optional[Oracle] = None) -> Closure:
    key = ("closure", frozenset(s))
    hit = kb._cache.get(key)
    if hit is not None:
        return hit
    oracle = oracle or default_oracle
    theory = objective_knowledge(kb, s)
    if not oracle.consistent(theory):
        result = Closure(False, kb.katoms)
    else:
        ent = frozenset(a for a in kb.katoms if a in s or oracle.entails(theory, a))
        result = Closure(True, ent)
    kb._cache[key] = result
    return result


def entailed(kb: KnowledgeBase, s: AbstractSet[Atom]) -> frozenset[Atom]:
    """{K a in KA(K) | OB_{O,S} |= a}"""
    return closure(kb, s).entailed


def admissible_heads(kb: KnowledgeBase, t: AbstractSet[Atom], f: AbstractSet[Atom]) -> frozenset[Atom]:
    """K-atoms a with OB_{O,T} ∪ {a} consistent and OB_{O,T} ∪ {a, ¬b} consistent for all b in F.

    Uses OB ∪ {a, ¬b} consistent  <=>  OB ∪ {a} consistent and OB ∪ {a} does not entail b.
    """
    key = ("admissible", frozenset(t), frozenset(f))
    hit = kb._cache.get(key)
    if hit is not None:
        return hit
    out = []
    for a in kb.ordered_katoms:
        c = closure(kb, t | {a})
        if c.consistent and not (c.entailed & f):
            out.append(a)
    result = frozenset(out)
    kb._cache[key] = result
    return result
