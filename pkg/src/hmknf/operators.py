"""Propagation operators W and E, unit propagation, and the alternating fixpoint."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Callable

from .formulas import Atom
from .kb import KnowledgeBase, Partition
from .objective import closure, entailed
from .unfounded import greatest_unfounded


@dataclass(frozen=True)
class FixpointResult:
    result: Partition
    iterations: int

    @property
    def consistent(self) -> bool:
        return self.result.consistent


@dataclass(frozen=True)
class AfpResult:
    p_omega: frozenset[Atom]
    n_omega: frozenset[Atom]
    converged: bool
    period: int
    sequence: tuple[tuple[frozenset[Atom], frozenset[Atom]], ...]

    def partition(self, kb: KnowledgeBase) -> Partition:
        return Partition(self.p_omega, kb.katoms - self.n_omega)


def t_step(kb: KnowledgeBase, base: Partition, it: Partition) -> frozenset[Atom]:
    kb.check_subset(base.t, base.f, it.t, it.f)
    tx = base.t | it.t
    fy = base.f | it.f
    out = set(entailed(kb, tx))
    for r in kb.rules:
        if r.head is not None and r.body_pos <= tx and r.body_neg <= fy:
            out.add(r.head)
    return frozenset(out)


def unit_propagate(kb: KnowledgeBase, base: Partition, it: Partition) -> Partition:
    """Unit propagation over rules read as clauses ``head ∨ body⁻ ∨ ¬body⁺``.

    Returns ``(KA, KA)`` when some clause has every literal false. A clause
    whose only non-false literals are ``a`` and ``¬a`` is satisfied by any
    value of ``a`` and is not treated as a unit.
    """
    kb.check_subset(base.t, base.f, it.t, it.f)
    x = set(it.t) | entailed(kb, base.t | it.t)
    y = set(it.f)
    t, f = base.t, base.f
    changed = True
    while changed:
        changed = False
        for r in kb.rules:
            unit = _unit(r, t, f, x, y)
            if unit is None:
                continue
            a, positive = unit
            if a in t or a in x or a in f or a in y:
                continue
            (x if positive else y).add(a)
            changed = True
    for r in kb.rules:
        if _falsified(r, t, f, x, y):
            return Partition.full(kb.katoms)
    return Partition(frozenset(x), frozenset(y))


def _unit(r, t, f, x, y):
    free = []
    for a in r.body_pos:
        if a not in t and a not in x:
            free.append((a, False))
    for a in r.body_neg:
        if a not in f and a not in y:
            free.append((a, True))
    if r.head is not None and r.head not in f and r.head not in y:
        free.append((r.head, True))
    # the same atom can sit in head and body⁻; as literals they coincide
    lits = set(free)
    if len(lits) == 1:
        return next(iter(lits))
    return None


def _falsified(r, t, f, x, y) -> bool:
    if r.head is not None and r.head not in f and r.head not in y:
        return False
    if any(a not in f and a not in y for a in r.body_neg):
        return False
    return all(a in t or a in x for a in r.body_pos)


def w_step(kb: KnowledgeBase, base: Partition, it: Partition) -> Partition:
    u = greatest_unfounded(kb, base | it)
    return Partition(t_step(kb, base, it), u.greatest)


def e_step(kb: KnowledgeBase, base: Partition, it: Partition) -> Partition:
    u = greatest_unfounded(kb, base | it)
    return unit_propagate(kb, base, it) | Partition(frozenset(), u.greatest)


def _lfp(kb: KnowledgeBase, base: Partition,
         step: Callable[[KnowledgeBase, Partition, Partition], Partition]) -> FixpointResult:
    kb.check_subset(base.t, base.f)
    cur = Partition()
    limit = 2 * len(kb.katoms) + 2
    for n in range(1, limit + 2):
        nxt = step(kb, base, cur)
        if nxt == cur:
            return FixpointResult(cur, n)
        cur = nxt
    raise RuntimeError(f"fixpoint not reached within {limit} steps")


def w_fixpoint(kb: KnowledgeBase, base: Partition = Partition()) -> FixpointResult:
    return _lfp(kb, base, w_step)


def e_fixpoint(kb: KnowledgeBase, base: Partition = Partition()) -> FixpointResult:
    return _lfp(kb, base, e_step)


def _tstar_lfp(kb: KnowledgeBase, s: AbstractSet[Atom], check_consistency: bool) -> frozenset[Atom]:
    kb.check_subset(s)
    key = ("gamma'" if check_consistency else "gamma", frozenset(s))
    hit = kb._cache.get(key)
    if hit is not None:
        return hit
    heads_ok = None
    if check_consistency:
        heads_ok = {a for a in kb.katoms if closure(kb, s | {a}).consistent}
    x: frozenset[Atom] = frozenset()
    while True:
        nxt = set(entailed(kb, x))
        for r in kb.rules:
            if r.head is None or r.body_neg & s or not r.body_pos <= x:
                continue
            if heads_ok is None or r.head in heads_ok:
                nxt.add(r.head)
        if nxt == x:
            break
        x = frozenset(nxt)
    kb._cache[key] = x
    return x


def gamma(kb: KnowledgeBase, s: AbstractSet[Atom]) -> frozenset[Atom]:
    """Least fixpoint of T*_{K,S}."""
    return _tstar_lfp(kb, s, False)


def gamma_prime(kb: KnowledgeBase, s: AbstractSet[Atom]) -> frozenset[Atom]:
    """Least fixpoint of T*'_{K,S}: rule heads must be consistent with OB_{O,S}."""
    return _tstar_lfp(kb, s, True)


def afp_from(kb: KnowledgeBase, base: Partition = Partition()) -> AfpResult:
    """Alternating-fixpoint sequences started at (T, KA \\ F), with exact cycle detection."""
    kb.check_subset(base.t, base.f)
    state = (frozenset(base.t), kb.katoms - base.f)
    seen: dict = {}
    seq = []
    while state not in seen:
        seen[state] = len(seq)
        seq.append(state)
        p, n = state
        state = (gamma(kb, n), gamma_prime(kb, p))
    period = len(seq) - seen[state]
    p_omega = frozenset().union(*(p for p, _ in seq))
    n_omega = kb.katoms.intersection(*(n for _, n in seq))
    converged = period == 1
    return AfpResult(p_omega, frozenset(n_omega), converged, 0 if converged else period, tuple(seq))
