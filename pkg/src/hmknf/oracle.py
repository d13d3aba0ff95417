"""Complete entailment and consistency checks for ground propositional theories.

Theories are clausified (direct distribution for small formulas, Tseitin
definitions otherwise) and handed to a small DPLL search with unit
propagation. Results are memoized on the canonical formula set.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterable

from .formulas import Atom, And, Const, Formula, Implies, Not, Or, atoms_of, evaluate

DEFAULT_SIGNATURE_CAP = 64
_DISTRIBUTE_LIMIT = 64  # clause budget before falling back to Tseitin


class SignatureLimitError(RuntimeError):
    pass


@dataclass
class OracleStats:
    queries: int = 0
    cache_hits: int = 0


Clause = tuple[int, ...]


def _nnf(f: Formula, positive: bool = True) -> Formula:
    if isinstance(f, Atom):
        return f if positive else Not(f)
    if isinstance(f, Const):
        return Const(f.value == positive)
    if isinstance(f, Not):
        return _nnf(f.arg, not positive)
    if isinstance(f, Implies):
        return _nnf(Or(Not(f.left), f.right), positive)
    left, right = _nnf(f.left, positive), _nnf(f.right, positive)
    if isinstance(f, And) == positive:
        return And(left, right)
    return Or(left, right)


class _Clausifier:
    def __init__(self) -> None:
        self.var: dict[Atom, int] = {}
        self.clauses: list[Clause] = []
        self.next_aux = 0  # assigned after atoms are numbered

    def lit(self, f: Formula) -> int:
        if isinstance(f, Not):
            return -self.var[f.arg]
        return self.var[f]

    def fresh(self) -> int:
        self.next_aux += 1
        return self.next_aux

    def distribute(self, f: Formula, budget: int):
        """CNF of an NNF formula as a list of literal sets, or None if too large."""
        if isinstance(f, Const):
            return [] if f.value else [frozenset()]
        if isinstance(f, (Atom, Not)):
            return [frozenset([self.lit(f)])]
        left = self.distribute(f.left, budget)
        right = self.distribute(f.right, budget)
        if left is None or right is None:
            return None
        if isinstance(f, And):
            out = left + right
        else:
            if len(left) * len(right) > budget:
                return None
            out = [a | b for a in left for b in right]
        return out if len(out) <= budget else None

    def tseitin(self, f: Formula) -> int:
        """Literal equivalent to the NNF formula ``f`` (one-directional definitions)."""
        if isinstance(f, Const):
            v = self.fresh()
            self.clauses.append((v,) if f.value else (-v,))
            return v
        if isinstance(f, (Atom, Not)):
            return self.lit(f)
        a, b = self.tseitin(f.left), self.tseitin(f.right)
        v = self.fresh()
        if isinstance(f, And):
            self.clauses += [(-v, a), (-v, b)]
        else:
            self.clauses.append((-v, a, b))
        return v

    def add(self, f: Formula) -> None:
        g = _nnf(f)
        cnf = self.distribute(g, _DISTRIBUTE_LIMIT)
        if cnf is None:
            self.clauses.append((self.tseitin(g),))
            return
        for c in cnf:
            if any(-x in c for x in c):
                continue  # tautology
            self.clauses.append(tuple(sorted(c, key=abs)))


def _dpll(clauses: list[Clause]) -> bool:
    """Satisfiability of a clause list by backtracking with unit propagation."""
    assign: dict[int, bool] = {}
    trail: list[int] = []

    def value(l: int):
        v = assign.get(abs(l))
        if v is None:
            return None
        return v if l > 0 else not v

    def propagate() -> bool:
        changed = True
        while changed:
            changed = False
            for c in clauses:
                unassigned = None
                n_free = 0
                sat = False
                for l in c:
                    v = value(l)
                    if v is True:
                        sat = True
                        break
                    if v is None:
                        n_free += 1
                        unassigned = l
                if sat:
                    continue
                if n_free == 0:
                    return False
                if n_free == 1:
                    assign[abs(unassigned)] = unassigned > 0
                    trail.append(abs(unassigned))
                    changed = True
        return True

    def pick():
        for c in clauses:
            if any(value(l) is True for l in c):
                continue
            for l in c:
                if value(l) is None:
                    return l
        return None

    def search() -> bool:
        mark = len(trail)
        if not propagate():
            undo(mark)
            return False
        l = pick()
        if l is None:
            return True
        for choice in (l, -l):
            assign[abs(choice)] = choice > 0
            trail.append(abs(choice))
            if search():
                return True
            undo(mark)
        return False

    def undo(mark: int) -> None:
        while len(trail) > mark:
            del assign[trail.pop()]

    return search()


class Oracle:
    """Memoizing decision procedure for propositional satisfiability questions."""

    def __init__(self, signature_cap: int = DEFAULT_SIGNATURE_CAP, cache: bool = True):
        self.signature_cap = signature_cap
        self.stats = OracleStats()
        self._cache: dict[frozenset, bool] | None = {} if cache else None
        self._lock = threading.Lock()

    def satisfiable(self, formulas: Iterable[Formula]) -> bool:
        key = frozenset(formulas)
        with self._lock:
            self.stats.queries += 1
            if self._cache is not None and key in self._cache:
                self.stats.cache_hits += 1
                return self._cache[key]
        result = self._solve(key)
        if self._cache is not None:
            with self._lock:
                self._cache[key] = result
        return result

    def _solve(self, formulas: frozenset) -> bool:
        sig = sorted({a for f in formulas for a in atoms_of(f)})
        if len(sig) > self.signature_cap:
            raise SignatureLimitError(
                f"query mentions {len(sig)} atoms, cap is {self.signature_cap}")
        cl = _Clausifier()
        cl.var = {a: i + 1 for i, a in enumerate(sig)}
        cl.next_aux = len(sig)
        for f in formulas:
            cl.add(f)
        if any(len(c) == 0 for c in cl.clauses):
            return False
        return _dpll(cl.clauses)

    def entails(self, theory: Iterable[Formula], goal: Formula) -> bool:
        return not self.satisfiable(itertools.chain(theory, (Not(goal),)))

    def consistent(self, theory: Iterable[Formula], extra: Iterable[Formula] = ()) -> bool:
        """``extra`` holds literals: atoms or negated atoms."""
        return self.satisfiable(itertools.chain(theory, extra))


default_oracle = Oracle()


def entails(theory: Iterable[Formula], goal: Formula) -> bool:
    return default_oracle.entails(theory, goal)


def consistent(theory: Iterable[Formula], extra: Iterable[Formula] = ()) -> bool:
    return default_oracle.consistent(theory, extra)


def satisfiable_by_enumeration(formulas: Iterable[Formula]) -> bool:
    """Truth-table check; exponential, used to cross-check :class:`Oracle`."""
    fs = list(formulas)
    sig = sorted({a for f in fs for a in atoms_of(f)})
    for bits in itertools.product((False, True), repeat=len(sig)):
        world = dict(zip(sig, bits))
        if all(evaluate(f, world) for f in fs):
            return True
    return False


def entails_by_enumeration(theory: Iterable[Formula], goal: Formula) -> bool:
    return not satisfiable_by_enumeration(itertools.chain(theory, (Not(goal),)))
