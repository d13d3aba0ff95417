"""Knowledge-base values: rules, ontology, K-atom universe and partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Optional

from .formulas import Atom, Formula, atoms_of, to_text


class ContractError(ValueError):
    """An operation was called outside its documented precondition."""


@dataclass(frozen=True)
class Rule:
    """``head :- body_pos, not body_neg``; a missing head makes a constraint."""

    head: Optional[Atom]
    body_pos: frozenset[Atom] = frozenset()
    body_neg: frozenset[Atom] = frozenset()
    # source order of body literals, only used for printing
    pos_order: tuple[Atom, ...] = field(default=(), compare=False, repr=False)
    neg_order: tuple[Atom, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "body_pos", frozenset(self.body_pos))
        object.__setattr__(self, "body_neg", frozenset(self.body_neg))
        if set(self.pos_order) != self.body_pos:
            object.__setattr__(self, "pos_order", tuple(sorted(self.body_pos)))
        if set(self.neg_order) != self.body_neg:
            object.__setattr__(self, "neg_order", tuple(sorted(self.body_neg)))

    @classmethod
    def of(cls, head: Optional[str], pos: Iterable[str] = (), neg: Iterable[str] = ()) -> "Rule":
        pos_t = tuple(dict.fromkeys(Atom(a) for a in pos))
        neg_t = tuple(dict.fromkeys(Atom(a) for a in neg))
        return cls(
            Atom(head) if head is not None else None,
            frozenset(pos_t), frozenset(neg_t), pos_t, neg_t,
        )

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    def atoms(self) -> Iterable[Atom]:
        if self.head is not None:
            yield self.head
        yield from self.pos_order
        yield from self.neg_order

    def to_text(self) -> str:
        lits = [str(a) for a in self.pos_order] + [f"not {a}" for a in self.neg_order]
        head = str(self.head) if self.head is not None else ""
        if not lits:
            return f"{head}." if head else ":- ."
        body = ", ".join(lits)
        return f"{head} :- {body}." if head else f":- {body}."


@dataclass(frozen=True)
class Ontology:
    formulas: tuple[Formula, ...] = ()

    def atoms(self) -> Iterable[Atom]:
        for f in self.formulas:
            yield from atoms_of(f)


class Theory(frozenset):
    """A finite set of ground formulas (the objective knowledge of a KB)."""

    def atoms(self) -> frozenset[Atom]:
        return frozenset(a for f in self for a in atoms_of(f))


@dataclass(frozen=True)
class KnowledgeBase:
    ontology: Ontology = Ontology()
    rules: tuple[Rule, ...] = ()
    katoms: frozenset[Atom] = field(init=False)
    # first-occurrence ids: rule atoms first, then ontology-only atoms
    ids: dict = field(init=False, compare=False, repr=False)
    ordered_katoms: tuple[Atom, ...] = field(init=False, compare=False, repr=False)
    _cache: dict = field(init=False, compare=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        ids: dict[Atom, int] = {}
        for r in self.rules:
            for a in r.atoms():
                ids.setdefault(a, len(ids))
        ka = dict(ids)
        for a in self.ontology.atoms():
            ids.setdefault(a, len(ids))
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "katoms", frozenset(ka))
        object.__setattr__(self, "ordered_katoms", tuple(sorted(ka, key=ids.__getitem__)))

    def __hash__(self) -> int:
        return hash((self.ontology, self.rules))

    def sort(self, atoms: Iterable[Atom]) -> list[Atom]:
        """Atoms in KB order; atoms foreign to the KB go last, by name."""
        big = len(self.ids)
        return sorted(atoms, key=lambda a: (self.ids.get(a, big), a))

    def check_subset(self, *sets: AbstractSet[Atom]) -> None:
        for s in sets:
            extra = set(s) - self.katoms
            if extra:
                raise ContractError(f"atoms outside KA(K): {sorted(extra)}")


def katoms(kb: KnowledgeBase) -> frozenset[Atom]:
    """K-atoms of the rule base; ontology-only atoms are not included."""
    return kb.katoms


def objective_knowledge(kb: KnowledgeBase, s: AbstractSet[Atom]) -> Theory:
    kb.check_subset(s)
    return Theory(kb.ontology.formulas) | Theory(s)


@dataclass(frozen=True)
class Partition:
    """Pair (t, f) of K-atom sets. Overlap is allowed and signals a conflict."""

    t: frozenset[Atom] = frozenset()
    f: frozenset[Atom] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", frozenset(self.t))
        object.__setattr__(self, "f", frozenset(self.f))

    @classmethod
    def of(cls, t: Iterable[str] = (), f: Iterable[str] = ()) -> "Partition":
        return cls(frozenset(map(Atom, t)), frozenset(map(Atom, f)))

    @classmethod
    def full(cls, universe: AbstractSet[Atom]) -> "Partition":
        return cls(frozenset(universe), frozenset(universe))

    def __le__(self, other: "Partition") -> bool:
        return self.t <= other.t and self.f <= other.f

    def __lt__(self, other: "Partition") -> bool:
        return self <= other and self != other

    def __or__(self, other: "Partition") -> "Partition":
        return Partition(self.t | other.t, self.f | other.f)

    join = __or__

    @property
    def consistent(self) -> bool:
        return not (self.t & self.f)

    def assigned(self) -> frozenset[Atom]:
        return self.t | self.f

    def is_total(self, universe: AbstractSet[Atom]) -> bool:
        return self.assigned() >= universe


def format_kb(kb: KnowledgeBase) -> str:
    """Serialize in the text format accepted by :func:`hmknf.parser.parse_kb`."""
    lines = []
    if kb.ontology.formulas:
        lines.append("#ontology")
        lines.extend(to_text(f) + "." for f in kb.ontology.formulas)
    if kb.rules:
        lines.append("#rules")
        lines.extend(r.to_text() for r in kb.rules)
    return "\n".join(lines) + ("\n" if lines else "")
