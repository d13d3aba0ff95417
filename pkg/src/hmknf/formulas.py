"""Ground propositional formulas over interned atoms.

Atoms double as formula leaves, so ``Atom("a")`` can be placed directly into a
theory. Connective nodes are frozen dataclasses and therefore hashable, which
the oracle relies on for memoization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"not", "true", "false"})

_interned: dict[str, "Atom"] = {}


class Atom(str):
    """A ground atom. Equal names give the identical object."""

    __slots__ = ()

    def __new__(cls, name: str) -> "Atom":
        cached = _interned.get(name)
        if cached is not None:
            return cached
        if not ATOM_RE.match(name) or name in RESERVED:
            raise ValueError(f"invalid atom name {name!r}")
        obj = super().__new__(cls, name)
        _interned[name] = obj
        return obj

    def __repr__(self) -> str:
        return f"Atom({str.__repr__(self)})"

    @property
    def name(self) -> str:
        return str(self)


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Const, Not, And, Or, Implies]

TRUE = Const(True)
FALSE = Const(False)


def atoms_of(f: Formula) -> Iterator[Atom]:
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            yield g
        elif isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or, Implies)):
            stack.append(g.right)
            stack.append(g.left)


def evaluate(f: Formula, assignment: Mapping[Atom, bool]) -> bool:
    """Classical truth value of ``f``; atoms missing from ``assignment`` are false."""
    if isinstance(f, Atom):
        return assignment.get(f, False)
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not evaluate(f.arg, assignment)
    if isinstance(f, And):
        return evaluate(f.left, assignment) and evaluate(f.right, assignment)
    if isinstance(f, Or):
        return evaluate(f.left, assignment) or evaluate(f.right, assignment)
    if isinstance(f, Implies):
        return (not evaluate(f.left, assignment)) or evaluate(f.right, assignment)
    raise TypeError(f"not a formula: {f!r}")


# binding strength used by the printer; higher binds tighter
_PREC = {Implies: 1, Or: 2, And: 3}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 4)


def to_text(f: Formula) -> str:
    """Render in the KB surface syntax with minimal parentheses."""
    if isinstance(f, Atom):
        return str(f)
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        inner = to_text(f.arg)
        return "-" + (inner if _prec(f.arg) >= 4 else f"({inner})")
    p = _prec(f)
    left, right = to_text(f.left), to_text(f.right)
    if isinstance(f, Implies):
        # right-associative
        if _prec(f.left) <= p:
            left = f"({left})"
        if _prec(f.right) < p:
            right = f"({right})"
        return f"{left} -> {right}"
    op = " & " if isinstance(f, And) else " | "
    # & and | are parsed left-associative
    if _prec(f.left) < p:
        left = f"({left})"
    if _prec(f.right) <= p:
        right = f"({right})"
    return f"{left}{op}{right}"
