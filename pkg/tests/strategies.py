"""Hypothesis strategies for knowledge bases, partitions and formulas."""

from hypothesis import strategies as st

from hmknf.formulas import FALSE, TRUE, And, Atom, Implies, Not, Or
from hmknf.generate import GenParams, generate_kb
from hmknf.kb import Partition

ATOMS = [Atom(n) for n in ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l")]


@st.composite
def kbs(draw, max_atoms=6, max_rules=6, max_clauses=3):
    n = draw(st.integers(1, max_atoms))
    params = GenParams(
        n_atoms=n,
        n_rules=draw(st.integers(0, max_rules)),
        max_body=draw(st.integers(0, min(n, 3))),
        neg_prob=draw(st.sampled_from([0.0, 0.3, 0.5, 1.0])),
        n_clauses=draw(st.integers(0, max_clauses)),
        clause_width=draw(st.integers(1, min(n, 3))),
        seed=draw(st.integers(0, 2**64 - 1)),
    )
    return generate_kb(params)


@st.composite
def partitions(draw, kb):
    labels = draw(st.lists(st.sampled_from("tfu"), min_size=len(kb.ordered_katoms),
                           max_size=len(kb.ordered_katoms)))
    t = frozenset(a for a, l in zip(kb.ordered_katoms, labels) if l == "t")
    f = frozenset(a for a, l in zip(kb.ordered_katoms, labels) if l == "f")
    return Partition(t, f)


def formulas(atoms=ATOMS[:4]):
    leaf = st.sampled_from(list(atoms) + [TRUE, FALSE])
    return st.recursive(
        leaf,
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(sub, sub).map(lambda p: And(*p)),
            st.tuples(sub, sub).map(lambda p: Or(*p)),
            st.tuples(sub, sub).map(lambda p: Implies(*p)),
        ),
        max_leaves=8,
    )
