import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmknf.formulas import Atom, Implies, Not
from hmknf.kb import (ContractError, KnowledgeBase, Ontology, Partition, Rule, format_kb,
                      katoms, objective_knowledge)
from hmknf.parser import KBSyntaxError, parse_formula, parse_kb

from strategies import formulas, kbs

a, b, c, d = map(Atom, "abcd")


def test_atoms_are_interned():
    assert Atom("abc") is Atom("abc")
    with pytest.raises(ValueError):
        Atom("Abc")


def test_parse_k1(k1):
    assert len(k1.rules) == 3
    assert k1.ontology.formulas == (Not(c),)
    assert katoms(k1) == {a, b, c}
    assert k1.rules[0] == Rule.of("a", neg=["b"])
    assert k1.rules[2] == Rule.of("c", pos=["a"])


def test_parse_empty():
    kb = parse_kb("")
    assert kb.ontology.formulas == () and kb.rules == () and katoms(kb) == frozenset()


def test_parse_overlapping_body():
    kb = parse_kb("c :- a, not a.")
    (r,) = kb.rules
    assert r.body_pos == {a} and r.body_neg == {a}
    assert katoms(kb) == {a, c}


def test_facts_and_constraints():
    kb = parse_kb("#rules\na.\n:- a, not b.\n")
    assert kb.rules[0] == Rule.of("a")
    assert kb.rules[1].is_constraint
    assert kb.rules[1].body_neg == {b}


def test_katoms_k4(k4):
    assert katoms(k4) == {a, b, c, d}


def test_katoms_ignore_ontology():
    kb = parse_kb("#ontology\np -> q.\n")
    assert katoms(kb) == frozenset()


@pytest.mark.parametrize("text, line, col", [
    ("#rules\na :- B.", 2, 6),
    ("#ontology\n-c.\n#ontology\n", 3, 1),
    ("#rules\na :- b", 2, 7),
    ("#rules\na :- not.", 2, 9),
    ("#ontology\na & .", 2, 5),
    ("#rules\na ? b.", 2, 3),
])
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(KBSyntaxError) as err:
        parse_kb(text)
    assert (err.value.line, err.value.col) == (line, col)


def test_rules_before_ontology_rejected():
    with pytest.raises(KBSyntaxError):
        parse_kb("#rules\na.\n#ontology\nb.\n")


def test_comments_and_precedence():
    kb = parse_kb("% comment\n#ontology\n-a & b | c -> d -> a. % trailing\n")
    (f,) = kb.ontology.formulas
    assert f == parse_formula("((-a & b) | c) -> (d -> a)")


def test_objective_knowledge(k1, k2):
    assert objective_knowledge(k1, set()) == {Not(c)}
    assert objective_knowledge(k1, {a}) == {Not(c), a}
    assert objective_knowledge(k2, {a, b}) == {Implies(a, b), a, b}
    with pytest.raises(ContractError):
        objective_knowledge(k1, {Atom("zzz")})


def test_round_trip_example_kbs(k1, k2, k3, k4, volunteer):
    for kb in (k1, k2, k3, k4, volunteer):
        again = parse_kb(format_kb(kb))
        assert again == kb
        assert format_kb(again) == format_kb(kb)


@given(kbs())
def test_round_trip_generated(kb):
    again = parse_kb(format_kb(kb))
    assert again == kb
    assert katoms(again) == katoms(kb)


@given(st.lists(formulas(), max_size=4))
def test_round_trip_formulas(fs):
    kb = KnowledgeBase(Ontology(tuple(fs)), ())
    assert parse_kb(format_kb(kb)).ontology.formulas == tuple(fs)


def test_empty_constraint_round_trips():
    kb = KnowledgeBase(Ontology(), (Rule(None),))
    assert parse_kb(format_kb(kb)) == kb


atom_sets = st.frozensets(st.sampled_from([a, b, c, d]))
parts = st.builds(Partition, atom_sets, atom_sets)


@given(parts, parts, parts)
def test_partition_lattice_laws(p, q, r):
    assert (p | q) | r == p | (q | r)
    assert p | q == q | p
    assert p | p == p
    assert p <= p | q
    assert p <= p
    if p <= q and q <= p:
        assert p == q
    if p <= q and q <= r:
        assert p <= r


def test_partition_consistency_is_a_predicate():
    p = Partition.of("a", "a")
    assert not p.consistent
    assert Partition.of("a", "b").consistent


@given(kbs(), st.data())
def test_objective_knowledge_monotone(kb, data):
    s2 = data.draw(st.frozensets(st.sampled_from(kb.ordered_katoms)) if kb.katoms else st.just(frozenset()))
    s1 = data.draw(st.frozensets(st.sampled_from(sorted(s2))) if s2 else st.just(frozenset()))
    assert objective_knowledge(kb, s1) <= objective_knowledge(kb, s2)
