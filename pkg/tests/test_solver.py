import pytest
from hypothesis import given, settings

from hmknf.formulas import Atom
from hmknf.kb import ContractError, Partition
from hmknf.operators import e_fixpoint, w_fixpoint
from hmknf.parser import parse_kb
from hmknf.solver import (enumerate_models, models_by_guessing, f_is_greatest_unfounded, solve,
                          verify_total)

from strategies import kbs


def parts(res):
    return {w.partition for w in res.models}


def test_k1_models(k1):
    assert parts(enumerate_models(k1, "w")) == {Partition.of("b", "ac")}
    assert parts(enumerate_models(k1, "e")) == {Partition.of("b", "ac")}


def test_k4_models(k4):
    assert parts(enumerate_models(k4)) == {Partition.of("ad", "bc")}


def test_volunteer_models(volunteer):
    for op in "we":
        res = enumerate_models(volunteer, op)
        assert parts(res) == {Partition.of(["volunteer", "work"], ["employed", "salary"])}


def test_unsat():
    kb = parse_kb("a :- not a.")
    for op in "we":
        assert not solve(kb, op).sat


def test_solve_objective(k1):
    res = solve(k1)
    assert res.sat
    assert Atom("b") in res.models[0].objective


def test_limit():
    kb = parse_kb("a :- not b.\nb :- not a.")
    assert len(enumerate_models(kb, "e").models) == 2
    assert len(enumerate_models(kb, "e", limit=1).models) == 1


def test_constraints_filter():
    kb = parse_kb("a :- not b.\nb :- not a.\n:- a.")
    assert parts(enumerate_models(kb, "w")) == {Partition.of("b", "a")}


def test_unknown_propagator(k1):
    with pytest.raises(ValueError):
        solve(k1, "x")


def test_verify_contract(k1):
    with pytest.raises(ContractError):
        verify_total(k1, Partition.of("b", "a"))
    with pytest.raises(ContractError):
        verify_total(k1, Partition.of("abc", "abc"))
    assert verify_total(k1, Partition.of("b", "ac"))
    assert not verify_total(k1, Partition.of("ac", "b"))


@settings(max_examples=60, deadline=None)
@given(kbs(max_atoms=5, max_rules=6))
def test_solver_matches_guessing(kb):
    truth = set(models_by_guessing(kb))
    for op in "we":
        res = enumerate_models(kb, op)
        found = [w.partition for w in res.models]
        assert len(found) == len(set(found))
        assert set(found) == truth
    for m in truth:
        assert f_is_greatest_unfounded(kb, m)
        # every model extends both well-founded partitions
        assert w_fixpoint(kb).result <= m
        assert e_fixpoint(kb).result <= m


@settings(max_examples=40, deadline=None)
@given(kbs(max_atoms=5))
def test_inconsistent_wfp_means_no_model(kb):
    if not e_fixpoint(kb).consistent:
        assert not models_by_guessing(kb)
