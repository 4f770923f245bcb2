from itertools import combinations

import pytest
from hypothesis import given, settings

from _gen import programs
from causal_alp.errors import ContractError
from causal_alp.graph import (
    BOTH,
    dependence_graph,
    descendants,
    is_acyclic,
    is_stratified,
    slice_program,
)
from causal_alp.parser import parse_program


def edges(ap):
    return set(dependence_graph(ap.program).edges)


def test_sprinkler_edges(sprinkler):
    assert edges(sprinkler) == {
        ("c", "r", "+"), ("c", "s", "-"), ("r", "w", "+"), ("s", "w", "+"), ("w", "d", "+")}


def test_houses_edges(houses):
    assert edges(houses) == {
        ("sf1", "f1", "+"), ("sf2", "f2", "+"), ("f1", "f2", "+"), ("f2", "f1", "+")}


def test_farmer_edges(farmer):
    assert edges(farmer) == {
        ("p", "t", "+"), ("e", "t", "-"), ("t", "p", "-"), ("s", "p", "+"), ("h", "s", "+")}


def test_both_signed_edge():
    g = dependence_graph(parse_program("q :- p. q :- not p.").program)
    assert g.edges == (("p", "q", BOTH),)


def test_empty_program_has_no_edges():
    assert dependence_graph(parse_program("").program).edges == ()


def test_stratification(sprinkler, houses, farmer):
    assert is_stratified(dependence_graph(sprinkler.program))
    assert is_stratified(dependence_graph(houses.program))
    assert not is_stratified(dependence_graph(farmer.program))
    assert not is_stratified(dependence_graph(parse_program("p :- not p.").program))
    # a both-signed edge on a cycle counts as negative
    assert not is_stratified(dependence_graph(parse_program("q :- p, not p. p :- q.").program))


def test_acyclicity(sprinkler, houses):
    assert is_acyclic(dependence_graph(sprinkler.program))
    assert not is_acyclic(dependence_graph(houses.program))
    assert is_acyclic(dependence_graph(parse_program("").program))


def test_descendants(sprinkler, farmer):
    g = dependence_graph(sprinkler.program)
    assert descendants(g, {"s"}) == {"w", "d"}
    assert descendants(g, set()) == set()
    assert descendants(dependence_graph(farmer.program), {"h"}) == {"s", "p", "t"}
    with pytest.raises(ContractError):
        descendants(g, {"zzz"})


def test_slices(sprinkler):
    above = slice_program(sprinkler.program, {"s"}, "above")
    assert [str(c) for c in above.clauses] == ["w :- r.", "w :- s.", "d :- w."]
    below = slice_program(sprinkler.program, {"s"}, "below")
    assert [str(c) for c in below.clauses] == ["r :- c."]
    assert slice_program(sprinkler.program, set(sprinkler.alphabet), "above").clauses == ()
    assert above.alphabet == sprinkler.alphabet


@settings(max_examples=60)
@given(programs(max_atoms=5))
def test_graph_invariants(ap):
    g = dependence_graph(ap.program)
    atoms = ap.alphabet.atoms
    if is_acyclic(g):
        assert is_stratified(g)
    subsets = [frozenset(c) for k in range(len(atoms) + 1) for c in combinations(atoms, k)]
    for s in subsets:
        closed = s | descendants(g, s)
        # no edge leaves S together with its descendants
        assert all(v in closed for u, v, _ in g.edges if u in closed)
        for extra in atoms:
            assert descendants(g, s) - {extra} <= descendants(g, s | {extra}) | {extra}
        parts = [slice_program(ap.program, s, r).clauses for r in ("above", "below", "at")]
        assert sorted(map(str, sum(parts, ()))) == sorted(map(str, ap.clauses))
        assert not set(parts[0]) & set(parts[1]) and not set(parts[1]) & set(parts[2])
