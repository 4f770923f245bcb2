import pytest
from hypothesis import given, strategies as st

from causal_alp.core import (
    Alphabet,
    Clause,
    Literal,
    complement,
    literal_completion,
    make_program,
    neg,
    pos,
    world_of,
)
from causal_alp.errors import ContractError, DomainError, InvalidWorldError

SPRINKLER_ATOMS = Alphabet(("c", "r", "s", "w", "d"))


def test_complement_flips_polarity():
    assert complement(pos("c")) == neg("c")
    assert complement(neg("c")) == pos("c")
    assert complement(complement(pos("s"))) == pos("s")


def test_literal_completion_examples():
    assert literal_completion({"s", "w", "d"}, SPRINKLER_ATOMS) == {
        neg("c"), neg("r"), pos("s"), pos("w"), pos("d")}
    assert literal_completion({"c", "r", "w", "d"}, SPRINKLER_ATOMS) == {
        pos("c"), pos("r"), neg("s"), pos("w"), pos("d")}
    assert literal_completion(set(), Alphabet(("f1", "f2"))) == {neg("f1"), neg("f2")}


def test_literal_completion_rejects_foreign_atom():
    with pytest.raises(InvalidWorldError):
        literal_completion({"x"}, SPRINKLER_ATOMS)


@given(st.sets(st.sampled_from(SPRINKLER_ATOMS.atoms)))
def test_literal_completion_is_maximal_consistent_and_round_trips(world):
    lits = literal_completion(world, SPRINKLER_ATOMS)
    assert len(lits) == len(SPRINKLER_ATOMS)
    assert not any(complement(l) in lits for l in lits)
    assert world_of(lits, SPRINKLER_ATOMS) == frozenset(world)


def test_alphabet_rejects_duplicates_and_bad_names():
    with pytest.raises(ContractError):
        Alphabet(("p", "p"))
    with pytest.raises(ContractError):
        Alphabet(("1p",))


def test_mask_round_trip():
    m = SPRINKLER_ATOMS.mask({"c", "d"})
    assert m == 0b10001
    assert SPRINKLER_ATOMS.unmask(m) == {"c", "d"}


def test_canonical_world_order_is_lexicographic_over_atoms():
    worlds = SPRINKLER_ATOMS.sort_worlds([frozenset("crwd"), frozenset("swd"), frozenset()])
    assert worlds == [frozenset(), frozenset("swd"), frozenset("crwd")]


def test_clause_with_complementary_body_is_kept():
    p = make_program([Clause("q", (pos("p"), neg("p")))])
    assert len(p.clauses) == 1


def test_abducible_may_not_head_a_clause():
    with pytest.raises(DomainError):
        make_program([Clause("c", (pos("r"),))], abducibles=["c"])


def test_literal_parse():
    assert Literal.parse("not p") == neg("p")
    assert Literal.parse("-p") == neg("p")
    assert Literal.parse("p") == pos("p")
