import pytest
from hypothesis import given

from _gen import programs
from conftest import FARMER, HOUSES, SPRINKLER
from causal_alp.core import Clause, neg, pos
from causal_alp.errors import ParseError, ResourceLimitError
from causal_alp.parser import ParseDiagnostic, SourceProgram, parse_program, render_program


def test_sprinkler_shape():
    p = parse_program(SPRINKLER)
    assert len(p.alphabet) == 5
    assert p.abducibles == ("c",)
    assert len(p.clauses) == 5
    assert p.constraints == ()
    assert p.clauses[1] == Clause("s", (neg("c"),))


def test_empty_text():
    p = parse_program("")
    assert len(p.alphabet) == 0 and p.clauses == ()


def test_abducible_head_violation_points_at_clause():
    with pytest.raises(ParseError) as info:
        parse_program("abducible c.\nc :- r.")
    d = info.value.diagnostics[0]
    assert d.kind == "abducible-head-violation"
    assert (d.line, d.column) == (2, 1)


def test_duplicate_abducible_is_a_warning():
    diags: list[ParseDiagnostic] = []
    p = parse_program("abducible a, a.\nb :- a.", diagnostics=diags)
    assert p.abducibles == ("a",)
    assert [d.kind for d in diags] == ["duplicate-abducible"]
    assert diags[0].severity == "warning"


@pytest.mark.parametrize("text, line, col", [
    ("p :- q", 1, 6),
    ("p :- .", 1, 6),
    ("p q.", 1, 3),
    ("p :- q;\n", 1, 7),
    ("% fine\n:- .", 2, 4),
])
def test_syntax_errors_have_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_program(text)
    d = info.value.diagnostics[0]
    assert d.kind == "syntax"
    assert (d.line, d.column) == (line, col)
    assert text.splitlines()[d.line - 1][d.column - 1]  # indexes a real character


def test_comments_facts_and_constraints():
    p = parse_program("% header\ns. % fact\n:- not s, w.\nw :- s.")
    assert p.clauses[0] == Clause("s")
    assert p.constraints[0].body == (neg("s"), pos("w"))
    assert p.alphabet.atoms == ("s", "w")


def test_body_only_atoms_enter_alphabet():
    assert parse_program("p :- q, not r.").alphabet.atoms == ("p", "q", "r")


def test_atom_limit_guard():
    text = " ".join(f"a{i}." for i in range(25))
    with pytest.raises(ResourceLimitError):
        parse_program(text)
    assert len(parse_program(text, atom_limit=30).alphabet) == 25


def test_source_program_wrapper():
    assert parse_program(SourceProgram("p.", "x.alp")).clauses == (Clause("p"),)


def test_render_houses():
    text = render_program(parse_program(
        "f1 :- sf1.\nf2 :- sf2.\nf2 :- f1.\nf1 :- f2.\nabducible sf1, sf2.\n"))
    assert text == ("f1 :- sf1.\nf2 :- sf2.\nf2 :- f1.\nf1 :- f2.\n"
                    "abducible sf1.\nabducible sf2.\n")


def test_render_empty():
    assert render_program(parse_program("")) == ""


@pytest.mark.parametrize("text", [SPRINKLER, HOUSES, FARMER, SPRINKLER + ":- not s.\n",
                                  "t :- p, not e. p :- not t, s. s :- h."])
def test_round_trip(text):
    p = parse_program(text)
    assert parse_program(render_program(p)) == p
    assert parse_program(render_program(p)).alphabet.atoms == p.alphabet.atoms


def test_round_trip_interleaved_first_occurrence():
    text = ":- z, y.\np :- y.\nabducible z.\nq :- not x."
    p = parse_program(text)
    assert parse_program(render_program(p)) == p


@given(programs(max_atoms=6, constraints=True))
def test_render_parse_idempotent(ap):
    once = parse_program(render_program(ap))
    assert parse_program(render_program(once)) == once
