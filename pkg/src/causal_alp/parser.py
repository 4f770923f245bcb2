"""Reader and writer for the ``.alp`` abductive program format.

::

    % the sprinkler
    abducible c.
    r :- c.
    s :- not c.
    w :- r.
    w :- s.
    d :- w.
    :- not s.          % integrity constraint

The alphabet is every atom mentioned anywhere, in order of first occurrence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .core import (
    DEFAULT_ATOM_LIMIT,
    AbductiveProgram,
    Alphabet,
    Clause,
    IntegrityConstraint,
    Literal,
    LogicProgram,
    check_guard,
)
from .errors import ParseError

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<comment>%[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<if>:-)|(?P<dot>\.)|(?P<comma>,)"
)


@dataclass(frozen=True)
class SourceProgram:
    text: str
    origin: str = "<string>"


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    kind: str = "syntax"  # syntax | abducible-head-violation | duplicate-abducible | unknown
    severity: str = "error"

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message} [{self.kind}]"


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._tokenize())
        self.i = 0

    def position(self, offset: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def error(self, offset: int, message: str, kind: str = "syntax") -> ParseError:
        # point at the last real character when the input ran out
        offset = min(offset, max(len(self.text) - 1, 0))
        line, col = self.position(offset)
        return ParseError([ParseDiagnostic(line, col, message, kind)])

    def _tokenize(self) -> Iterator[_Token]:
        pos = 0
        while pos < len(self.text):
            m = _TOKEN_RE.match(self.text, pos)
            if m is None:
                raise self.error(pos, f"unexpected character {self.text[pos]!r}")
            kind = m.lastgroup
            if kind not in ("ws", "comment"):
                yield _Token(kind, m.group(), pos)
            pos = m.end()

    def peek(self, ahead: int = 0) -> _Token | None:
        j = self.i + ahead
        return self.tokens[j] if j < len(self.tokens) else None

    def take(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise self.error(len(self.text), f"expected {what}, found end of input")
        if tok.kind != kind:
            raise self.error(tok.offset, f"expected {what}, found {tok.text!r}")
        self.i += 1
        return tok


def _parse_literal(r: _Reader) -> tuple[Literal, _Token]:
    tok = r.peek()
    nxt = r.peek(1)
    if tok is not None and tok.kind == "ident" and tok.text == "not" and nxt is not None \
            and nxt.kind == "ident":
        r.i += 1
        atom = r.take("ident", "an atom")
        return Literal(atom.text, False), atom
    atom = r.take("ident", "a literal")
    return Literal(atom.text, True), atom


def _parse_body(r: _Reader, seen: dict[str, None]) -> tuple[Literal, ...]:
    body = []
    while True:
        lit, tok = _parse_literal(r)
        seen.setdefault(lit.atom)
        body.append(lit)
        sep = r.peek()
        if sep is not None and sep.kind == "comma":
            r.i += 1
            continue
        r.take("dot", "',' or '.'")
        return tuple(body)


def parse_program(
    src: SourceProgram | str,
    *,
    atom_limit: int | None = DEFAULT_ATOM_LIMIT,
    diagnostics: list[ParseDiagnostic] | None = None,
) -> AbductiveProgram:
    """Parse ``.alp`` text into an :class:`AbductiveProgram`.

    Warning-level diagnostics (duplicate abducible declarations) are appended
    to ``diagnostics`` when a list is passed. Errors raise :class:`ParseError`.
    """
    text = src.text if isinstance(src, SourceProgram) else src
    r = _Reader(text)
    seen: dict[str, None] = {}
    clauses: list[Clause] = []
    clause_tokens: list[_Token] = []
    constraints: list[IntegrityConstraint] = []
    abducibles: dict[str, _Token] = {}

    while r.peek() is not None:
        tok = r.peek()
        nxt = r.peek(1)
        if tok.kind == "if":
            r.i += 1
            constraints.append(IntegrityConstraint(_parse_body(r, seen)))
        elif tok.kind == "ident" and tok.text == "abducible" and nxt is not None \
                and nxt.kind == "ident":
            r.i += 1
            while True:
                atom = r.take("ident", "an abducible atom")
                if atom.text in abducibles:
                    if diagnostics is not None:
                        line, col = r.position(atom.offset)
                        diagnostics.append(ParseDiagnostic(
                            line, col, f"abducible {atom.text!r} declared twice",
                            "duplicate-abducible", "warning"))
                else:
                    abducibles[atom.text] = atom
                seen.setdefault(atom.text)
                sep = r.take("comma" if r.peek() is not None and r.peek().kind == "comma"
                             else "dot", "',' or '.'")
                if sep.kind == "dot":
                    break
        elif tok.kind == "ident":
            r.i += 1
            seen.setdefault(tok.text)
            sep = r.peek()
            if sep is not None and sep.kind == "if":
                r.i += 1
                body = _parse_body(r, seen)
            else:
                r.take("dot", "':-' or '.'")
                body = ()
            clauses.append(Clause(tok.text, body))
            clause_tokens.append(tok)
        else:
            raise r.error(tok.offset, f"unexpected {tok.text!r} at start of statement")

    for clause, tok in zip(clauses, clause_tokens):
        if clause.head in abducibles:
            raise r.error(
                tok.offset,
                f"abducible {clause.head!r} is the head of a clause",
                "abducible-head-violation",
            )

    alphabet = Alphabet(tuple(seen))
    check_guard(alphabet, atom_limit, "parsing")
    return AbductiveProgram(LogicProgram(alphabet, tuple(clauses)),
                            tuple(abducibles), tuple(constraints))


def parse_file(path, **kwargs) -> AbductiveProgram:
    with open(path, encoding="utf-8") as fh:
        return parse_program(SourceProgram(fh.read(), str(path)), **kwargs)


def _first_occurrences(atoms, known: set[str]) -> list[str]:
    out = []
    for a in atoms:
        if a not in known and a not in out:
            out.append(a)
    return out


def render_program(p: AbductiveProgram) -> str:
    """Emit canonical text that parses back to ``p``.

    Clause, constraint and abducible orders are kept, and statements are
    interleaved so that first occurrences reproduce the alphabet order.
    Atoms mentioned by no statement cannot be represented and are dropped.
    """
    statements = (
        [("clause", c, list(c.atoms())) for c in p.clauses],
        [("constraint", ic, list(ic.atoms())) for ic in p.constraints],
        [("abducible", a, [a]) for a in p.abducibles],
    )
    mentioned = set()
    for group in statements:
        for _, _, atoms in group:
            mentioned.update(atoms)
    target = [a for a in p.alphabet.atoms if a in mentioned]

    failed: set[tuple[int, ...]] = set()

    def search(cursors, known, placed):
        if all(cur == len(group) for cur, group in zip(cursors, statements)):
            return placed
        if tuple(cursors) in failed:
            return None
        for g, group in enumerate(statements):
            if cursors[g] == len(group):
                continue
            kind, item, atoms = group[cursors[g]]
            new = _first_occurrences(atoms, known)
            if new != target[len(known) : len(known) + len(new)]:
                continue
            nxt = list(cursors)
            nxt[g] += 1
            found = search(nxt, known | set(new), placed + [(kind, item)])
            if found is not None:
                return found
        failed.add(tuple(cursors))
        return None

    order = search([0, 0, 0], frozenset(), [])
    if order is None:  # unreachable for parsed programs; keep group order
        order = [(k, item) for group in statements for k, item, _ in group]

    lines = []
    for kind, item in order:
        lines.append(f"abducible {item}." if kind == "abducible" else str(item))
    return "".join(line + "\n" for line in lines)
