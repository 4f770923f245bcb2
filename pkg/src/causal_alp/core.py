"""Domain types: alphabets, literals, clauses, programs and worlds.

Worlds are plain ``frozenset`` objects holding the atoms that are true.
Every enumeration works on bit masks interned against an :class:`Alphabet`,
where atom ``i`` of the alphabet occupies bit ``i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ContractError, DomainError, InvalidWorldError, ResourceLimitError

ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

World = frozenset  # frozenset[str] of true atoms


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of atom names; the order drives every enumeration."""

    atoms: tuple[str, ...] = ()

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if len(set(atoms)) != len(atoms):
            raise ContractError(f"duplicate atoms in alphabet {atoms}")
        for a in atoms:
            if not isinstance(a, str) or not ATOM_RE.match(a):
                raise ContractError(f"invalid atom name {a!r}")

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.atoms)}

    def __len__(self):
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, atom) -> bool:
        return atom in self.index

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def mask(self, atoms: Iterable[str]) -> int:
        m = 0
        for a in atoms:
            try:
                m |= 1 << self.index[a]
            except KeyError:
                raise InvalidWorldError(f"atom {a!r} is not in the alphabet") from None
        return m

    def unmask(self, mask: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.atoms) if mask >> i & 1)

    def sort(self, atoms: Iterable[str]) -> list[str]:
        return sorted(atoms, key=self.index.__getitem__)

    def world_key(self, world: Iterable[str]) -> tuple[bool, ...]:
        """Canonical sort key: lexicographic over the truth vector, false before true."""
        world = frozenset(world)
        return tuple(a in world for a in self.atoms)

    def sort_worlds(self, worlds: Iterable[frozenset[str]]) -> list[frozenset[str]]:
        return sorted(worlds, key=self.world_key)

    def restrict(self, atoms: Iterable[str]) -> "Alphabet":
        """Sub-alphabet keeping this alphabet's order."""
        keep = set(atoms)
        return Alphabet(tuple(a for a in self.atoms if a in keep))


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    positive: bool = True

    def __str__(self):
        return self.atom if self.positive else f"not {self.atom}"

    def holds_in(self, world) -> bool:
        return (self.atom in world) == self.positive

    @classmethod
    def parse(cls, text: str) -> "Literal":
        """Read ``p``, ``not p``, ``-p`` or ``~p``."""
        text = text.strip()
        positive = True
        if text.startswith("not "):
            text, positive = text[4:].strip(), False
        elif text[:1] in ("-", "~", "¬"):
            text, positive = text[1:].strip(), False
        if not ATOM_RE.match(text):
            raise ContractError(f"invalid literal {text!r}")
        return cls(text, positive)


def pos(atom: str) -> Literal:
    return Literal(atom, True)


def neg(atom: str) -> Literal:
    return Literal(atom, False)


def complement(lit: Literal) -> Literal:
    return Literal(lit.atom, not lit.positive)


def _dedupe(items: Iterable) -> tuple:
    return tuple(dict.fromkeys(items))


def _body_masks(alphabet: Alphabet, body: Iterable[Literal]) -> tuple[int, int]:
    p = n = 0
    for lit in body:
        bit = 1 << alphabet.index[lit.atom]
        if lit.positive:
            p |= bit
        else:
            n |= bit
    return p, n


@dataclass(frozen=True)
class Clause:
    """``head <- body``; an empty body is a fact."""

    head: str
    body: tuple[Literal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "body", _dedupe(self.body))

    @property
    def is_fact(self) -> bool:
        return not self.body

    def atoms(self) -> Iterator[str]:
        yield self.head
        for lit in self.body:
            yield lit.atom

    def __str__(self):
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.body))}."


@dataclass(frozen=True)
class IntegrityConstraint:
    """``⊥ <- body``; a world satisfies it when the body is not fully true."""

    body: tuple[Literal, ...]

    def __post_init__(self):
        object.__setattr__(self, "body", _dedupe(self.body))
        if not self.body:
            raise ContractError("an integrity constraint needs a non-empty body")

    def atoms(self) -> Iterator[str]:
        for lit in self.body:
            yield lit.atom

    def satisfied_by(self, world) -> bool:
        return not all(lit.holds_in(world) for lit in self.body)

    def __str__(self):
        return f":- {', '.join(map(str, self.body))}."


@dataclass(frozen=True)
class LogicProgram:
    alphabet: Alphabet
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", _dedupe(self.clauses))
        for c in self.clauses:
            for a in c.atoms():
                if a not in self.alphabet:
                    raise ContractError(f"atom {a!r} of clause {c} is not in the alphabet")

    @cached_property
    def compiled(self) -> tuple[tuple[int, int, int], ...]:
        """``(head bit, positive body mask, negative body mask)`` per clause."""
        out = []
        for c in self.clauses:
            p, n = _body_masks(self.alphabet, c.body)
            out.append((1 << self.alphabet.index[c.head], p, n))
        return tuple(out)

    def with_facts(self, atoms: Iterable[str]) -> "LogicProgram":
        """``P ∪ atoms``, the atoms added as facts."""
        facts = [Clause(a) for a in self.alphabet.sort(set(atoms))]
        return LogicProgram(self.alphabet, self.clauses + tuple(facts))

    def heads(self) -> set[str]:
        return {c.head for c in self.clauses}


@dataclass(frozen=True)
class AbductiveProgram:
    """The triplet of rules, abducibles and integrity constraints."""

    program: LogicProgram
    abducibles: tuple[str, ...] = ()
    constraints: tuple[IntegrityConstraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "abducibles", _dedupe(self.abducibles))
        object.__setattr__(self, "constraints", _dedupe(self.constraints))
        alphabet = self.program.alphabet
        for a in self.abducibles:
            if a not in alphabet:
                raise ContractError(f"abducible {a!r} is not in the alphabet")
        for ic in self.constraints:
            for a in ic.atoms():
                if a not in alphabet:
                    raise ContractError(f"atom {a!r} of constraint {ic} is not in the alphabet")
        heads = self.program.heads()
        bad = [a for a in self.abducibles if a in heads]
        if bad:
            raise DomainError(f"abducible {bad[0]!r} is the head of a clause")

    @property
    def alphabet(self) -> Alphabet:
        return self.program.alphabet

    @property
    def clauses(self) -> tuple[Clause, ...]:
        return self.program.clauses

    @cached_property
    def abducible_mask(self) -> int:
        return self.alphabet.mask(self.abducibles)

    def satisfies_constraints(self, world) -> bool:
        return all(ic.satisfied_by(world) for ic in self.constraints)

    def explanations(self) -> list[frozenset[str]]:
        """Every subset of the abducibles, in canonical order."""
        abd = self.alphabet.sort(self.abducibles)
        subsets = [
            frozenset(a for i, a in enumerate(abd) if m >> i & 1)
            for m in range(1 << len(abd))
        ]
        return self.alphabet.sort_worlds(subsets)

    def replace(self, **changes) -> "AbductiveProgram":
        fields_ = {"program": self.program, "abducibles": self.abducibles,
                   "constraints": self.constraints}
        fields_.update(changes)
        return AbductiveProgram(**fields_)


def make_program(
    clauses: Iterable[Clause],
    abducibles: Iterable[str] = (),
    constraints: Iterable[IntegrityConstraint] = (),
    alphabet: Iterable[str] | None = None,
) -> AbductiveProgram:
    """Build an abductive program, inferring the alphabet by first occurrence."""
    clauses = tuple(clauses)
    abducibles = tuple(abducibles)
    constraints = tuple(constraints)
    if alphabet is None:
        seen: dict[str, None] = {}
        for c in clauses:
            seen.update(dict.fromkeys(c.atoms()))
        for ic in constraints:
            seen.update(dict.fromkeys(ic.atoms()))
        seen.update(dict.fromkeys(abducibles))
        alphabet = tuple(seen)
    return AbductiveProgram(
        LogicProgram(Alphabet(tuple(alphabet)), clauses), abducibles, constraints
    )


def literal_completion(world, alphabet: Alphabet) -> frozenset[Literal]:
    """The maximal consistent literal set a world stands for."""
    world = frozenset(world)
    stray = world - set(alphabet.atoms)
    if stray:
        raise InvalidWorldError(f"atoms {sorted(stray)} are not in the alphabet")
    return frozenset(Literal(a, a in world) for a in alphabet.atoms)


def world_of(literals: Iterable[Literal], alphabet: Alphabet) -> frozenset[str]:
    """Inverse of :func:`literal_completion`."""
    literals = frozenset(literals)
    atoms = {l.atom for l in literals}
    if len(literals) != len(alphabet) or atoms != set(alphabet.atoms):
        raise InvalidWorldError("literal set is not a maximal consistent set over the alphabet")
    return frozenset(l.atom for l in literals if l.positive)


def check_guard(alphabet: Alphabet, limit: int | None, what: str = "enumeration") -> None:
    if limit is not None and len(alphabet) > limit:
        raise ResourceLimitError(
            f"{what} over {len(alphabet)} atoms exceeds the limit of {limit}"
        )


DEFAULT_ATOM_LIMIT = 20
