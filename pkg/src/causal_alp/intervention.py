"""Interventions by program surgery and the causal-model reading of programs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import (
    DEFAULT_ATOM_LIMIT,
    AbductiveProgram,
    Alphabet,
    Clause,
    Literal,
    LogicProgram,
    check_guard,
)
from .errors import ContractError, CounterfactualUnsupportedError, DomainError

TRUE = ((),)   # a single empty conjunction
FALSE = ()     # the empty disjunction


@dataclass(frozen=True)
class Assignment:
    """Values forced on a set of atoms, kept in insertion order."""

    bindings: tuple[tuple[str, bool], ...] = ()

    def __post_init__(self):
        atoms = [a for a, _ in self.bindings]
        if len(set(atoms)) != len(atoms):
            raise ContractError(f"atom assigned twice in {self.bindings}")

    @classmethod
    def of(cls, mapping: Mapping[str, bool] | Iterable[tuple[str, bool]] = ()) -> "Assignment":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(tuple((a, bool(v)) for a, v in items))

    @classmethod
    def parse(cls, specs: Iterable[str]) -> "Assignment":
        """Read ``atom=true`` / ``atom=false`` items as given to ``--do``."""
        out = []
        for spec in specs:
            atom, sep, value = spec.partition("=")
            value = value.strip().lower()
            if not sep or value not in ("true", "false", "1", "0"):
                raise ContractError(f"bad assignment {spec!r}; expected atom=true|false")
            out.append((atom.strip(), value in ("true", "1")))
        return cls(tuple(out))

    def atoms(self) -> frozenset[str]:
        return frozenset(a for a, _ in self.bindings)

    def as_dict(self) -> dict[str, bool]:
        return dict(self.bindings)

    def __str__(self):
        return ", ".join(f"{a}={'true' if v else 'false'}" for a, v in self.bindings)


def _bodies_equal(a, b) -> bool:
    return frozenset(map(frozenset, a)) == frozenset(map(frozenset, b))


@dataclass(frozen=True, eq=False)
class StructuralCausalModel:
    """Boolean SCM whose equations are DNFs: ``X := OR of AND of literals``.

    Equality is structural up to the order of disjuncts and conjuncts.
    """

    alphabet: Alphabet
    external: tuple[str, ...]
    internal: tuple[str, ...]
    equations: Mapping[str, tuple[tuple[Literal, ...], ...]]

    def __post_init__(self):
        if set(self.external) & set(self.internal):
            raise ContractError("a variable cannot be both external and internal")
        if set(self.external) | set(self.internal) != set(self.alphabet.atoms):
            raise ContractError("external and internal variables must cover the alphabet")
        if set(self.equations) != set(self.internal):
            raise ContractError("exactly one equation per internal variable is required")

    def __eq__(self, other):
        if not isinstance(other, StructuralCausalModel):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and set(self.external) == set(other.external)
            and set(self.internal) == set(other.internal)
            and all(_bodies_equal(self.equations[x], other.equations[x]) for x in self.internal)
        )

    __hash__ = None

    def parents(self, x: str) -> list[str]:
        seen = dict.fromkeys(l.atom for body in self.equations[x] for l in body)
        return [a for a in seen if a in set(self.internal)]

    def error_terms(self, x: str) -> list[str]:
        seen = dict.fromkeys(l.atom for body in self.equations[x] for l in body)
        return [a for a in seen if a in set(self.external)]


def _reject_constraints(ap: AbductiveProgram) -> None:
    if ap.constraints:
        raise CounterfactualUnsupportedError(
            "counterfactual unsupported: the program has integrity constraints "
            "(observations), and intervening on observed programs is out of scope"
        )


def _check_assignment(ap: AbductiveProgram, a: Assignment) -> None:
    for atom in a.atoms():
        if atom not in ap.alphabet:
            raise ContractError(f"cannot intervene on unknown atom {atom!r}")
    touched = sorted(a.atoms() & set(ap.abducibles))
    if touched:
        raise DomainError(
            f"cannot intervene on abducible {touched[0]!r}; add or drop it from the "
            "explanation instead"
        )


def intervene(ap: AbductiveProgram, a: Assignment) -> AbductiveProgram:
    """The modified program: clauses of assigned atoms removed, facts for true ones.

    A new fact takes the place of the first removed clause of its atom, or is
    appended when the atom had no clause.
    """
    _reject_constraints(ap)
    _check_assignment(ap, a)
    values = a.as_dict()
    clauses: list[Clause] = []
    placed: set[str] = set()
    for c in ap.clauses:
        if c.head not in values:
            clauses.append(c)
        elif values[c.head] and c.head not in placed:
            clauses.append(Clause(c.head))
            placed.add(c.head)
    for atom, value in a.bindings:
        if value and atom not in placed:
            clauses.append(Clause(atom))
    return ap.replace(program=LogicProgram(ap.alphabet, tuple(clauses)))


def cm_semantics(ap: AbductiveProgram) -> StructuralCausalModel:
    """Abducibles become external variables; each other atom is defined by its clause bodies."""
    if ap.constraints:
        raise DomainError("the causal model semantics needs a program without integrity constraints")
    abd = set(ap.abducibles)
    internal = tuple(x for x in ap.alphabet if x not in abd)
    equations: dict[str, list] = {x: [] for x in internal}
    for c in ap.clauses:
        equations[c.head].append(c.body)
    return StructuralCausalModel(
        ap.alphabet,
        tuple(x for x in ap.alphabet if x in abd),
        internal,
        {x: tuple(bodies) for x, bodies in equations.items()},
    )


def scm_intervene(m: StructuralCausalModel, a: Assignment) -> StructuralCausalModel:
    for atom in a.atoms():
        if atom in set(m.external):
            raise DomainError(f"cannot intervene on external variable {atom!r}")
        if atom not in set(m.internal):
            raise ContractError(f"unknown variable {atom!r}")
    equations = dict(m.equations)
    for atom, value in a.bindings:
        equations[atom] = TRUE if value else FALSE
    return StructuralCausalModel(m.alphabet, m.external, m.internal, equations)


def scm_solutions(
    m: StructuralCausalModel, *, atom_limit: int | None = DEFAULT_ATOM_LIMIT
) -> list[frozenset[str]]:
    """Assignments to all variables that satisfy every structural equation."""
    check_guard(m.alphabet, atom_limit)
    # solved with the same mask encoding a program uses; equations are DNFs
    compiled = LogicProgram(
        m.alphabet,
        tuple(Clause(x, body) for x in m.internal for body in m.equations[x]),
    ).compiled
    internal = m.alphabet.mask(m.internal)
    out = []
    for w in range(1 << len(m.alphabet)):
        value = 0
        for h, pm, nm in compiled:
            if w & pm == pm and not w & nm:
                value |= h
        if value == w & internal:
            out.append(m.alphabet.unmask(w))
    return m.alphabet.sort_worlds(out)
