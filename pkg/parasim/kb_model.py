"""
Knowledge-Base Model
====================
Atoms, literals, entities and knowledge bases.

An entity is an identified finite set of ground literals; a knowledge base
is an ordered collection of entities with distinct ids. Everything here is
immutable once built.

Example:
    >>> k = Entity('K1', [Literal.positive('fievre'), Literal.negative('toux')])
    >>> is_internally_consistent(k)
    True
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from parasim.errors import DuplicateEntityError, PreconditionError, UnknownEntityError


# Characters that mark negation in the text format; never part of an atom name.
NEGATION_MARKERS = ('!', '¬')

# Atom names, argument terms and entity ids: one token of the text format.
NAME_PATTERN = re.compile(r"[^\s,()!¬:#@]+")


def check_name(value, what: str) -> str:
    if not isinstance(value, str) or not value:
        raise PreconditionError(f"{what} must be a non-empty string")
    if not NAME_PATTERN.fullmatch(value):
        raise PreconditionError(
            f"{what} '{value}' may not contain whitespace or any of , ( ) ! ¬ : # @"
        )
    return value


# ============================================================================
# ATOMS AND LITERALS
# ============================================================================

class Polarity(Enum):
    POSITIVE = 'positive'
    NEGATIVE = 'negative'

    def flipped(self) -> Polarity:
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


@dataclass(frozen=True, order=True)
class Atom:
    """A ground atom: a name plus an ordered tuple of ground argument terms."""

    name: str
    args: tuple[str, ...] = ()

    def __post_init__(self):
        check_name(self.name, 'Atom name')
        object.__setattr__(self, 'args', tuple(self.args))
        for term in self.args:
            check_name(term, 'Argument term')

    def __str__(self):
        if self.args:
            return f"{self.name}({', '.join(self.args)})"
        return self.name


@dataclass(frozen=True)
class Literal:
    """An atom with a polarity."""

    atom: Atom
    polarity: Polarity = Polarity.POSITIVE

    @classmethod
    def positive(cls, name: str, *args: str) -> Literal:
        return cls(Atom(name, args), Polarity.POSITIVE)

    @classmethod
    def negative(cls, name: str, *args: str) -> Literal:
        return cls(Atom(name, args), Polarity.NEGATIVE)

    @property
    def is_positive(self) -> bool:
        return self.polarity is Polarity.POSITIVE

    def sort_key(self):
        """Canonical order: atom name, then args, positive before negative."""
        return (self.atom.name, self.atom.args, 0 if self.is_positive else 1)

    def __str__(self):
        return str(self.atom) if self.is_positive else f"!{self.atom}"


def complement(literal: Literal) -> Literal:
    """Same atom, flipped polarity."""
    return Literal(literal.atom, literal.polarity.flipped())


def sorted_literals(literals: Iterable[Literal]) -> list[Literal]:
    return sorted(literals, key=Literal.sort_key)


# ============================================================================
# ENTITIES
# ============================================================================

@dataclass(frozen=True)
class Entity:
    """
    One knowledge-base entry: an id and a set of literals.

    Duplicate literals collapse (set semantics), so parsing the same
    literals in any order yields equal entities. The empty entity is allowed.
    """

    id: str
    literals: frozenset[Literal] = field(default_factory=frozenset)

    def __post_init__(self):
        check_name(self.id, 'Entity id')
        object.__setattr__(self, 'literals', frozenset(self.literals))

    def __len__(self):
        return len(self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(sorted_literals(self.literals))

    def __contains__(self, literal):
        return literal in self.literals

    def atoms(self) -> frozenset[Atom]:
        return frozenset(lit.atom for lit in self.literals)

    def positive_atoms(self) -> frozenset[Atom]:
        return frozenset(lit.atom for lit in self.literals if lit.is_positive)

    def without(self, removals: Iterable[Literal]) -> Entity:
        return Entity(self.id, self.literals - frozenset(removals))

    def __str__(self):
        return f"{self.id} = {{{', '.join(str(lit) for lit in self)}}}"


def is_internally_consistent(entity: Entity) -> bool:
    """True iff no atom occurs in the entity with both polarities."""
    return all(complement(lit) not in entity.literals for lit in entity.literals)


# ============================================================================
# KNOWLEDGE BASES
# ============================================================================

@dataclass(frozen=True)
class KnowledgeBase:
    """Ordered entities with pairwise-distinct ids; iteration keeps input order."""

    entities: tuple[Entity, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'entities', tuple(self.entities))
        seen = set()
        for entity in self.entities:
            if entity.id in seen:
                raise DuplicateEntityError(entity.id)
            seen.add(entity.id)

    def __len__(self):
        return len(self.entities)

    def __iter__(self) -> Iterator[Entity]:
        return iter(self.entities)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(entity.id for entity in self.entities)

    def get(self, entity_id: str) -> Entity:
        for entity in self.entities:
            if entity.id == entity_id:
                return entity
        raise UnknownEntityError(entity_id)

    def index_of(self, entity_id: str) -> int:
        for i, entity in enumerate(self.entities):
            if entity.id == entity_id:
                return i
        raise UnknownEntityError(entity_id)
