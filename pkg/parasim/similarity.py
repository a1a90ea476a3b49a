"""
Paraconsistent Similarity
=========================
Property partition of an entity pair and the measures built on it:

    S+  = |shared| / |total|          (shared literals)
    D+- = |contradictory| / |total|   (atoms with opposite polarities across the pair)
    S*  = S+ - D+-

plus the Jaccard baseline. All values are exact Fractions; decimals only
appear when rendering.

Example:
    >>> k1 = parse_kb('K1: p1, p2, !p3').get('K1')
    >>> k2 = parse_kb('K2: p2, p3, !p1').get('K2')
    >>> s_star(k1, k2).s_star
    Fraction(-1, 5)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator

from parasim.errors import PreconditionError
from parasim.kb_model import Atom, Entity, KnowledgeBase, Literal, complement

logger = logging.getLogger(__name__)


# Conventions for an empty literal universe (no division by zero).
EMPTY_TOTAL_S_STAR = Fraction(0)
EMPTY_UNION_JACCARD = Fraction(1)

# Each contradictory atom puts two literals into total, so S* never drops below this.
S_STAR_INFIMUM = Fraction(-1, 2)


class JaccardMode(Enum):
    POSITIVE_ONLY = 'positive_only'
    ALL_LITERALS = 'all_literals'


class SimilarityCategory(Enum):
    """Reading of the sign of S*."""

    SIMILAR = 'similar'
    BALANCED = 'balanced'
    DIVERGENT = 'divergent'


def category_of(value: Fraction) -> SimilarityCategory:
    if value > 0:
        return SimilarityCategory.SIMILAR
    if value < 0:
        return SimilarityCategory.DIVERGENT
    return SimilarityCategory.BALANCED


# ============================================================================
# PROPERTY PARTITION
# ============================================================================

@dataclass(frozen=True)
class PropertyPartition:
    shared: frozenset[Literal]
    contradictory: frozenset[Atom]
    total: frozenset[Literal]


def partition_properties(k1: Entity, k2: Entity) -> PropertyPartition:
    """
    Split the literals of a pair into shared literals, contradictory atoms
    and the total literal universe.

    An atom is contradictory when it is positive in one entity and negative
    in the other; it is counted once per atom, not once per literal.
    """
    shared = k1.literals & k2.literals
    contradictory = frozenset(
        lit.atom for lit in k1.literals if complement(lit) in k2.literals
    )
    total = k1.literals | k2.literals
    return PropertyPartition(shared=shared, contradictory=contradictory, total=total)


# ============================================================================
# MEASURES
# ============================================================================

@dataclass(frozen=True)
class SimilarityBreakdown:
    s_plus: Fraction
    d_pm: Fraction
    s_star: Fraction
    partition: PropertyPartition

    @property
    def category(self) -> SimilarityCategory:
        return category_of(self.s_star)


def s_star(k1: Entity, k2: Entity) -> SimilarityBreakdown:
    """Paraconsistent similarity S*(k1, k2) with its S+ / D+- components."""
    partition = partition_properties(k1, k2)
    size = len(partition.total)

    if size == 0:
        zero = Fraction(0)
        return SimilarityBreakdown(zero, zero, EMPTY_TOTAL_S_STAR, partition)

    s_plus = Fraction(len(partition.shared), size)
    d_pm = Fraction(len(partition.contradictory), size)
    return SimilarityBreakdown(s_plus, d_pm, s_plus - d_pm, partition)


def jaccard(k1: Entity, k2: Entity, mode: JaccardMode = JaccardMode.ALL_LITERALS) -> Fraction:
    """
    Jaccard baseline |A & B| / |A | B|.

    POSITIVE_ONLY compares the atoms of the positive literals only;
    ALL_LITERALS compares full literal sets. J(empty, empty) = 1.
    """
    if mode is JaccardMode.POSITIVE_ONLY:
        a, b = k1.positive_atoms(), k2.positive_atoms()
    else:
        a, b = k1.literals, k2.literals

    union = a | b
    if not union:
        return EMPTY_UNION_JACCARD
    return Fraction(len(a & b), len(union))


# ============================================================================
# MATRIX
# ============================================================================

@dataclass(frozen=True)
class SimilarityMatrix:
    """Square matrix of breakdowns indexed by entity id, in knowledge-base order."""

    ids: tuple[str, ...]
    cells: tuple[tuple[SimilarityBreakdown, ...], ...]

    def __len__(self):
        return len(self.ids)

    def breakdown(self, id1: str, id2: str) -> SimilarityBreakdown:
        return self.cells[self.ids.index(id1)][self.ids.index(id2)]

    def value(self, id1: str, id2: str) -> Fraction:
        return self.breakdown(id1, id2).s_star

    def pairs(self) -> Iterator[tuple[str, str, SimilarityBreakdown]]:
        """Upper-triangle pairs (i < j) in knowledge-base order."""
        for i, id1 in enumerate(self.ids):
            for j in range(i + 1, len(self.ids)):
                yield id1, self.ids[j], self.cells[i][j]

    def is_symmetric(self) -> bool:
        n = len(self.ids)
        return all(
            self.cells[i][j].s_star == self.cells[j][i].s_star
            for i in range(n) for j in range(n)
        )


def similarity_matrix(kb: KnowledgeBase,
                      measure: Callable[[Entity, Entity], SimilarityBreakdown] = s_star) -> SimilarityMatrix:
    """
    Compute measure(Ki, Kj) for every ordered pair, diagonal included.

    The measure is symmetric, so the lower triangle reuses the upper one.
    """
    if len(kb) == 0:
        raise PreconditionError("Similarity matrix needs at least one entity")

    entities = kb.entities
    n = len(entities)
    rows = [[None] * n for _ in range(n)]

    for i in range(n):
        for j in range(i, n):
            cell = measure(entities[i], entities[j])
            rows[i][j] = cell
            rows[j][i] = cell

    logger.debug("Computed %dx%d similarity matrix", n, n)
    return SimilarityMatrix(ids=kb.ids, cells=tuple(tuple(row) for row in rows))
