"""
Super-Categories
================
Groups the entities of a knowledge base at a threshold theta.

The theta-graph has an edge between two entities iff S* > theta (strict).
CONNECTED_COMPONENTS returns its connected components, so every cross-block
pair has S* <= theta. STRICT_CLIQUE covers the graph greedily with cliques,
entities taken in knowledge-base order, each joining the first clique it is
adjacent to entirely.

Blocks are listed in canonical order: members sorted by id, blocks sorted
by their smallest member.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

import networkx as nx

from parasim.errors import PreconditionError
from parasim.kb_model import KnowledgeBase
from parasim.similarity import SimilarityMatrix, similarity_matrix

logger = logging.getLogger(__name__)


THETA_MIN = Fraction(-1)
THETA_MAX = Fraction(1)


class ClusterMode(Enum):
    CONNECTED_COMPONENTS = 'connected_components'
    STRICT_CLIQUE = 'strict_clique'


@dataclass(frozen=True)
class SuperCategoryPartition:
    theta: Fraction
    mode: ClusterMode
    blocks: tuple[tuple[str, ...], ...]

    def block_of(self, entity_id: str) -> int:
        for index, block in enumerate(self.blocks):
            if entity_id in block:
                return index
        raise KeyError(entity_id)

    def same_blocks(self, other: SuperCategoryPartition) -> bool:
        return set(map(frozenset, self.blocks)) == set(map(frozenset, other.blocks))


@dataclass(frozen=True)
class Violation:
    id1: str
    id2: str
    value: Fraction


@dataclass(frozen=True)
class DisjunctionReport:
    theta: Fraction
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class HierarchyTrace:
    thresholds: tuple[Fraction, ...]
    partitions: tuple[SuperCategoryPartition, ...]


# ============================================================================
# HELPERS
# ============================================================================

def exact_fraction(value) -> Fraction:
    """Fraction from an int, Fraction, '2/5' or '0.4'; a float is read by its shortest decimal form."""
    if isinstance(value, bool):
        raise TypeError(f"expected a number, got {value!r}")
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        value = value.strip()
    return Fraction(value)


def check_theta(theta) -> Fraction:
    """Convert to an exact Fraction and check -1 <= theta <= 1."""
    try:
        value = exact_fraction(theta)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise PreconditionError(f"theta is not a rational number: {theta!r}") from e
    if not THETA_MIN <= value <= THETA_MAX:
        raise PreconditionError(f"theta must lie in [-1, 1], got {value}")
    return value


def threshold_graph(matrix: SimilarityMatrix, theta: Fraction) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(matrix.ids)
    for id1, id2, cell in matrix.pairs():
        if cell.s_star > theta:
            graph.add_edge(id1, id2, s_star=cell.s_star)
    return graph


def _canonical(blocks: Iterable[Iterable[str]]) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(tuple(sorted(block)) for block in blocks))


def _clique_cover(graph: nx.Graph, ids: tuple[str, ...]) -> list[list[str]]:
    cliques = []
    for entity_id in ids:
        for clique in cliques:
            if all(graph.has_edge(entity_id, member) for member in clique):
                clique.append(entity_id)
                break
        else:
            cliques.append([entity_id])
    return cliques


# ============================================================================
# OPERATIONS
# ============================================================================

def partition_matrix(matrix: SimilarityMatrix, theta,
                     mode: ClusterMode = ClusterMode.CONNECTED_COMPONENTS) -> SuperCategoryPartition:
    """Super-categories from an already computed similarity matrix."""
    theta = check_theta(theta)
    graph = threshold_graph(matrix, theta)

    if mode is ClusterMode.CONNECTED_COMPONENTS:
        blocks = nx.connected_components(graph)
    else:
        blocks = _clique_cover(graph, matrix.ids)

    partition = SuperCategoryPartition(theta=theta, mode=mode, blocks=_canonical(blocks))
    logger.debug("theta=%s %s: %d block(s)", theta, mode.value, len(partition.blocks))
    return partition


def build_supercategories(kb: KnowledgeBase, theta,
                          mode: ClusterMode = ClusterMode.CONNECTED_COMPONENTS,
                          matrix: Optional[SimilarityMatrix] = None) -> SuperCategoryPartition:
    """Super-categories of kb at theta; an empty knowledge base has no blocks."""
    if len(kb) == 0:
        return SuperCategoryPartition(theta=check_theta(theta), mode=mode, blocks=())
    if matrix is None:
        matrix = similarity_matrix(kb)
    return partition_matrix(matrix, theta, mode)


def verify_disjunction(partition: SuperCategoryPartition, kb: KnowledgeBase,
                       matrix: Optional[SimilarityMatrix] = None) -> DisjunctionReport:
    """
    Check that every pair split across blocks has S* <= theta.

    Violations are report content, never exceptions.
    """
    if len(kb) == 0:
        return DisjunctionReport(theta=partition.theta, violations=())
    if matrix is None:
        matrix = similarity_matrix(kb)

    block_index = {}
    for index, block in enumerate(partition.blocks):
        for entity_id in block:
            block_index[entity_id] = index

    violations = tuple(
        Violation(id1, id2, cell.s_star)
        for id1, id2, cell in matrix.pairs()
        if block_index[id1] != block_index[id2] and cell.s_star > partition.theta
    )
    return DisjunctionReport(theta=partition.theta, violations=violations)


def build_hierarchy(kb: KnowledgeBase, thresholds: Iterable,
                    matrix: Optional[SimilarityMatrix] = None) -> HierarchyTrace:
    """One CONNECTED_COMPONENTS partition per threshold; thresholds strictly ascending."""
    values = tuple(check_theta(theta) for theta in thresholds)
    for lower, upper in zip(values, values[1:]):
        if not lower < upper:
            raise PreconditionError(f"Thresholds must be strictly ascending: {lower} then {upper}")

    if not values:
        return HierarchyTrace(thresholds=(), partitions=())

    if matrix is None and len(kb):
        matrix = similarity_matrix(kb)

    partitions = tuple(build_supercategories(kb, theta, matrix=matrix) for theta in values)
    return HierarchyTrace(thresholds=values, partitions=partitions)


def is_refinement(fine: SuperCategoryPartition, coarse: SuperCategoryPartition) -> bool:
    """Every block of `fine` lies inside some block of `coarse`."""
    coarse_blocks = [set(block) for block in coarse.blocks]
    return all(
        any(set(block) <= candidate for candidate in coarse_blocks)
        for block in fine.blocks
    )
