"""
Contradiction Extraction and Repair
===================================
Finds the literals of an entity whose complement is also in the entity,
decides repairability, computes minimal repairs and the repaired
similarity (both entities repaired independently, then compared with S*).

A minimal repair removes exactly one literal from every internal
complementary pair. Which one is chosen is a policy:

    DROP_NEGATIVE  remove the negative literal of every pair (default)
    DROP_POSITIVE  remove the positive literal of every pair
    ENUMERATE      every minimal plan, negative-first, capped
    MANUAL         hand-built plan (any subset of the entity)
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterable, Optional

from parasim.errors import IrreparableEntityError, PreconditionError
from parasim.kb_model import (
    Atom,
    Entity,
    KnowledgeBase,
    Literal,
    Polarity,
    complement,
    is_internally_consistent,
    sorted_literals,
)
from parasim.similarity import SimilarityBreakdown, SimilarityMatrix, s_star, similarity_matrix

if TYPE_CHECKING:
    from parasim.hierarchy import SuperCategoryPartition

logger = logging.getLogger(__name__)


DEFAULT_ENUMERATE_LIMIT = 256

# Largest |E(K)| the exhaustive oracle accepts (2^16 subsets).
BRUTE_FORCE_GUARD = 16


class RepairPolicy(Enum):
    DROP_NEGATIVE = 'drop_negative'
    DROP_POSITIVE = 'drop_positive'
    ENUMERATE = 'enumerate'
    MANUAL = 'manual'


@dataclass(frozen=True)
class RepairPlan:
    entity_id: str
    removals: frozenset[Literal]
    policy: RepairPolicy

    def __post_init__(self):
        object.__setattr__(self, 'removals', frozenset(self.removals))


@dataclass(frozen=True)
class RepairReport:
    entity_id: str
    extracted: frozenset[Literal]
    contradictory_atoms: frozenset[Atom]
    minimal_size: int
    plans: tuple[RepairPlan, ...]
    repairable: bool
    truncated: bool = False


# ============================================================================
# EXTRACTION
# ============================================================================

def extract_contradictions(entity: Entity) -> frozenset[Literal]:
    """E(K): both members of every complementary pair inside the entity."""
    return frozenset(lit for lit in entity.literals if complement(lit) in entity.literals)


def internal_contradictory_atoms(entity: Entity) -> frozenset[Atom]:
    return frozenset(lit.atom for lit in extract_contradictions(entity))


def is_repairable(entity: Entity, strict: bool = False) -> bool:
    """
    Repairable iff E(K) differs from K.

    The empty entity has E(K) = K = {} and is only classed irreparable in
    strict mode; otherwise it counts as consistent and trivially repaired.
    """
    if not entity.literals and not strict:
        return True
    return extract_contradictions(entity) != entity.literals


# ============================================================================
# MINIMAL REPAIR
# ============================================================================

def _pairs(entity: Entity) -> list[tuple[Literal, Literal]]:
    """(negative, positive) literal of every internal pair, atoms in canonical order."""
    return [
        (Literal(atom, Polarity.NEGATIVE), Literal(atom, Polarity.POSITIVE))
        for atom in sorted(internal_contradictory_atoms(entity))
    ]


def minimal_repairs(entity: Entity,
                    policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE,
                    limit: int = DEFAULT_ENUMERATE_LIMIT,
                    strict: bool = False) -> RepairReport:
    """
    Minimal repairs of an entity under a policy.

    minimal_size is the number of internal complementary pairs. ENUMERATE
    yields all 2^c plans (c = pair count) in negative-first lexicographic
    order over the atoms, at most `limit` of them; `truncated` is set when
    the cap cut the list. An irreparable entity gets a report with no plans.
    """
    if policy is RepairPolicy.MANUAL:
        raise PreconditionError("MANUAL plans are built by hand, not computed")
    if limit < 1:
        raise PreconditionError(f"Enumeration limit must be positive, got {limit}")

    extracted = extract_contradictions(entity)
    pairs = _pairs(entity)
    atoms = frozenset(neg.atom for neg, _ in pairs)
    repairable = is_repairable(entity, strict)

    def report(plans, truncated=False):
        return RepairReport(
            entity_id=entity.id,
            extracted=extracted,
            contradictory_atoms=atoms,
            minimal_size=len(pairs),
            plans=tuple(plans),
            repairable=repairable,
            truncated=truncated,
        )

    if not repairable:
        logger.debug("Entity %s is irreparable", entity.id)
        return report([])

    if policy is RepairPolicy.DROP_NEGATIVE:
        return report([RepairPlan(entity.id, [neg for neg, _ in pairs], policy)])

    if policy is RepairPolicy.DROP_POSITIVE:
        return report([RepairPlan(entity.id, [pos for _, pos in pairs], policy)])

    total = 2 ** len(pairs)
    choices = itertools.islice(itertools.product(*pairs), limit)
    plans = [RepairPlan(entity.id, choice, policy) for choice in choices]
    truncated = total > limit
    if truncated:
        logger.warning("Repair enumeration for %s truncated: %d of %d plans", entity.id, limit, total)
    return report(plans, truncated)


def apply_repair(entity: Entity, plan: RepairPlan) -> Entity:
    """K' = K minus the plan's removals."""
    if plan.entity_id != entity.id:
        raise PreconditionError(
            f"Repair plan is for entity '{plan.entity_id}', not '{entity.id}'"
        )
    missing = plan.removals - entity.literals
    if missing:
        listed = ', '.join(str(lit) for lit in sorted_literals(missing))
        raise PreconditionError(f"Removals not in entity '{entity.id}': {listed}")
    return entity.without(plan.removals)


def is_minimal_plan(entity: Entity, plan: RepairPlan) -> bool:
    """The plan repairs the entity and no proper subset of it does."""
    if not is_internally_consistent(apply_repair(entity, plan)):
        return False
    # Consistency is monotone in the removal set: checking every
    # one-literal-smaller subset covers all proper subsets.
    for lit in plan.removals:
        if is_internally_consistent(entity.without(plan.removals - {lit})):
            return False
    return True


def brute_force_minimal_size(entity: Entity, strict: bool = False) -> Optional[int]:
    """
    Smallest R within E(K) with K minus R consistent, by exhaustive search.

    R = K is not admissible when E(K) = K (except for the empty entity
    outside strict mode). Returns None when no admissible R exists.
    """
    extracted = sorted_literals(extract_contradictions(entity))
    if len(extracted) > BRUTE_FORCE_GUARD:
        raise PreconditionError(
            f"|E(K)| = {len(extracted)} exceeds brute-force guard {BRUTE_FORCE_GUARD}"
        )

    everything_contradictory = frozenset(extracted) == entity.literals
    exclude_whole = everything_contradictory and (strict or bool(entity.literals))

    for size in range(len(extracted) + 1):
        for combo in itertools.combinations(extracted, size):
            removal = frozenset(combo)
            if exclude_whole and removal == entity.literals:
                continue
            if is_internally_consistent(entity.without(removal)):
                return size
    return None


# ============================================================================
# REPAIRED SIMILARITY
# ============================================================================

def repair_entity(entity: Entity,
                  policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE,
                  strict: bool = False) -> Entity:
    """Apply the first minimal plan; irreparable entities raise."""
    if policy is RepairPolicy.ENUMERATE:
        # first enumerated plan
        policy = RepairPolicy.DROP_NEGATIVE
    report = minimal_repairs(entity, policy, strict=strict)
    if not report.repairable:
        raise IrreparableEntityError(entity.id)
    return apply_repair(entity, report.plans[0])


def xi_rp(k1: Entity, k2: Entity,
          policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE,
          strict: bool = False) -> SimilarityBreakdown:
    """
    S* of the independently repaired pair.

    Only intra-entity contradictions are repaired; contradictions across
    the pair survive and still count in D+-.
    """
    return s_star(repair_entity(k1, policy, strict), repair_entity(k2, policy, strict))


def repair_kb(kb: KnowledgeBase,
              policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE,
              strict: bool = False) -> KnowledgeBase:
    repaired = KnowledgeBase(tuple(repair_entity(entity, policy, strict) for entity in kb))
    logger.debug("Repaired %d entities with %s", len(kb), policy.value)
    return repaired


def xi_rp_matrix(kb: KnowledgeBase,
                 policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE,
                 strict: bool = False) -> SimilarityMatrix:
    return similarity_matrix(repair_kb(kb, policy, strict))


def check_block_coherence(partition: SuperCategoryPartition,
                          kb: KnowledgeBase,
                          policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE,
                          strict: bool = False) -> list[tuple[int, str]]:
    """
    Repair every member of every block; list (block index, id) of members
    that could not be made consistent. Empty when every block repairs cleanly.
    """
    failures = []
    for index, block in enumerate(partition.blocks):
        for entity_id in block:
            try:
                repaired = repair_entity(kb.get(entity_id), policy, strict)
            except IrreparableEntityError:
                failures.append((index, entity_id))
                continue
            if not is_internally_consistent(repaired):
                failures.append((index, entity_id))
    return failures


def manual_plan(entity: Entity, removals: Iterable[Literal]) -> RepairPlan:
    """Hand-built plan; any subset of the entity is accepted by apply_repair."""
    return RepairPlan(entity.id, removals, RepairPolicy.MANUAL)
