"""End-to-end walk-throughs on the bundled sample knowledge bases.

simple.kb is a two-entity case with one shared literal and two contradictory
atoms. medical.kb is a five-record diagnostic base: its matrix, grouping at
theta = 2/5, the Jaccard contrast, and a forced repair of one record.
"""

import timeit
from fractions import Fraction

from parasim.contradiction import apply_repair, extract_contradictions, manual_plan
from parasim.hierarchy import build_supercategories, verify_disjunction
from parasim.kb_model import KnowledgeBase, Literal
from parasim.render import format_decimal
from parasim.similarity import JaccardMode, jaccard, s_star, similarity_matrix
from tests.strategies import entity

THETA = Fraction(2, 5)


# ============================================================
# Two entities sharing p2, contradicting on p1 and p3
# ============================================================

class TestSimpleContradiction:
    def test_s_star_is_minus_one_fifth(self, simple_kb):
        assert s_star(simple_kb.get('K1'), simple_kb.get('K2')).s_star == Fraction(-1, 5)

    def test_jaccard_overestimates(self, simple_kb):
        """Positive-only Jaccard sees 1/3 where S* sees divergence."""
        k1, k2 = simple_kb.get('K1'), simple_kb.get('K2')
        assert jaccard(k1, k2, JaccardMode.POSITIVE_ONLY) == Fraction(1, 3)
        assert s_star(k1, k2).s_star < 0


# ============================================================
# Medical records
# ============================================================

class TestMedicalMatrix:
    def test_ten_pairs(self, medical_kb):
        values = [cell.s_star for _, _, cell in similarity_matrix(medical_kb).pairs()]
        assert values == [
            Fraction(-1, 5), Fraction(1, 2), Fraction(-1, 6), Fraction(0),
            Fraction(0), Fraction(-1, 6), Fraction(0),
            Fraction(-1, 6), Fraction(0),
            Fraction(0),
        ]

    def test_rendered_decimals(self, medical_kb):
        rendered = {format_decimal(cell.s_star, 2) for _, _, cell in similarity_matrix(medical_kb).pairs()}
        assert rendered == {'-0.20', '0.50', '-0.17', '0.00'}


class TestMedicalGrouping:
    def test_partition(self, medical_kb):
        partition = build_supercategories(medical_kb, THETA)
        assert partition.blocks == (('K1', 'K3'), ('K2',), ('K4',), ('K5',))

    def test_no_cross_block_pair_above_theta(self, medical_kb):
        partition = build_supercategories(medical_kb, THETA)
        assert verify_disjunction(partition, medical_kb).ok


class TestForcedRepair:
    """Deleting !toux from K2, which holds no internal pair of its own."""

    def test_k2_is_internally_consistent(self, medical_kb):
        assert extract_contradictions(medical_kb.get('K2')) == frozenset()

    def test_repaired_record(self, medical_kb):
        k2 = medical_kb.get('K2')
        repaired = apply_repair(k2, manual_plan(k2, [Literal.negative('toux')]))
        assert repaired == entity('K2: fievre, maux_de_tete')

    def test_similarity_stays_below_theta(self, medical_kb):
        k2 = medical_kb.get('K2')
        repaired = apply_repair(k2, manual_plan(k2, [Literal.negative('toux')]))
        value = s_star(medical_kb.get('K1'), repaired).s_star
        # the maux_de_tete contradiction with K1 survives the deletion
        assert value == 0
        assert value <= THETA

    def test_partition_unchanged(self, medical_kb):
        k2 = medical_kb.get('K2')
        repaired = apply_repair(k2, manual_plan(k2, [Literal.negative('toux')]))
        kb = KnowledgeBase(tuple(repaired if e.id == 'K2' else e for e in medical_kb))
        assert s_star(repaired, kb.get('K3')).s_star == Fraction(1, 4)
        assert build_supercategories(kb, THETA).same_blocks(build_supercategories(medical_kb, THETA))


# ============================================================
# Timing (best of several runs)
# ============================================================

class TestTiming:
    def test_simple_pair_under_one_ms(self, simple_kb):
        k1, k2 = simple_kb.get('K1'), simple_kb.get('K2')
        best = min(timeit.repeat(lambda: s_star(k1, k2), number=1, repeat=20))
        assert best < 0.001

    def test_medical_matrix_under_ten_ms(self, medical_kb):
        best = min(timeit.repeat(lambda: similarity_matrix(medical_kb), number=1, repeat=10))
        assert best < 0.010
