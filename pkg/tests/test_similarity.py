from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from parasim.errors import PreconditionError
from parasim.kb_model import Atom, Entity, KnowledgeBase, Literal, is_internally_consistent
from parasim.render import breakdown_from_dict, breakdown_to_dict
from parasim.similarity import (
    EMPTY_TOTAL_S_STAR,
    S_STAR_INFIMUM,
    JaccardMode,
    SimilarityCategory,
    category_of,
    jaccard,
    partition_properties,
    s_star,
    similarity_matrix,
)
from tests.strategies import (
    agreeing_pairs,
    consistent_entities,
    entities,
    entity,
    fresh_atom,
    knowledge_bases,
)


# ============================================================
# Property partition
# ============================================================

class TestPartition:
    def test_simple_contradictions(self, simple_kb):
        part = partition_properties(simple_kb.get('K1'), simple_kb.get('K2'))
        assert part.shared == {Literal.positive('p2')}
        assert part.contradictory == {Atom('p1'), Atom('p3')}
        assert len(part.total) == 5
        assert part.total == entity('T: p1, p2, p3, !p1, !p3').literals

    def test_self_comparison(self):
        k = entity('K: a, !b, c')
        part = partition_properties(k, k)
        assert part.shared == k.literals
        assert part.contradictory == frozenset()
        assert part.total == k.literals

    def test_medical_k1_k2(self, medical_kb):
        part = partition_properties(medical_kb.get('K1'), medical_kb.get('K2'))
        assert part.shared == {Literal.positive('fievre')}
        assert part.contradictory == {Atom('toux'), Atom('maux_de_tete')}
        assert len(part.total) == 5

    @given(entities('A'), entities('B'))
    def test_partition_invariants(self, k1, k2):
        part = partition_properties(k1, k2)
        assert part.shared <= part.total
        assert part.total == k1.literals | k2.literals
        for atom in part.contradictory:
            assert Literal(atom) in part.total
            assert Literal.negative(atom.name, *atom.args) in part.total


# ============================================================
# S*
# ============================================================

class TestSStar:
    def test_simple_example(self, simple_kb):
        result = s_star(simple_kb.get('K1'), simple_kb.get('K2'))
        assert result.s_plus == Fraction(1, 5)
        assert result.d_pm == Fraction(2, 5)
        assert result.s_star == Fraction(-1, 5)
        assert result.category is SimilarityCategory.DIVERGENT

    def test_medical_k1_k3(self, medical_kb):
        assert s_star(medical_kb.get('K1'), medical_kb.get('K3')).s_star == Fraction(1, 2)

    def test_empty_pair_is_zero(self):
        result = s_star(Entity('A'), Entity('B'))
        assert result.s_star == EMPTY_TOTAL_S_STAR == 0
        assert result.category is SimilarityCategory.BALANCED

    def test_consistent_self_is_one(self):
        k = entity('K: fievre, toux, !maux_de_tete')
        assert s_star(k, k).s_star == 1

    def test_inconsistent_self_below_one(self):
        k = entity('K: p, !p, q')
        # shared 3, contradictory {p}, total 3
        assert s_star(k, k).s_star == Fraction(2, 3)

    def test_infimum_reached(self):
        assert s_star(entity('A: a'), entity('B: !a')).s_star == S_STAR_INFIMUM

    @pytest.mark.parametrize('value, category', [
        (Fraction(1, 3), SimilarityCategory.SIMILAR),
        (Fraction(0), SimilarityCategory.BALANCED),
        (Fraction(-1, 6), SimilarityCategory.DIVERGENT),
    ])
    def test_category(self, value, category):
        assert category_of(value) is category


class TestSStarProperties:
    @settings(max_examples=1000)
    @given(entities('A'), entities('B'))
    def test_symmetry(self, k1, k2):
        assert s_star(k1, k2).s_star == s_star(k2, k1).s_star

    @settings(max_examples=1000)
    @given(entities('A'), entities('B'))
    def test_bounds(self, k1, k2):
        value = s_star(k1, k2).s_star
        assert -1 <= value <= 1
        assert S_STAR_INFIMUM <= value

    @settings(max_examples=1000)
    @given(consistent_entities())
    def test_reflexive_on_consistent(self, k):
        assert is_internally_consistent(k)
        assert s_star(k, k).s_star == 1

    @settings(max_examples=1000)
    @given(agreeing_pairs())
    def test_degenerates_to_jaccard(self, pair):
        k1, k2 = pair
        result = s_star(k1, k2)
        assume(result.partition.total)
        assert not result.partition.contradictory
        assert result.s_star == jaccard(k1, k2, JaccardMode.ALL_LITERALS)

    @settings(max_examples=1000)
    @given(entities('A'), entities('B'))
    def test_contradiction_monotonicity(self, k1, k2):
        atom = fresh_atom(k1, k2)
        before = s_star(k1, k2).s_star
        after = s_star(
            Entity(k1.id, k1.literals | {Literal(atom)}),
            Entity(k2.id, k2.literals | {Literal.negative(atom.name)}),
        ).s_star
        # at the infimum -1/2 the value cannot drop further
        if before == S_STAR_INFIMUM:
            assert after == S_STAR_INFIMUM
        else:
            assert after < before

    @given(entities('A'), entities('B'))
    def test_denominators(self, k1, k2):
        result = s_star(k1, k2)
        size = len(result.partition.total)
        assert result.s_star == result.s_plus - result.d_pm
        if size:
            assert result.s_plus == Fraction(len(result.partition.shared), size)
            assert result.d_pm == Fraction(len(result.partition.contradictory), size)

    @given(entities('A'), entities('B'))
    def test_structured_round_trip(self, k1, k2):
        result = s_star(k1, k2)
        assert breakdown_from_dict(breakdown_to_dict(result)) == result


# ============================================================
# Jaccard
# ============================================================

class TestJaccard:
    def test_positive_only_simple(self, simple_kb):
        value = jaccard(simple_kb.get('K1'), simple_kb.get('K2'), JaccardMode.POSITIVE_ONLY)
        assert value == Fraction(1, 3)

    def test_all_literals_simple(self, simple_kb):
        value = jaccard(simple_kb.get('K1'), simple_kb.get('K2'), JaccardMode.ALL_LITERALS)
        assert value == Fraction(1, 5)

    @pytest.mark.parametrize('mode', list(JaccardMode))
    def test_identity(self, mode):
        k = entity('K: a, b, !c')
        assert jaccard(k, k, mode) == 1

    @pytest.mark.parametrize('mode', list(JaccardMode))
    def test_empty_union_is_one(self, mode):
        assert jaccard(Entity('A'), Entity('B'), mode) == 1

    def test_positive_only_ignores_negatives(self):
        assert jaccard(entity('A: !x'), entity('B: !x'), JaccardMode.POSITIVE_ONLY) == 1


# ============================================================
# Matrix
# ============================================================

MEDICAL_PAIRS = {
    ('K1', 'K2'): Fraction(-1, 5),
    ('K1', 'K3'): Fraction(1, 2),
    ('K1', 'K4'): Fraction(-1, 6),
    ('K1', 'K5'): Fraction(0),
    ('K2', 'K3'): Fraction(0),
    ('K2', 'K4'): Fraction(-1, 6),
    ('K2', 'K5'): Fraction(0),
    ('K3', 'K4'): Fraction(-1, 6),
    ('K3', 'K5'): Fraction(0),
    ('K4', 'K5'): Fraction(0),
}


class TestMatrix:
    def test_medical_values(self, medical_kb):
        matrix = similarity_matrix(medical_kb)
        assert {(a, b): cell.s_star for a, b, cell in matrix.pairs()} == MEDICAL_PAIRS

    def test_medical_diagonal(self, medical_kb):
        matrix = similarity_matrix(medical_kb)
        assert all(matrix.value(i, i) == 1 for i in medical_kb.ids)

    def test_k1_k5_total_is_six(self, medical_kb):
        # printed with denominator 5 in the worked example; numerator is 0 either way
        cell = similarity_matrix(medical_kb).breakdown('K1', 'K5')
        assert len(cell.partition.total) == 6
        assert cell.s_star == 0

    def test_single_entity(self):
        matrix = similarity_matrix(KnowledgeBase((entity('K: p, q'),)))
        assert len(matrix) == 1
        assert matrix.value('K', 'K') == 1

    def test_empty_kb_rejected(self):
        with pytest.raises(PreconditionError):
            similarity_matrix(KnowledgeBase())

    @given(knowledge_bases())
    def test_symmetric(self, kb):
        matrix = similarity_matrix(kb)
        assert matrix.is_symmetric()
        for i in kb.ids:
            for j in kb.ids:
                assert matrix.value(i, j) == s_star(kb.get(i), kb.get(j)).s_star
