"""
Report Rendering
================
Turns results into text in three formats:

    human       banner-style report for the terminal
    tsv         tab-separated tables (pandas)
    structured  versioned JSON; fractions are stored as "n/d" strings

Every number is shown as an exact fraction and, in human and TSV output,
as a decimal rounded half-to-even at the configured precision (-1/6 -> -0.17).
Nothing here depends on the clock or on hash order, so output is
byte-identical between runs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

import pandas as pd

from parasim.contradiction import RepairPlan, RepairPolicy, RepairReport
from parasim.hierarchy import ClusterMode, DisjunctionReport, HierarchyTrace, SuperCategoryPartition
from parasim.kb_model import Atom, Entity, Literal, sorted_literals
from parasim.kb_io import parse_literal
from parasim.similarity import (
    PropertyPartition,
    SimilarityBreakdown,
    SimilarityMatrix,
    category_of,
)

STRUCTURED_VERSION = '1'
BANNER_WIDTH = 70


# ============================================================================
# NUMBERS
# ============================================================================

def format_fraction(value: Fraction) -> str:
    """Always 'n/d', including '1/1' and '0/1'."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, precision: int = 2) -> str:
    """Decimal rendering with round-half-even, computed exactly."""
    scaled = round(Fraction(value) * 10 ** precision)
    sign = '-' if scaled < 0 else ''
    digits = str(abs(scaled)).rjust(precision + 1, '0')
    if precision == 0:
        return sign + digits
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


def format_value(value: Fraction, precision: int = 2) -> str:
    return f"{format_fraction(value)} ({format_decimal(value, precision)})"


def sign_of(value: Fraction) -> str:
    return '+' if value > 0 else '-' if value < 0 else '0'


def parse_fraction_text(text: str) -> Fraction:
    return Fraction(text)


# ============================================================================
# SET NOTATION
# ============================================================================

def format_literals(literals: Iterable[Literal]) -> str:
    return '{' + ', '.join(str(lit) for lit in sorted_literals(literals)) + '}'


def format_atoms(atoms: Iterable[Atom]) -> str:
    return '{' + ', '.join(str(atom) for atom in sorted(atoms)) + '}'


def format_blocks(blocks) -> str:
    return ' | '.join('{' + ','.join(block) + '}' for block in blocks) or '(none)'


def _banner(title):
    return ['=' * BANNER_WIDTH, title, '=' * BANNER_WIDTH]


def _text(lines):
    return '\n'.join(lines) + '\n'


# ============================================================================
# STRUCTURED CODECS
# ============================================================================

def _literal_strings(literals):
    return [str(lit) for lit in sorted_literals(literals)]


def partition_to_dict(partition: PropertyPartition) -> dict:
    return {
        'shared': _literal_strings(partition.shared),
        'contradictory': [str(atom) for atom in sorted(partition.contradictory)],
        'total': _literal_strings(partition.total),
    }


def breakdown_to_dict(breakdown: SimilarityBreakdown) -> dict:
    return {
        'version': STRUCTURED_VERSION,
        's_plus': format_fraction(breakdown.s_plus),
        'd_pm': format_fraction(breakdown.d_pm),
        's_star': format_fraction(breakdown.s_star),
        'category': breakdown.category.value,
        'partition': partition_to_dict(breakdown.partition),
    }


def breakdown_from_dict(data: dict) -> SimilarityBreakdown:
    """Inverse of breakdown_to_dict."""
    part = data['partition']
    partition = PropertyPartition(
        shared=frozenset(parse_literal(text) for text in part['shared']),
        contradictory=frozenset(parse_literal(text).atom for text in part['contradictory']),
        total=frozenset(parse_literal(text) for text in part['total']),
    )
    return SimilarityBreakdown(
        s_plus=parse_fraction_text(data['s_plus']),
        d_pm=parse_fraction_text(data['d_pm']),
        s_star=parse_fraction_text(data['s_star']),
        partition=partition,
    )


def matrix_to_dict(matrix: SimilarityMatrix) -> dict:
    return {
        'version': STRUCTURED_VERSION,
        'ids': list(matrix.ids),
        's_star': [[format_fraction(cell.s_star) for cell in row] for row in matrix.cells],
    }


def plan_to_dict(plan: RepairPlan, entity: Entity) -> dict:
    return {
        'entity_id': plan.entity_id,
        'policy': plan.policy.value,
        'removals': _literal_strings(plan.removals),
        'repaired': _literal_strings(entity.literals - plan.removals),
    }


def repair_report_to_dict(report: RepairReport, entity: Entity) -> dict:
    return {
        'version': STRUCTURED_VERSION,
        'entity_id': report.entity_id,
        'extracted': _literal_strings(report.extracted),
        'contradictory_atoms': [str(atom) for atom in sorted(report.contradictory_atoms)],
        'minimal_size': report.minimal_size,
        'repairable': report.repairable,
        'truncated': report.truncated,
        'plans': [plan_to_dict(plan, entity) for plan in report.plans],
    }


def supercategories_to_dict(partition: SuperCategoryPartition) -> dict:
    return {
        'theta': format_fraction(partition.theta),
        'mode': partition.mode.value,
        'blocks': [list(block) for block in partition.blocks],
    }


def disjunction_to_dict(report: DisjunctionReport) -> dict:
    return {
        'theta': format_fraction(report.theta),
        'ok': report.ok,
        'violations': [
            {'id1': v.id1, 'id2': v.id2, 's_star': format_fraction(v.value)}
            for v in report.violations
        ],
    }


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


# ============================================================================
# TABLES
# ============================================================================

def matrix_frame(matrix: SimilarityMatrix) -> pd.DataFrame:
    """S* matrix as exact 'n/d' strings, rows and columns labelled by id."""
    return pd.DataFrame(
        [[format_fraction(cell.s_star) for cell in row] for row in matrix.cells],
        index=list(matrix.ids),
        columns=list(matrix.ids),
    )


def matrix_cells_frame(matrix: SimilarityMatrix, precision: int = 2) -> pd.DataFrame:
    """Every ordered pair, diagonal included, row by row in knowledge-base order."""
    rows = [
        {'id1': id1, 'id2': id2, 's_star': format_fraction(cell.s_star),
         'decimal': format_decimal(cell.s_star, precision)}
        for id1, row in zip(matrix.ids, matrix.cells)
        for id2, cell in zip(matrix.ids, row)
    ]
    return pd.DataFrame(rows, columns=['id1', 'id2', 's_star', 'decimal'])


def matrix_values_frame(matrix: SimilarityMatrix) -> pd.DataFrame:
    """S* matrix as floats, for charts only."""
    return pd.DataFrame(
        [[float(cell.s_star) for cell in row] for row in matrix.cells],
        index=list(matrix.ids),
        columns=list(matrix.ids),
    )


def pairs_frame(matrix: SimilarityMatrix, precision: int = 2) -> pd.DataFrame:
    rows = []
    for id1, id2, cell in matrix.pairs():
        rows.append({
            'id1': id1,
            'id2': id2,
            'shared': len(cell.partition.shared),
            'contradictory': len(cell.partition.contradictory),
            'total': len(cell.partition.total),
            's_star': format_fraction(cell.s_star),
            'decimal': format_decimal(cell.s_star, precision),
            'category': cell.category.value,
        })
    return pd.DataFrame(rows, columns=['id1', 'id2', 'shared', 'contradictory', 'total',
                                       's_star', 'decimal', 'category'])


def blocks_frame(partition: SuperCategoryPartition, precision: int = 2) -> pd.DataFrame:
    theta, theta_decimal = format_fraction(partition.theta), format_decimal(partition.theta, precision)
    rows = [
        {'theta': theta, 'theta_decimal': theta_decimal, 'block': index + 1, 'entity_id': entity_id}
        for index, block in enumerate(partition.blocks)
        for entity_id in block
    ]
    return pd.DataFrame(rows, columns=['theta', 'theta_decimal', 'block', 'entity_id'])


def to_tsv(frame: pd.DataFrame, index: bool = False) -> str:
    return frame.to_csv(sep='\t', index=index, lineterminator='\n')


# ============================================================================
# COMMAND REPORTS
# ============================================================================

def render_sim(id1, id2, breakdown: SimilarityBreakdown, fmt='human', precision=2) -> str:
    if fmt == 'structured':
        return to_json({**breakdown_to_dict(breakdown), 'command': 'sim', 'id1': id1, 'id2': id2})

    partition = breakdown.partition
    if fmt == 'tsv':
        frame = pd.DataFrame([{
            'id1': id1, 'id2': id2,
            'shared': len(partition.shared),
            'contradictory': len(partition.contradictory),
            'total': len(partition.total),
            's_plus': format_fraction(breakdown.s_plus),
            'd_pm': format_fraction(breakdown.d_pm),
            's_star': format_fraction(breakdown.s_star),
            's_plus_decimal': format_decimal(breakdown.s_plus, precision),
            'd_pm_decimal': format_decimal(breakdown.d_pm, precision),
            's_star_decimal': format_decimal(breakdown.s_star, precision),
        }])
        return to_tsv(frame)

    lines = _banner(f"PARACONSISTENT SIMILARITY {id1} vs {id2}")
    lines += [
        f"  Shared:        {format_literals(partition.shared)}",
        f"  Contradictory: {format_atoms(partition.contradictory)}",
        f"  Total:         {format_literals(partition.total)} ({len(partition.total)})",
        '',
        f"S+ = {format_value(breakdown.s_plus, precision)}",
        f"D+- = {format_value(breakdown.d_pm, precision)}",
        f"S* = {format_value(breakdown.s_star, precision)}",
        f"Reading: {breakdown.category.value}",
    ]
    return _text(lines)


def render_matrix(matrix: SimilarityMatrix, fmt='human', precision=2, title='S* MATRIX') -> str:
    if fmt == 'structured':
        return to_json({**matrix_to_dict(matrix), 'command': 'matrix'})
    if fmt == 'tsv':
        return to_tsv(matrix_cells_frame(matrix, precision))

    lines = _banner(f"{title} ({len(matrix)} entities)")
    lines.append(matrix_frame(matrix).to_string())
    lines.append('')
    lines.append('Pairs:')
    for id1, id2, cell in matrix.pairs():
        lines.append(f"  S*({id1}, {id2}) = {format_value(cell.s_star, precision)}")
    if len(matrix) == 1:
        lines.append('  (none)')
    return _text(lines)


def render_jaccard(id1, id2, value: Fraction, mode, fmt='human', precision=2) -> str:
    if fmt == 'structured':
        return to_json({'version': STRUCTURED_VERSION, 'command': 'jaccard', 'id1': id1,
                        'id2': id2, 'mode': mode.value, 'jaccard': format_fraction(value)})
    if fmt == 'tsv':
        return to_tsv(pd.DataFrame([{'id1': id1, 'id2': id2, 'mode': mode.value,
                                     'jaccard': format_fraction(value),
                                     'decimal': format_decimal(value, precision)}]))
    lines = _banner(f"JACCARD {id1} vs {id2} ({mode.value})")
    lines.append(f"J = {format_value(value, precision)}")
    return _text(lines)


def render_compare(id1, id2, breakdown: SimilarityBreakdown, jaccard_positive: Fraction,
                   jaccard_all: Fraction, fmt='human', precision=2) -> str:
    rows = [
        ('S*', breakdown.s_star),
        ('Jaccard (positive only)', jaccard_positive),
        ('Jaccard (all literals)', jaccard_all),
    ]
    frame = pd.DataFrame(
        [{'measure': name, 'exact': format_fraction(value),
          'decimal': format_decimal(value, precision), 'sign': sign_of(value)}
         for name, value in rows],
        columns=['measure', 'exact', 'decimal', 'sign'],
    )

    if fmt == 'structured':
        return to_json({
            'version': STRUCTURED_VERSION, 'command': 'compare', 'id1': id1, 'id2': id2,
            's_star': format_fraction(breakdown.s_star),
            'jaccard_positive_only': format_fraction(jaccard_positive),
            'jaccard_all_literals': format_fraction(jaccard_all),
        })
    if fmt == 'tsv':
        return to_tsv(frame)

    lines = _banner(f"S* vs JACCARD {id1} vs {id2}")
    lines.append(frame.to_string(index=False))
    lines.append('')
    if sign_of(breakdown.s_star) != sign_of(jaccard_positive):
        lines.append(f"Signs differ: Jaccard reads {category_of(jaccard_positive).value}, "
                     f"S* reads {breakdown.category.value} "
                     f"({len(breakdown.partition.contradictory)} contradictory atom(s) ignored by Jaccard)")
    else:
        lines.append(f"Same sign: both read {breakdown.category.value}")
    return _text(lines)


def render_extract(entity: Entity, report: RepairReport, consistent: bool, fmt='human') -> str:
    if fmt == 'structured':
        data = repair_report_to_dict(report, entity)
        data.pop('plans')
        return to_json({**data, 'command': 'extract', 'consistent': consistent})
    if fmt == 'tsv':
        return to_tsv(pd.DataFrame([{
            'entity_id': entity.id,
            'extracted': ', '.join(_literal_strings(report.extracted)),
            'pairs': report.minimal_size,
            'consistent': consistent,
            'repairable': report.repairable,
        }]))

    lines = _banner(f"CONTRADICTIONS IN {entity.id}")
    lines += [
        f"  Entity:     {format_literals(entity.literals)}",
        f"  E(K):       {format_literals(report.extracted)}",
        f"  Pairs:      {report.minimal_size}",
        f"  Consistent: {'yes' if consistent else 'no'}",
        f"  Repairable: {'yes' if report.repairable else 'no'}",
    ]
    return _text(lines)


def render_repair(entity: Entity, report: RepairReport, fmt='human', precision=2, comparisons=()) -> str:
    """
    Repair plans for one entity.

    comparisons: (other_id, before, after) breakdown triples for --against.
    """
    if fmt == 'structured':
        data = {**repair_report_to_dict(report, entity), 'command': 'repair'}
        if comparisons:
            data['against'] = [
                {'id': other_id, 'before': format_fraction(before.s_star),
                 'after': format_fraction(after.s_star)}
                for other_id, before, after in comparisons
            ]
        return to_json(data)

    if fmt == 'tsv':
        frame = pd.DataFrame(
            [{'plan': index + 1, 'policy': plan.policy.value,
              'removals': ', '.join(_literal_strings(plan.removals)),
              'repaired': ', '.join(_literal_strings(entity.literals - plan.removals))}
             for index, plan in enumerate(report.plans)],
            columns=['plan', 'policy', 'removals', 'repaired'],
        )
        return to_tsv(frame)

    lines = _banner(f"REPAIR {entity.id}")
    lines += [
        f"  Entity:       {format_literals(entity.literals)}",
        f"  E(K):         {format_literals(report.extracted)}",
        f"  Minimal size: {report.minimal_size}",
        f"  Repairable:   {'yes' if report.repairable else 'no'}",
    ]
    if not report.repairable:
        lines.append("  No repair: every literal is involved in a contradiction")

    for index, plan in enumerate(report.plans, 1):
        lines.append('')
        lines.append(f"  Plan {index} ({plan.policy.value}): remove {format_literals(plan.removals)}")
        lines.append(f"    {entity.id}' = {format_literals(entity.literals - plan.removals)}")
        if plan.policy is RepairPolicy.MANUAL and plan.removals - report.extracted:
            lines.append("    note: removes literals outside E(K) (not a minimal repair)")

    if report.truncated:
        lines.append('')
        lines.append(f"  TRUNCATED: showing {len(report.plans)} of {2 ** report.minimal_size} plans")

    for other_id, before, after in comparisons:
        lines.append('')
        lines.append(f"  S*({entity.id}, {other_id})  = {format_value(before.s_star, precision)}")
        lines.append(f"  S*({entity.id}', {other_id}) = {format_value(after.s_star, precision)}")
    return _text(lines)


def render_cluster(partition: SuperCategoryPartition, report: DisjunctionReport,
                   fmt='human', precision=2, repaired=False) -> str:
    if fmt == 'structured':
        return to_json({'version': STRUCTURED_VERSION, 'command': 'cluster', 'repaired': repaired,
                        **supercategories_to_dict(partition),
                        'disjunction': disjunction_to_dict(report)})
    if fmt == 'tsv':
        return to_tsv(blocks_frame(partition, precision))

    title = 'SUPER-CATEGORIES (REPAIRED)' if repaired else 'SUPER-CATEGORIES'
    lines = _banner(f"{title} theta = {format_value(partition.theta, precision)}, {partition.mode.value}")
    lines.append(f"blocks {format_blocks(partition.blocks)}")
    lines.append('')
    if partition.mode is ClusterMode.CONNECTED_COMPONENTS or report.ok:
        lines.append(f"Disjunction check: {len(report.violations)} violation(s)")
    else:
        lines.append(f"Disjunction check: {len(report.violations)} violation(s) (expected with strict cliques)")
    for v in report.violations:
        lines.append(f"  S*({v.id1}, {v.id2}) = {format_value(v.value, precision)} > theta")
    return _text(lines)


def render_hierarchy(trace: HierarchyTrace, fmt='human', precision=2) -> str:
    if fmt == 'structured':
        return to_json({'version': STRUCTURED_VERSION, 'command': 'hierarchy',
                        'levels': [supercategories_to_dict(p) for p in trace.partitions]})
    if fmt == 'tsv':
        rows = [
            {'theta': format_fraction(p.theta), 'theta_decimal': format_decimal(p.theta, precision),
             'block': index + 1, 'entity_id': entity_id}
            for p in trace.partitions
            for index, block in enumerate(p.blocks)
            for entity_id in block
        ]
        return to_tsv(pd.DataFrame(rows, columns=['theta', 'theta_decimal', 'block', 'entity_id']))

    lines = _banner(f"HIERARCHY ({len(trace.thresholds)} thresholds)")
    for partition in trace.partitions:
        lines.append(f"  theta = {format_value(partition.theta, precision)}: "
                     f"{format_blocks(partition.blocks)}")
    if not trace.partitions:
        lines.append('  (no thresholds)')
    return _text(lines)
