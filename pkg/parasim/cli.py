"""
parasim Command Line
====================
Paraconsistent similarity, contradiction repair and super-categories for
knowledge-base files.

Usage:
    python -m parasim sim data/sample/simple.kb K1 K2
    python -m parasim matrix data/sample/medical.kb
    python -m parasim jaccard data/sample/simple.kb K1 K2 --mode positive_only
    python -m parasim extract data/sample/medical.kb K2
    python -m parasim repair data/sample/medical.kb K2 --remove '!toux' --against K1
    python -m parasim cluster data/sample/medical.kb --theta 0.4
    python -m parasim hierarchy data/sample/medical.kb --thetas=-1/6,0,0.4
    python -m parasim compare data/sample/simple.kb K1 K2

Common options (any subcommand):
    --format human|tsv|structured   --precision N   --config PATH   --verbose

Exit status: 0 success, 1 usage error, 2 input or data error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from parasim import render
from parasim.config import apply_overrides, load_run_config, parse_fraction
from parasim.contradiction import (
    RepairPolicy,
    RepairReport,
    apply_repair,
    manual_plan,
    minimal_repairs,
    repair_kb,
    xi_rp_matrix,
)
from parasim.errors import ConfigError, ParasimError, UsageError
from parasim.hierarchy import (
    THETA_MAX,
    THETA_MIN,
    build_hierarchy,
    build_supercategories,
    verify_disjunction,
)
from parasim.kb_io import load_kb, parse_literal
from parasim.kb_model import is_internally_consistent
from parasim.logger import setup_logging
from parasim.similarity import JaccardMode, jaccard, s_star, similarity_matrix

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


# ============================================================================
# ARGUMENTS
# ============================================================================

def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=['human', 'tsv', 'structured'],
                        help='Output format (default from config: human)')
    common.add_argument('--precision', dest='decimal_precision', type=int,
                        help='Decimal places for rendered values (default: 2)')
    common.add_argument('--config', help='Run config JSON (default: config/run_config.json)')
    common.add_argument('--verbose', action='store_true', help='Debug logging on stderr')

    parser = ArgumentParser(
        prog='parasim',
        description='Paraconsistent similarity between knowledge entities',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    sub = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    p = sub.add_parser('sim', parents=[common], help='S+, D+- and S* for a pair')
    p.add_argument('file')
    p.add_argument('id1')
    p.add_argument('id2')

    p = sub.add_parser('matrix', parents=[common], help='Full S* matrix')
    p.add_argument('file')
    p.add_argument('--repaired', action='store_true', help='Repair every entity first')
    p.add_argument('--policy', dest='repair_policy', choices=['drop_negative', 'drop_positive'])

    p = sub.add_parser('jaccard', parents=[common], help='Jaccard baseline for a pair')
    p.add_argument('file')
    p.add_argument('id1')
    p.add_argument('id2')
    p.add_argument('--mode', dest='jaccard_mode', choices=[m.value for m in JaccardMode],
                   default='positive_only')

    p = sub.add_parser('extract', parents=[common], help='E(K) and repairability')
    p.add_argument('file')
    p.add_argument('id')
    p.add_argument('--strict', action='store_true', default=None,
                   help='Empty entity counts as irreparable')

    p = sub.add_parser('repair', parents=[common], help='Minimal repairs of an entity')
    p.add_argument('file')
    p.add_argument('id')
    p.add_argument('--policy', dest='repair_policy', choices=['drop_negative', 'drop_positive'])
    p.add_argument('--enumerate', action='store_true', help='List every minimal plan')
    p.add_argument('--limit', dest='enumerate_limit', type=int, help='Cap for --enumerate')
    p.add_argument('--remove', action='append', metavar='LITERAL',
                   help='Remove this literal instead (repeatable, manual plan)')
    p.add_argument('--against', action='append', metavar='ID',
                   help='Also show S* against this entity before and after')
    p.add_argument('--strict', action='store_true', default=None)

    p = sub.add_parser('cluster', parents=[common], help='Super-categories at theta')
    p.add_argument('file')
    p.add_argument('--theta', help='Threshold, decimal or fraction (default: 2/5)')
    p.add_argument('--mode', choices=['connected_components', 'strict_clique'])
    p.add_argument('--repaired', action='store_true', help='Cluster the repaired knowledge base')
    p.add_argument('--policy', dest='repair_policy', choices=['drop_negative', 'drop_positive'])

    p = sub.add_parser('hierarchy', parents=[common], help='Partitions across ascending thresholds')
    p.add_argument('file')
    p.add_argument('--thetas', required=True, help='Comma-separated ascending thresholds')

    p = sub.add_parser('compare', parents=[common], help='S* next to Jaccard for a pair')
    p.add_argument('file')
    p.add_argument('id1')
    p.add_argument('id2')

    return parser


def resolve_config(args):
    """File config (data error if broken), then flags (usage error if broken)."""
    config = load_run_config(args.config)
    overrides = {
        key: getattr(args, key, None)
        for key in ('theta', 'mode', 'repair_policy', 'output_format',
                    'decimal_precision', 'enumerate_limit')
    }
    if getattr(args, 'strict', None):
        overrides['strict_repairability'] = True
    try:
        return apply_overrides(config, overrides)
    except ConfigError as e:
        raise UsageError(str(e)) from e


def parse_thresholds(text):
    try:
        values = [parse_fraction('thetas', part) for part in text.split(',') if part.strip()]
    except ConfigError as e:
        raise UsageError(str(e)) from e
    for lower, upper in zip(values, values[1:]):
        if not lower < upper:
            raise UsageError(f"--thetas must be strictly ascending: {lower} then {upper}")
    for value in values:
        if not THETA_MIN <= value <= THETA_MAX:
            raise UsageError(f"--thetas values must lie in [-1, 1], got {value}")
    return values


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_sim(args, config, kb):
    breakdown = s_star(kb.get(args.id1), kb.get(args.id2))
    return render.render_sim(args.id1, args.id2, breakdown,
                             config.output_format.value, config.decimal_precision)


def cmd_matrix(args, config, kb):
    if args.repaired:
        matrix = xi_rp_matrix(kb, config.repair_policy, config.strict_repairability)
        title = f"REPAIRED S* MATRIX ({config.repair_policy.value})"
    else:
        matrix = similarity_matrix(kb)
        title = 'S* MATRIX'
    return render.render_matrix(matrix, config.output_format.value, config.decimal_precision, title)


def cmd_jaccard(args, config, kb):
    mode = JaccardMode(args.jaccard_mode)
    value = jaccard(kb.get(args.id1), kb.get(args.id2), mode)
    return render.render_jaccard(args.id1, args.id2, value, mode,
                                 config.output_format.value, config.decimal_precision)


def cmd_extract(args, config, kb):
    entity = kb.get(args.id)
    report = minimal_repairs(entity, config.repair_policy, strict=config.strict_repairability)
    return render.render_extract(entity, report, is_internally_consistent(entity),
                                 config.output_format.value)


def cmd_repair(args, config, kb):
    entity = kb.get(args.id)
    others = [kb.get(other_id) for other_id in (args.against or [])]

    if args.remove:
        try:
            removals = [parse_literal(text) for text in args.remove]
        except ParasimError as e:
            raise UsageError(f"--remove: {e}") from e
        plan = manual_plan(entity, removals)
        repaired = apply_repair(entity, plan)
        base = minimal_repairs(entity, config.repair_policy, strict=config.strict_repairability)
        report = RepairReport(
            entity_id=entity.id,
            extracted=base.extracted,
            contradictory_atoms=base.contradictory_atoms,
            minimal_size=base.minimal_size,
            plans=(plan,),
            repairable=base.repairable,
        )
    else:
        policy = RepairPolicy.ENUMERATE if args.enumerate else config.repair_policy
        report = minimal_repairs(entity, policy, config.enumerate_limit, config.strict_repairability)
        repaired = apply_repair(entity, report.plans[0]) if report.plans else entity

    comparisons = [(other.id, s_star(entity, other), s_star(repaired, other)) for other in others]
    return render.render_repair(entity, report, config.output_format.value,
                                config.decimal_precision, comparisons)


def cmd_cluster(args, config, kb):
    if args.repaired:
        kb = repair_kb(kb, config.repair_policy, config.strict_repairability)
    matrix = similarity_matrix(kb) if len(kb) else None
    partition = build_supercategories(kb, config.theta, config.mode, matrix)
    report = verify_disjunction(partition, kb, matrix)
    return render.render_cluster(partition, report, config.output_format.value,
                                 config.decimal_precision, repaired=args.repaired)


def cmd_hierarchy(args, config, kb):
    trace = build_hierarchy(kb, parse_thresholds(args.thetas))
    return render.render_hierarchy(trace, config.output_format.value, config.decimal_precision)


def cmd_compare(args, config, kb):
    k1, k2 = kb.get(args.id1), kb.get(args.id2)
    return render.render_compare(
        args.id1, args.id2, s_star(k1, k2),
        jaccard(k1, k2, JaccardMode.POSITIVE_ONLY),
        jaccard(k1, k2, JaccardMode.ALL_LITERALS),
        config.output_format.value, config.decimal_precision,
    )


COMMANDS = {
    'sim': cmd_sim,
    'matrix': cmd_matrix,
    'jaccard': cmd_jaccard,
    'extract': cmd_extract,
    'repair': cmd_repair,
    'cluster': cmd_cluster,
    'hierarchy': cmd_hierarchy,
    'compare': cmd_compare,
}


# ============================================================================
# MAIN
# ============================================================================

def run_cli(argv=None, stdout=None, stderr=None) -> int:
    """Run one command; rendered output goes to stdout, errors to stderr."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        stderr.write(f"ERROR: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    setup_logging('DEBUG' if args.verbose else None)

    try:
        config = resolve_config(args)
        kb = load_kb(args.file)
        output = COMMANDS[args.command](args, config, kb)
    except UsageError as e:
        stderr.write(f"ERROR: {e}\n")
        return EXIT_USAGE
    except ParasimError as e:
        logger.info("%s failed: %s", args.command, e)
        stderr.write(f"ERROR: {e}\n")
        return EXIT_DATA

    stdout.write(output)
    return EXIT_OK


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
