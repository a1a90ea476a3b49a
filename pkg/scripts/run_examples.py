"""
Worked Examples Runner
======================
Runs the parasim CLI over the bundled examples in order:
  1. sim       simple.kb K1 K2        S* with two cross contradictions
  2. compare   simple.kb K1 K2        S* against Jaccard
  3. matrix    medical.kb             all pairwise S*
  4. cluster   medical.kb theta 0.4   super-categories
  5. extract   medical.kb K2          contradictions inside K2
  6. repair    medical.kb K2          forced deletion of !toux, S* against K1
  7. hierarchy medical.kb             partitions across thresholds

Usage:
    python scripts/run_examples.py
"""

import os
import subprocess
import sys


def get_project_root():
    """Get the project root directory."""
    return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))


def run_step(step_number, description, args):
    """Run a single CLI step and return True if successful."""
    print(f"\n{'=' * 70}")
    print(f"STEP {step_number}: {description}")
    print(f"{'=' * 70}\n")

    cmd = [sys.executable, '-m', 'parasim'] + args
    result = subprocess.run(cmd, cwd=get_project_root())

    if result.returncode != 0:
        print(f"\n>>> STEP {step_number} FAILED (exit code {result.returncode})")
        return False

    print(f"\n>>> STEP {step_number} COMPLETED")
    return True


def main():
    simple = os.path.join('data', 'sample', 'simple.kb')
    medical = os.path.join('data', 'sample', 'medical.kb')

    steps = [
        (1, "Similarity of the simple pair", ['sim', simple, 'K1', 'K2']),
        (2, "S* vs Jaccard", ['compare', simple, 'K1', 'K2']),
        (3, "Medical S* matrix", ['matrix', medical]),
        (4, "Super-categories at theta = 0.4", ['cluster', medical, '--theta', '0.4']),
        (5, "Contradictions in K2", ['extract', medical, 'K2']),
        (6, "Forced repair of K2", ['repair', medical, 'K2', '--remove', '!toux', '--against', 'K1']),
        (7, "Hierarchy", ['hierarchy', medical, '--thetas=-1/6,0,2/5']),
    ]

    print("=" * 70)
    print("WORKED EXAMPLES")
    print("=" * 70)

    for step_number, description, args in steps:
        if not run_step(step_number, description, args):
            print(f"\n{'=' * 70}")
            print(f"STOPPED at Step {step_number}")
            print(f"{'=' * 70}")
            sys.exit(1)

    print(f"\n{'=' * 70}")
    print(f"COMPLETE - All {len(steps)} steps finished successfully")
    print(f"{'=' * 70}")
    print("\nDashboard: streamlit run dashboard/app.py")


if __name__ == "__main__":
    main()
