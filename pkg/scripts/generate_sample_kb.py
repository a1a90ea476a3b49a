"""
Sample Knowledge-Base Generator
===============================
Generates a random knowledge base for demos and manual testing.

Usage:
    python scripts/generate_sample_kb.py
    python scripts/generate_sample_kb.py --entities 12 --atoms 8 --seed 7
"""

import argparse
import os
import random
import sys


def get_project_root():
    """Get the project root directory (normalized for Windows)."""
    return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))


sys.path.insert(0, get_project_root())

from parasim.kb_io import serialize_kb  # noqa: E402
from parasim.kb_model import Entity, KnowledgeBase, Literal  # noqa: E402

SAMPLE_FOLDER = os.path.normpath(os.path.join(get_project_root(), 'data', 'sample'))

# Random data pools
SYMPTOMS = ['fievre', 'toux', 'fatigue', 'maux_de_tete', 'essoufflement', 'vomissements',
            'douleur_abdominale', 'frissons', 'nausees', 'vertiges', 'eruption', 'courbatures']


def random_entity(entity_id, atoms, max_literals, contradiction_rate):
    """Pick literals over the atom pool; some atoms get both polarities."""
    size = random.randint(0, min(max_literals, len(atoms)))
    literals = set()
    for atom in random.sample(atoms, size):
        if random.random() < contradiction_rate:
            literals.add(Literal.positive(atom))
            literals.add(Literal.negative(atom))
        elif random.random() < 0.5:
            literals.add(Literal.positive(atom))
        else:
            literals.add(Literal.negative(atom))
    return Entity(entity_id, literals)


def generate_kb(entities, atoms, max_literals, contradiction_rate):
    pool = SYMPTOMS[:atoms] if atoms <= len(SYMPTOMS) else [f"p{i}" for i in range(1, atoms + 1)]
    return KnowledgeBase(tuple(
        random_entity(f"K{i}", pool, max_literals, contradiction_rate)
        for i in range(1, entities + 1)
    ))


def main():
    parser = argparse.ArgumentParser(description="Generate a random knowledge base")
    parser.add_argument('--entities', type=int, default=8)
    parser.add_argument('--atoms', type=int, default=8)
    parser.add_argument('--max-literals', type=int, default=6)
    parser.add_argument('--contradiction-rate', type=float, default=0.1)
    parser.add_argument('--seed', type=int, default=42)
    args = parser.parse_args()

    print("=" * 70)
    print("SAMPLE KNOWLEDGE-BASE GENERATOR")
    print("=" * 70)

    random.seed(args.seed)
    kb = generate_kb(args.entities, args.atoms, args.max_literals, args.contradiction_rate)

    os.makedirs(SAMPLE_FOLDER, exist_ok=True)
    filepath = os.path.join(SAMPLE_FOLDER, f"random_{args.seed}.kb")
    with open(filepath, 'w', encoding='utf-8') as f:
        f.write(f"# Random knowledge base (seed {args.seed})\n")
        f.write(serialize_kb(kb))

    print(f"\nEntities: {len(kb)}")
    print(f"Written:  {filepath}")
    print("\nNext step: python -m parasim matrix " + os.path.relpath(filepath, get_project_root()))


if __name__ == "__main__":
    main()
