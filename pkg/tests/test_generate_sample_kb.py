import random

from parasim.kb_io import parse_kb, serialize_kb
from scripts.generate_sample_kb import generate_kb


def test_seeded_generation_is_reproducible():
    random.seed(7)
    first = generate_kb(6, 5, 4, 0.3)
    random.seed(7)
    assert generate_kb(6, 5, 4, 0.3) == first


def test_generated_kb_parses_back():
    random.seed(42)
    kb = generate_kb(8, 20, 6, 0.2)
    assert kb.ids == tuple(f"K{i}" for i in range(1, 9))
    assert parse_kb(serialize_kb(kb)) == kb
