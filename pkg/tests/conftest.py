import os
import random

import pytest


@pytest.fixture
def rng():
    """Seeded generator for the randomized property tests."""
    return random.Random(int(os.environ.get("OCTOWEAK_SEED", "0")))
