import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from knotsym import EMPTY
from knotsym.corpus import LEFT_TREFOIL, TREFOIL, random_corpus, random_walk

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def symbols(max_order=6, min_order=0):
    """Random symbols reached by seeded move walks from ∅ and the trefoils."""
    def build(seed, start, steps):
        s = random_walk(random.Random(seed), start, steps, max_order)
        return s
    return st.builds(
        build,
        st.integers(0, 2**32),
        st.sampled_from([EMPTY, TREFOIL, LEFT_TREFOIL]),
        st.integers(1, 14),
    ).filter(lambda s: s.order >= min_order)


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(seed=7, size=120, max_order=6)
