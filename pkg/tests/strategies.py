"""Hypothesis strategies shared by the diagram tests."""

from hypothesis import strategies as st

from qalink.core.services.family_service import braid_closure, pretzel, two_bridge
from qalink.core.domain.dtos.continued_fraction_dto import ContinuedFraction

# Words on three strands that use both generators, so the closure is connected.
braid_words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=2, max_size=7).filter(
    lambda w: {abs(g) for g in w} == {1, 2}
)

braid_diagrams = braid_words.map(braid_closure)

pretzel_diagrams = st.lists(
    st.integers(min_value=-3, max_value=3).filter(bool), min_size=2, max_size=3
).map(lambda ts: pretzel(*ts))

two_bridge_diagrams = st.lists(
    st.integers(min_value=1, max_value=3), min_size=1, max_size=3
).map(lambda ts: two_bridge(ContinuedFraction(terms=ts)))

connected_diagrams = st.one_of(braid_diagrams, pretzel_diagrams, two_bridge_diagrams)
