"""Shared test helpers: a hypothesis strategy for random partitions."""

from hypothesis import strategies as st


@st.composite
def partitions(draw, max_part: int = 12, max_parts: int = 12):
    """Random partition as a weakly decreasing tuple (possibly empty)."""
    parts = draw(
        st.lists(st.integers(min_value=1, max_value=max_part), max_size=max_parts)
    )
    return tuple(sorted(parts, reverse=True))
