import hypothesis
from hypothesis import strategies as st

from twodist import graph_from_mask

hypothesis.settings.register_profile(
    "numeric", deadline=None, max_examples=100, derandomize=True
)
hypothesis.settings.load_profile("numeric")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)
