from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(lo=-20, hi=20, max_den=12):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    )


def polys(max_degree=5):
    return st.lists(rationals(-9, 9, 6), max_size=max_degree + 1)
