from fractions import Fraction

from hypothesis import strategies as st

from quotientrule.jets import DerivativeJet

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
nonzero_rationals = small_rationals.filter(lambda x: x != 0)


@st.composite
def jets(draw, min_order=0, max_order=8, nonzero_base=True):
    order = draw(st.integers(min_order, max_order))
    head = draw(nonzero_rationals if nonzero_base else small_rationals)
    tail = draw(st.lists(small_rationals, min_size=order, max_size=order))
    return DerivativeJet([head, *tail])


@st.composite
def jet_pairs(draw, max_order=8):
    v = draw(jets(max_order=max_order))
    tail = draw(st.lists(small_rationals, min_size=len(v), max_size=len(v)))
    return DerivativeJet(tail), v
