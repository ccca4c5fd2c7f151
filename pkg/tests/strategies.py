"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from linksgould.ring import FracBi

exps = st.integers(min_value=-6, max_value=6)
coeffs = st.integers(min_value=-5, max_value=5).filter(bool)

laurent_terms = st.dictionaries(st.tuples(exps, exps), coeffs, min_size=0, max_size=5)
laurent = laurent_terms.map(FracBi.from_terms)
nonzero_laurent = laurent.filter(lambda x: not x.is_zero())


@st.composite
def fractions(draw):
    return draw(laurent) / draw(nonzero_laurent)


@st.composite
def braid_words(draw, max_strands=3, max_len=6):
    n = draw(st.integers(min_value=2, max_value=max_strands))
    gens = st.integers(min_value=1, max_value=n - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    return n, tuple(draw(st.lists(gens, min_size=0, max_size=max_len)))
