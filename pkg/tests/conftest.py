from fractions import Fraction

import hypothesis.strategies as st

from cliffordlab import Multivector, Signature


def multivectors(sig: Signature, max_terms: int = 4):
    """Strategy for sparse multivectors with small exact coefficients."""
    coeffs = st.builds(
        Fraction,
        st.integers(min_value=-8, max_value=8).filter(bool),
        st.integers(min_value=1, max_value=6),
    )
    return st.dictionaries(
        st.integers(min_value=0, max_value=(1 << sig.n) - 1),
        coeffs,
        max_size=max_terms,
    ).map(lambda terms: Multivector(sig, terms))


def small_signatures(max_dim: int = 4):
    return st.sampled_from(
        [Signature(p, n - p) for n in range(max_dim + 1) for p in range(n + 1)]
    )
