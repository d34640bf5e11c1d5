"""Hypothesis strategies shared by the test modules."""

from hypothesis import assume
from hypothesis import strategies as st

from htg.core import validate
from htg.errors import ValidationError


@st.composite
def small_params(draw, max_order: int = 200, max_m: int = 9):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(2, max(2, max_order // (2 * m))).map(lambda k: 2 * k))
    ells = [ell for ell in range(n) if (m - ell) % 2 == 0 and not (m == 1 and ell in (1, n - 1))]
    assume(ells)
    return validate(m, n, draw(st.sampled_from(ells)))


def all_params(max_order: int):
    """Every valid triple with m*n <= max_order, in lexicographic order."""
    out = []
    for m in range(1, max_order // 4 + 1):
        for n in range(4, max_order // m + 1, 2):
            for ell in range(n):
                try:
                    out.append(validate(m, n, ell))
                except ValidationError:
                    pass
    return out
