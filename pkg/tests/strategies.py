from hypothesis import strategies as st

from skewlab.skew_poly import SkewPoly


def skew_polys(tower, max_degree=4, min_degree=0, monic=False, nonzero=False):
    @st.composite
    def build(draw):
        m = draw(st.integers(min_degree, max_degree))
        cs = draw(st.lists(st.integers(0, tower.order - 1), min_size=m + 1, max_size=m + 1))
        if monic:
            cs[-1] = 1
        elif nonzero and not any(cs):
            cs[-1] = 1
        return SkewPoly(tower, cs)

    return build()
