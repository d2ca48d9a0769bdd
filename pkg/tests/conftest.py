import os

from hypothesis import HealthCheck, settings, strategies as st

from declab.ordinal import OrdinalMap

settings.register_profile(
    "default", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", deadline=None, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def ordinal_maps(draw, dom=None, cod=None, max_n=5, min_n=-1):
    """Weakly monotone maps, optionally with fixed domain or codomain."""
    k = draw(st.integers(min_n, max_n)) if cod is None else cod
    if k == -1:
        l = -1
    else:
        l = draw(st.integers(min_n, max_n)) if dom is None else dom
    vals = sorted(draw(st.lists(st.integers(0, max(k, 0)), min_size=l + 1, max_size=l + 1)))
    return OrdinalMap(l, k, tuple(vals))
