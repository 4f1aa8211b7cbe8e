"""
Стратегии hypothesis: рациональные точки, распределения, кредальные множества
"""
from fractions import Fraction

from hypothesis import strategies as st

from credal_compose.models.credal import CredalSet, Distribution, Scope
from credal_compose.models.polytope import VertexSet
from credal_compose.services import credal_service

from helpers import scope

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)


@st.composite
def points(draw, dim: int):
    return tuple(draw(st.lists(small_rationals, min_size=dim, max_size=dim)))


@st.composite
def vertex_sets(draw, min_dim: int = 1, max_dim: int = 8, max_points: int = 10):
    dim = draw(st.integers(min_value=min_dim, max_value=max_dim))
    pts = draw(st.lists(points(dim), min_size=1, max_size=max_points))
    return VertexSet(dim, tuple(pts))


@st.composite
def masses(draw, n: int, positive: bool = False):
    """Точное распределение из целых весов 0..10"""
    low = 1 if positive else 0
    weights = draw(
        st.lists(st.integers(min_value=low, max_value=10), min_size=n, max_size=n).filter(lambda w: sum(w) > 0)
    )
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


@st.composite
def distributions(draw, s: Scope, positive: bool = False):
    return Distribution(s, draw(masses(s.cell_count, positive=positive)))


@st.composite
def credal_sets(draw, s: Scope, max_vertices: int = 5):
    rows = draw(st.lists(masses(s.cell_count), min_size=1, max_size=max_vertices))
    return credal_service.credal_set(s, rows)


@st.composite
def overlapping_pairs(draw, max_vertices: int = 5):
    """
    Пары над бинарными X1X2 и L с |K∩L| = 0, 1 или 2

    При |K∩L| = 2 область L совпадает с K; с вероятностью 1/2 второе множество равно первому.
    """
    overlap = draw(st.sampled_from([0, 1, 2]))
    k = scope("X1", "X2")
    l = {0: scope("X3", "X4"), 1: scope("X2", "X3"), 2: scope("X1", "X2")}[overlap]
    m1: CredalSet = draw(credal_sets(k, max_vertices))
    if overlap == 2 and draw(st.booleans()):
        return m1, m1
    return m1, draw(credal_sets(l, max_vertices))
