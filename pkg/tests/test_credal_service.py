"""
Тесты вероятностного уровня: области, маргинализация, расширение, произведения, слои
"""
from fractions import Fraction

import pytest

from credal_compose.core.exceptions import (
    EmptyFiber,
    InvariantViolation,
    NotAbsolutelyContinuous,
    ScopeMismatch,
    ScopesOverlap,
)
from credal_compose.models.credal import CredalSet, Distribution, Scope, Variable
from credal_compose.models.polytope import VertexSet
from credal_compose.services import credal_service as cs
from credal_compose.services import polytope_service as ps

from helpers import X1, X2, X3, rows, scope
from reference_tables import VACUOUS_UNIFORM_X1X2X3

F = Fraction


def dist(s: Scope, *masses) -> Distribution:
    return Distribution(s, rows(masses)[0])


def hull(*points) -> VertexSet:
    pts = rows(*points)
    return VertexSet(len(pts[0]), tuple(pts)).sorted()


class TestScope:
    def test_cell_order_last_variable_fastest(self):
        assert scope("X1", "X2").cell_labels() == [
            "X1=x1,X2=x2",
            "X1=x1,X2=not_x2",
            "X1=not_x1,X2=x2",
            "X1=not_x1,X2=not_x2",
        ]

    def test_empty_scope_has_one_cell(self):
        assert Scope().cell_count == 1
        assert Scope().cells() == [()]

    def test_union_and_intersection_order(self):
        k, l = scope("X1", "X2"), scope("X2", "X3")
        assert k.union(l).names == ("X1", "X2", "X3")
        assert l.intersection(k).names == ("X2",)

    def test_conflicting_levels(self):
        other = Variable("X2", ("a", "b", "c"))
        with pytest.raises(ScopeMismatch):
            scope("X1", "X2").union(Scope.of(other))

    def test_duplicate_names_and_levels(self):
        with pytest.raises(ScopeMismatch):
            Scope.of(X1, X1)
        with pytest.raises(ScopeMismatch):
            Variable("Y", ("a", "a"))

    def test_single_level_variable_is_legal(self):
        assert Scope.of(Variable("C", ("only",))).cell_count == 1


class TestDistributions:
    def test_invariants(self):
        with pytest.raises(InvariantViolation):
            dist(scope("X1"), "0.5", "0.4")
        with pytest.raises(InvariantViolation):
            dist(scope("X1"), "1.5", "-0.5")
        with pytest.raises(InvariantViolation):
            dist(scope("X1"), 1)

    def test_credal_set_factory_reports_row(self):
        with pytest.raises(InvariantViolation) as info:
            cs.credal_set(scope("X1"), [("0.5", "0.5"), ("0.5", "0.4")])
        assert info.value.row == 1

    def test_credal_set_factory_canonicalizes(self):
        m = cs.credal_set(scope("X2"), [(0.5, 0.5), (0.2, 0.8), ("0.35", "0.65"), (0.2, 0.8)])
        assert m.hull == hull((0.2, 0.8), (0.5, 0.5))

    def test_vacuous(self):
        assert cs.vacuous(scope("X1")).hull == hull((0, 1), (1, 0))
        assert len(cs.vacuous(scope("X1", "X2"))) == 4


class TestMarginalization:
    def test_marginal_map_onto_second_variable(self):
        m = cs.marginal_map(scope("X1", "X2"), scope("X2"))
        assert m.to_rows() == [[1, 0, 1, 0], [0, 1, 0, 1]]

    def test_marginal_map_identity_and_empty(self):
        k = scope("X1", "X2")
        assert cs.marginal_map(k, k).to_rows() == [[int(i == j) for j in range(4)] for i in range(4)]
        assert cs.marginal_map(k, Scope()).to_rows() == [[1, 1, 1, 1]]

    def test_marginal_map_missing_variable(self):
        with pytest.raises(ScopeMismatch):
            cs.marginal_map(scope("X1", "X2"), scope("X3"))

    def test_marginalize_examples(self, ex1, ex2):
        assert cs.marginalize(ex1[0], scope("X2")).hull == hull((0.2, 0.8), (0.5, 0.5))
        assert cs.marginalize(ex2[0], scope("X2")).hull == hull((0.2, 0.8), (0.6, 0.4))

    def test_marginalize_identity(self, ex2):
        assert cs.marginalize(ex2[0], ex2[0].scope) == ex2[0]

    def test_marginalize_dist(self):
        p = dist(scope("X1", "X2"), 0.1, 0.4, 0.1, 0.4)
        assert cs.marginalize_dist(p, scope("X2")).masses == (F(1, 5), F(4, 5))
        q = dist(scope("X2", "X3"), 0.5, 0.5, 0, 0)
        assert cs.marginalize_dist(q, scope("X2")).masses == (F(1), F(0))
        assert cs.marginalize_dist(p, Scope()).masses == (F(1),)

    def test_tower(self, ex2):
        m = cs.vacuous_extend(ex2[0], scope("X1", "X2", "X3"))
        step = cs.marginalize(cs.marginalize(m, scope("X1", "X2")), scope("X2"))
        assert step == cs.marginalize(m, scope("X2"))

    def test_reorder(self, ex2):
        reversed_scope = scope("X3", "X2")
        m = cs.reorder(ex2[1], reversed_scope)
        assert m.scope == reversed_scope
        assert cs.reorder(m, ex2[1].scope) == ex2[1]
        with pytest.raises(ScopeMismatch):
            cs.reorder(ex2[1], scope("X1", "X2"))


class TestExtension:
    def test_identity(self, ex1):
        assert cs.vacuous_extend(ex1[0], ex1[0].scope) == ex1[0]

    def test_point_mass_extension(self):
        m = cs.singleton(dist(scope("X2"), 1, 0))
        assert cs.vacuous_extend(m, scope("X1", "X2")).hull == hull((0, 0, 1, 0), (1, 0, 0, 0))

    def test_uniform_extension(self):
        p = dist(scope("X1", "X2"), 0.25, 0.25, 0.25, 0.25)
        result = cs.vacuous_extend_dist(p, scope("X1", "X2", "X3"))
        assert result.hull == hull(*VACUOUS_UNIFORM_X1X2X3)

    def test_extension_marginal_inverse(self, ex2):
        extended = cs.vacuous_extend(ex2[1], scope("X1", "X2", "X3"))
        assert cs.marginalize(extended, ex2[1].scope) == ex2[1]

    def test_extension_is_maximal(self, ex2):
        extended = cs.vacuous_extend(ex2[0], scope("X1", "X2", "X3"))
        p = dist(scope("X1", "X2", "X3"), 0.1, 0, 0.2, 0.2, 0.05, 0.05, 0.2, 0.2)
        assert cs.contains(ex2[0], cs.marginalize_dist(p, scope("X1", "X2")))
        assert cs.contains(extended, p)

    def test_missing_variable(self, ex2):
        with pytest.raises(ScopeMismatch):
            cs.vacuous_extend(ex2[1], scope("X1", "X2"))


class TestPredicates:
    def test_projective(self, ex1, ex2):
        assert cs.is_projective(*ex1)
        assert not cs.is_projective(*ex2)

    def test_disjoint_scopes_are_projective(self):
        assert cs.is_projective(cs.vacuous(scope("X1")), cs.singleton(dist(scope("X3"), 0.3, 0.7)))

    def test_projective_needs_matching_levels(self):
        relabelled = Scope.of(X1, Variable("X2", ("low", "high")))
        m1 = cs.vacuous(scope("X1", "X2"))
        with pytest.raises(ScopeMismatch):
            cs.is_projective(m1, cs.vacuous(relabelled))

    def test_abs_continuous(self):
        s = scope("X2")
        assert not cs.abs_continuous(dist(s, 0.5, 0.5), dist(s, 1, 0))
        assert cs.abs_continuous(dist(s, 0.5, 0.5), dist(s, 0.5, 0.5))
        assert cs.abs_continuous(dist(s, 0, 1), dist(s, 0.5, 0.5))
        with pytest.raises(ScopeMismatch):
            cs.abs_continuous(dist(s, 0, 1), dist(scope("X1"), 0, 1))

    def test_support(self):
        assert cs.support(dist(scope("X1", "X2"), 0, 0.5, 0, 0.5)) == (1, 3)

    def test_contains_and_subset(self, ex2):
        inner = cs.credal_set(scope("X2"), [(0.3, 0.7), (0.5, 0.5)])
        outer = cs.marginalize(ex2[0], scope("X2"))
        assert cs.is_subset(inner, outer)
        assert not cs.is_subset(outer, inner)
        assert cs.contains(outer, dist(scope("X2"), 0.4, 0.6))
        assert not cs.contains(inner, dist(scope("X2"), 0.25, 0.75))


class TestProducts:
    def test_conditional_product(self):
        p1 = dist(scope("X1", "X2"), 0.15, 0.35, 0.15, 0.35)
        p2 = dist(scope("X2", "X3"), 0, 0.3, 0, 0.7)
        result = cs.conditional_product(p1, p2)
        assert result.scope.names == ("X1", "X2", "X3")
        assert result.masses == rows((0, 0.15, 0, 0.35, 0, 0.15, 0, 0.35))[0]

    def test_conditional_product_marginals(self):
        p1 = dist(scope("X1", "X2"), 0.15, 0.35, 0.15, 0.35)
        p2 = dist(scope("X2", "X3"), 0, 0.3, 0, 0.7)
        result = cs.conditional_product(p1, p2)
        assert cs.marginalize_dist(result, scope("X1", "X2")) == p1
        assert cs.marginalize_dist(result, scope("X2", "X3")) == p2

    def test_independent_product(self):
        result = cs.conditional_product(dist(scope("X1"), 0.5, 0.5), dist(scope("X3"), 1, 0))
        assert result.masses == rows((0.5, 0, 0.5, 0))[0]

    def test_self_product(self):
        p = dist(scope("X1", "X2"), 0.1, 0, 0.4, 0.5)
        assert cs.conditional_product(p, p) == p

    def test_zero_divisor_cells(self):
        p1 = dist(scope("X1", "X2"), 0.5, 0, 0.5, 0)
        p2 = dist(scope("X2", "X3"), 0.2, 0.8, 0, 0)
        assert cs.conditional_product(p1, p2).masses == rows((0.1, 0.4, 0, 0, 0.1, 0.4, 0, 0))[0]

    def test_not_absolutely_continuous(self):
        p1 = dist(scope("X1", "X2"), 0.25, 0.25, 0.25, 0.25)
        p2 = dist(scope("X2", "X3"), 0.5, 0.5, 0, 0)
        with pytest.raises(NotAbsolutelyContinuous):
            cs.conditional_product(p1, p2)

    def test_strong_product_of_singletons(self):
        a = cs.singleton(dist(scope("X1"), 0.2, 0.8))
        b = cs.singleton(dist(scope("X3"), 0.5, 0.5))
        assert cs.strong_product(a, b).hull == hull((0.1, 0.1, 0.4, 0.4))

    def test_strong_product_of_vacuous_sets(self):
        result = cs.strong_product(cs.vacuous(scope("X1")), cs.vacuous(scope("X3")))
        assert result.hull == hull((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))

    def test_strong_product_with_point_mass(self, ex1):
        point = cs.singleton(dist(scope("X3"), 1, 0))
        result = cs.strong_product(ex1[0], point)
        assert len(result) == len(ex1[0])
        assert cs.marginalize(result, ex1[0].scope) == ex1[0]
        for v in result.vertices:
            assert v.masses[1::2] == (0, 0, 0, 0)

    def test_strong_product_marginals(self, ex1):
        m2 = cs.credal_set(scope("X3"), [(0.3, 0.7), (0.9, 0.1)])
        result = cs.strong_product(ex1[0], m2)
        assert cs.marginalize(result, ex1[0].scope) == ex1[0]
        assert cs.marginalize(result, scope("X3")) == m2

    def test_strong_product_overlap(self, ex1):
        with pytest.raises(ScopesOverlap):
            cs.strong_product(*ex1)


class TestFiber:
    def test_fiber_at_lower_marginal(self, ex2):
        q = dist(scope("X2"), 0.3, 0.7)
        assert cs.fiber(ex2[1], q).hull == hull((0, 0.3, 0, 0.7), (0.2, 0.1, 0.4, 0.3))

    def test_fiber_at_upper_marginal(self, ex2):
        q = dist(scope("X2"), 0.5, 0.5)
        assert cs.fiber(ex2[1], q).hull == hull((0.25, 0.25, 0.25, 0.25), (0.5, 0, 0.5, 0))

    def test_fiber_of_singleton(self):
        p = dist(scope("X2", "X3"), 0.1, 0.2, 0.3, 0.4)
        m = cs.singleton(p)
        assert cs.fiber(m, cs.marginalize_dist(p, scope("X2"))) == m

    def test_fiber_soundness(self, ex2):
        q = dist(scope("X2"), 0.4, 0.6)
        result = cs.fiber(ex2[1], q)
        for v in result.vertices:
            assert cs.contains(ex2[1], v)
            assert cs.marginalize_dist(v, scope("X2")) == q

    def test_empty_fiber(self, ex2):
        with pytest.raises(EmptyFiber):
            cs.fiber(ex2[1], dist(scope("X2"), 0.9, 0.1))


def test_credal_set_rejects_wrong_dimension():
    with pytest.raises(InvariantViolation):
        CredalSet(scope("X1"), VertexSet(3, tuple(rows((1, 0, 0)))))


def test_credal_set_vertices_are_distributions(ex2):
    for v in ex2[0].vertices:
        assert isinstance(v, Distribution)
        assert sum(v.masses) == 1
    assert ps.equal(ex2[0].hull, ex2[0].hull)
    assert X2 in ex2[0].scope.variables and X3 in ex2[1].scope.variables
