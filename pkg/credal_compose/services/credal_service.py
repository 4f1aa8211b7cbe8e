"""
Credal Service - маргинализация, расширение, произведения и слои кредальных множеств
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Tuple

from credal_compose.core.exceptions import (
    EmptyFiber,
    EmptyPolytope,
    InvariantViolation,
    NotAbsolutelyContinuous,
    ScopeMismatch,
    ScopesOverlap,
)
from credal_compose.models.credal import CredalSet, Distribution, Scope, check_distribution
from credal_compose.models.polytope import HalfspaceSystem, LinearMap, VertexSet, as_point
from credal_compose.services import polytope_service

logger = logging.getLogger(__name__)


def credal_set(scope: Scope, rows: Iterable[Iterable]) -> CredalSet:
    """
    Кредальное множество из строк таблицы в канонической форме

    Raises:
        InvariantViolation: строка не является распределением
    """
    points = [as_point(r) for r in rows]
    for row, p in enumerate(points):
        if len(p) != scope.cell_count:
            raise InvariantViolation(f"row has {len(p)} masses, scope has {scope.cell_count} cells", row=row)
        check_distribution(p, row=row)
    return CredalSet(scope, polytope_service.canonical(VertexSet(scope.cell_count, tuple(points))))


def singleton(p: Distribution) -> CredalSet:
    """{p} как кредальное множество"""
    return CredalSet(p.scope, VertexSet(p.scope.cell_count, (p.masses,)))


def vacuous(scope: Scope) -> CredalSet:
    """Вакуумное множество: все распределения области"""
    return CredalSet(scope, polytope_service.h_to_v(polytope_service.simplex_system(scope.cell_count)))


def _from_system(scope: Scope, system: HalfspaceSystem) -> CredalSet:
    return CredalSet(scope, polytope_service.h_to_v(system))


# ---------- marginalization ----------

def marginal_map(k: Scope, l: Scope) -> LinearMap:
    """
    0-1 матрица |𝕏_L| × |𝕏_K| суммирования ячеек K по ячейкам L

    Переменные l могут идти в любом порядке; каждый столбец содержит ровно одну единицу.
    """
    targets = k.restriction_indices(l)
    rows = l.cell_count
    entries = [[Fraction(0)] * k.cell_count for _ in range(rows)]
    for column, row in enumerate(targets):
        entries[row][column] = Fraction(1)
    return LinearMap(rows, k.cell_count, tuple(tuple(r) for r in entries))


def _resolve(scope: Scope, target: Scope) -> Scope:
    if not target.is_subscope(scope):
        missing = [n for n in target.names if n not in scope.names]
        raise ScopeMismatch(f"variables {missing} are not in scope {list(scope.names)}")
    return target


def marginalize(m: CredalSet, l: Scope) -> CredalSet:
    """CH{P↓L : P ∈ ext(m)}"""
    _resolve(m.scope, l)
    if l == m.scope:
        return m
    hull = polytope_service.image(m.hull, marginal_map(m.scope, l))
    return CredalSet(l, hull)


def marginalize_dist(p: Distribution, l: Scope) -> Distribution:
    """Маргинальное распределение P↓L"""
    _resolve(p.scope, l)
    return Distribution(l, marginal_map(p.scope, l).apply(p.masses))


def reorder(m: CredalSet, scope: Scope) -> CredalSet:
    """То же множество в другом порядке переменных"""
    if not scope.same_variables(m.scope):
        raise ScopeMismatch(f"cannot reorder {list(m.scope.names)} as {list(scope.names)}")
    return marginalize(m, scope)


# ---------- extension and slicing ----------

def restrict_marginal(m: CredalSet, marginal: CredalSet) -> CredalSet:
    """
    Часть m, чей маргинал лежит в marginal

    H-представление маргинала переносится в пространство m через 0-1 матрицу
    и объединяется с H-представлением m.

    Raises:
        EmptyPolytope: таких распределений нет
    """
    _resolve(m.scope, marginal.scope)
    lifted = polytope_service.preimage_constraints(
        polytope_service.v_to_h(marginal.hull), marginal_map(m.scope, marginal.scope)
    )
    combined = polytope_service.intersect(polytope_service.v_to_h(m.hull), lifted)
    return _from_system(m.scope, combined)


def vacuous_extend(m: CredalSet, k: Scope) -> CredalSet:
    """Максимальное множество над K с маргиналом m: {P : P↓L ∈ m}"""
    _resolve(k, m.scope)
    if k == m.scope:
        return m
    lifted = polytope_service.preimage_constraints(
        polytope_service.v_to_h(m.hull), marginal_map(k, m.scope)
    )
    combined = polytope_service.intersect(lifted, polytope_service.simplex_system(k.cell_count))
    result = _from_system(k, combined)
    logger.debug(f"vacuous_extend {list(m.scope.names)} -> {list(k.names)}: {len(result)} vertices")
    return result


def vacuous_extend_dist(p: Distribution, k: Scope) -> CredalSet:
    """Все крайние точки слоя {P над K : P↓ = p}"""
    return vacuous_extend(singleton(p), k)


def fiber(m: CredalSet, q: Distribution) -> CredalSet:
    """
    {P ∈ m : P↓S = q}

    Raises:
        EmptyFiber: q не лежит в маргинале m
    """
    try:
        return restrict_marginal(m, singleton(q))
    except EmptyPolytope as e:
        raise EmptyFiber(f"marginal {[str(v) for v in q.masses]} is not attained in the credal set") from e


# ---------- predicates ----------

def is_projective(m1: CredalSet, m2: CredalSet) -> bool:
    """
    Маргиналы на общих переменных совпадают

    Предусловие: общие переменные определены в m1 и m2 с одинаковыми уровнями.

    Raises:
        ScopeMismatch: одноименная переменная имеет разные уровни
    """
    common = m1.scope.intersection(m2.scope)
    return polytope_service.equal(marginalize(m1, common).hull, marginalize(m2, common).hull)


def support(p: Distribution) -> Tuple[int, ...]:
    """Индексы ячеек с положительной массой"""
    return tuple(i for i, mass in enumerate(p.masses) if mass > 0)


def abs_continuous(p: Distribution, q: Distribution) -> bool:
    """p ≪ q: q(x) = 0 влечет p(x) = 0"""
    if p.scope != q.scope:
        raise ScopeMismatch(f"scopes {list(p.scope.names)} and {list(q.scope.names)} differ")
    return set(support(p)) <= set(support(q))


def contains(m: CredalSet, p: Distribution) -> bool:
    """p ∈ m"""
    if p.scope != m.scope:
        raise ScopeMismatch(f"scopes {list(p.scope.names)} and {list(m.scope.names)} differ")
    return polytope_service.contains(m.hull, p.masses)


def is_subset(m1: CredalSet, m2: CredalSet) -> bool:
    """m1 ⊆ m2 (порядок переменных приводится к m2)"""
    return polytope_service.is_subset(reorder(m1, m2.scope).hull, m2.hull)


# ---------- products ----------

def conditional_product(p1: Distribution, p2: Distribution) -> Distribution:
    """
    P1·P2 / P2↓K∩L над K∪L (переменные K, затем L∖K)

    Ячейки с нулевым делителем равны 0.

    Raises:
        NotAbsolutelyContinuous: P1↓K∩L не ≪ P2↓K∩L
    """
    union = p1.scope.union(p2.scope)
    common = p1.scope.intersection(p2.scope)
    divisor = marginalize_dist(p2, common)
    if not abs_continuous(marginalize_dist(p1, common), divisor):
        raise NotAbsolutelyContinuous(
            f"marginal of the first distribution on {list(common.names)} is not dominated by the second"
        )
    to_k = union.restriction_indices(p1.scope)
    to_l = union.restriction_indices(p2.scope)
    to_common = union.restriction_indices(common)
    masses: List[Fraction] = []
    for ik, il, ic in zip(to_k, to_l, to_common):
        d = divisor.masses[ic]
        masses.append(Fraction(0) if d == 0 else p1.masses[ik] * p2.masses[il] / d)
    return Distribution(union, tuple(masses))


def strong_product(m1: CredalSet, m2: CredalSet) -> CredalSet:
    """CH{P1·P2 : P1 ∈ ext(m1), P2 ∈ ext(m2)} для непересекающихся областей"""
    if set(m1.scope.names) & set(m2.scope.names):
        raise ScopesOverlap(f"scopes {list(m1.scope.names)} and {list(m2.scope.names)} share variables")
    union = m1.scope.union(m2.scope)
    points = [
        conditional_product(p1, p2).masses
        for p1 in m1.vertices
        for p2 in m2.vertices
    ]
    return CredalSet(union, polytope_service.canonical(VertexSet(union.cell_count, tuple(points))))
