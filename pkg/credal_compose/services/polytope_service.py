"""
Polytope Service - точные операции с многогранниками (двойное описание через cdd в режиме GMP)

Все функции чистые: входы неизменяемы, результаты канонизированы.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Set, Union

import cdd
import cdd.gmp

from credal_compose.config.settings import settings
from credal_compose.core.exceptions import DimensionMismatch, EmptyPolytope, UnboundedPolytope
from credal_compose.models.polytope import (
    Constraint,
    HalfspaceSystem,
    LinearMap,
    Point,
    VertexSet,
    as_point,
)
from credal_compose.services.cache_service import CacheService

logger = logging.getLogger(__name__)

# Кэш V -> H: VertexSet неизменяем и хешируем
conversion_cache = CacheService(max_size=settings.CACHE_SIZE, enabled=settings.ENABLE_CACHE)


# ---------- cdd plumbing ----------

def _inequality_matrix(system: HalfspaceSystem):
    """
    Матрица cdd вида [b, -A] (b - A·x ≥ 0); равенства идут первыми и попадают в lin_set

    Строка 1 ≥ 0 добавляется всегда, чтобы матрица не была пустой.
    """
    rows: List[List[Fraction]] = []
    for c in system.equalities + system.inequalities:
        rows.append([c.offset] + [-a for a in c.normal])
    rows.append([Fraction(1)] + [Fraction(0)] * system.dim)
    return cdd.gmp.matrix_from_array(
        rows,
        lin_set=frozenset(range(len(system.equalities))),
        rep_type=cdd.RepType.INEQUALITY,
    )


def _generator_matrix(points: Sequence[Point]):
    """Матрица cdd вида [1, v] для вершин"""
    rows = [[Fraction(1)] + list(p) for p in points]
    return cdd.gmp.matrix_from_array(rows, rep_type=cdd.RepType.GENERATOR)


def _system_from_matrix(dim: int, array: Sequence[Sequence[Fraction]], lin_set: Set[int]) -> HalfspaceSystem:
    """Обратное преобразование [b, -A] -> HalfspaceSystem"""
    inequalities = []
    equalities = []
    for index, row in enumerate(array):
        constraint = Constraint(tuple(-Fraction(a) for a in row[1:]), Fraction(row[0]))
        if index in lin_set:
            equalities.append(constraint)
        else:
            inequalities.append(constraint)
    return HalfspaceSystem(dim, tuple(inequalities), tuple(equalities)).normalized()


def _generators(system: HalfspaceSystem):
    """Образующие многогранника, заданного системой"""
    polyhedron = cdd.gmp.polyhedron_from_matrix(_inequality_matrix(system))
    generators = cdd.gmp.copy_generators(polyhedron)
    return generators.array, set(generators.lin_set)


# ---------- conversions ----------

def v_to_h(v: VertexSet) -> HalfspaceSystem:
    """
    Неизбыточное H-представление conv(v.points)

    Для оболочек неполной размерности аффинная оболочка задается равенствами.
    """
    cached = conversion_cache.get(v)
    if cached is not None:
        return cached

    polyhedron = cdd.gmp.polyhedron_from_matrix(_generator_matrix(v.points))
    inequalities = cdd.gmp.copy_inequalities(polyhedron)
    cdd.gmp.matrix_canonicalize(inequalities)
    system = _system_from_matrix(v.dim, inequalities.array, set(inequalities.lin_set))
    logger.debug(
        f"v_to_h: {len(v)} points in dim {v.dim} -> "
        f"{len(system.inequalities)} inequalities, {len(system.equalities)} equalities"
    )
    conversion_cache.set(v, system)
    return system


def h_to_v(h: HalfspaceSystem) -> VertexSet:
    """
    Единственное минимальное V-представление ограниченной системы

    Raises:
        EmptyPolytope: система несовместна
        UnboundedPolytope: есть луч или прямая
    """
    array, lin_set = _generators(h)
    vertices = [row for row in array if row[0] != 0]
    if not vertices:
        raise EmptyPolytope(f"system with {len(h)} constraints in dim {h.dim} is infeasible")
    if lin_set or len(vertices) != len(array):
        raise UnboundedPolytope(f"system with {len(h)} constraints in dim {h.dim} is unbounded")
    points = [tuple(Fraction(x) / Fraction(row[0]) for x in row[1:]) for row in vertices]
    result = VertexSet(h.dim, tuple(points)).sorted()
    logger.debug(f"h_to_v: {len(h)} constraints in dim {h.dim} -> {len(result)} vertices")
    return result


def minimal_v(v: VertexSet) -> VertexSet:
    """
    Только крайние точки conv(v.points), без повторов, в каноническом порядке

    Избыточные образующие удаляются линейным программированием (matrix_canonicalize),
    без перечисления граней.
    """
    matrix = _generator_matrix(list(dict.fromkeys(v.points)))
    cdd.gmp.matrix_canonicalize(matrix)
    points = [tuple(Fraction(x) / Fraction(row[0]) for x in row[1:]) for row in matrix.array]
    result = VertexSet(v.dim, tuple(points)).sorted()
    logger.debug(f"minimal_v: {len(v)} -> {len(result)} points in dim {v.dim}")
    return result


def canonical(v: VertexSet) -> VertexSet:
    """Каноническая форма: минимальное V-представление, отсортированное лексикографически"""
    return minimal_v(v)


def is_feasible(h: HalfspaceSystem) -> bool:
    """Система имеет хотя бы одно решение"""
    array, _ = _generators(h)
    return any(row[0] != 0 for row in array)


def minimal_h(h: HalfspaceSystem) -> HalfspaceSystem:
    """
    То же множество решений без избыточных неравенств

    Неявные равенства переносятся в equalities.

    Raises:
        EmptyPolytope: система несовместна
    """
    if not is_feasible(h):
        raise EmptyPolytope(f"system with {len(h)} constraints in dim {h.dim} is infeasible")
    matrix = _inequality_matrix(h)
    cdd.gmp.matrix_canonicalize(matrix)
    result = _system_from_matrix(h.dim, matrix.array, set(matrix.lin_set))
    logger.debug(f"minimal_h: {len(h)} -> {len(result)} constraints")
    return result


def simplex_system(dim: int) -> HalfspaceSystem:
    """Симплекс распределений: x ≥ 0, Σx = 1"""
    inequalities = tuple(
        Constraint(tuple(Fraction(-1 if j == i else 0) for j in range(dim)), Fraction(0))
        for i in range(dim)
    )
    equality = Constraint(tuple(Fraction(1) for _ in range(dim)), Fraction(1))
    return HalfspaceSystem(dim, inequalities, (equality,))


# ---------- combinations ----------

def intersect(a: HalfspaceSystem, b: HalfspaceSystem) -> HalfspaceSystem:
    """
    Пересечение: объединение списков ограничений и удаление избыточности

    Несовместное пересечение возвращается без сокращения; его обнаружит h_to_v.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot intersect systems of dimensions {a.dim} and {b.dim}")
    combined = HalfspaceSystem(a.dim, a.inequalities + b.inequalities, a.equalities + b.equalities)
    try:
        return minimal_h(combined)
    except EmptyPolytope:
        logger.debug("intersect: empty intersection, returning unreduced system")
        return combined.normalized()


def image(v: VertexSet, m: LinearMap) -> VertexSet:
    """Образ многогранника: минимальная оболочка образов вершин"""
    if m.cols != v.dim:
        raise DimensionMismatch(f"map with {m.cols} columns applied to dimension {v.dim}")
    return minimal_v(VertexSet(m.rows, tuple(m.apply(p) for p in v.points)))


def preimage_constraints(h: HalfspaceSystem, m: LinearMap) -> HalfspaceSystem:
    """Система {x : m·x ∈ set(h)} в исходной размерности m.cols"""
    if m.rows != h.dim:
        raise DimensionMismatch(f"map with {m.rows} rows against a system of dimension {h.dim}")
    return HalfspaceSystem(
        m.cols,
        tuple(Constraint(m.pullback(c.normal), c.offset) for c in h.inequalities),
        tuple(Constraint(m.pullback(c.normal), c.offset) for c in h.equalities),
    ).normalized()


# ---------- predicates ----------

def contains(p: Union[VertexSet, HalfspaceSystem], x: Iterable) -> bool:
    """
    Точная проверка принадлежности

    Для VertexSet проверяются неравенства его H-представления: x ∈ conv(points)
    тогда и только тогда, когда разрешима задача о выпуклых весах.
    """
    x = as_point(x)
    if len(x) != p.dim:
        raise DimensionMismatch(f"point of length {len(x)} against dimension {p.dim}")
    system = v_to_h(p) if isinstance(p, VertexSet) else p
    return system.satisfied_by(x)


def equal(a: VertexSet, b: VertexSet) -> bool:
    """Совпадение оболочек через сравнение канонических форм"""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot compare dimensions {a.dim} and {b.dim}")
    return canonical(a) == canonical(b)


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    """conv(a) ⊆ conv(b)"""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot compare dimensions {a.dim} and {b.dim}")
    return all(contains(b, p) for p in a.points)
