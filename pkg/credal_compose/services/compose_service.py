"""
Compose Service - оператор композиции ℳ1 ▷ ℳ2 кредальных множеств

Две группы кандидатов: произведения вершин проективных частей с равными
маргиналами и, для каждой вершины ℳ1, произведения с вершинами слоя ℳ2
над евклидовой проекцией ее маргинала (правило [a]) либо вакуумное
расширение вершины (правило [b]). Результат - выпуклая оболочка кандидатов.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from credal_compose.core.exceptions import EmptyPolytope
from credal_compose.models.credal import CredalSet, Distribution
from credal_compose.models.polytope import Point, VertexSet
from credal_compose.services import credal_service, polytope_service
from credal_compose.services.projection_service import euclidean_project

logger = logging.getLogger(__name__)

RULE_PRODUCT = "a"
RULE_EXTENSION = "b"


@dataclass(frozen=True)
class ProjectionRecord:
    """Вершина P1, проекция Q2 ее маргинала и примененное правило"""
    vertex: Distribution
    target: Distribution
    rule: str


@dataclass
class CompositionTrace:
    """Промежуточные результаты композиции"""
    core: Optional[CredalSet] = None
    m1_projective: Optional[CredalSet] = None
    m2_projective: Optional[CredalSet] = None
    projective_pairs: List[Tuple[Distribution, Distribution]] = field(default_factory=list)
    projection_records: List[ProjectionRecord] = field(default_factory=list)
    result: Optional[CredalSet] = None


def common_marginal_core(m1: CredalSet, m2: CredalSet) -> Optional[CredalSet]:
    """
    ℳ_KL = ℳ1↓K∩L ∩ ℳ2↓K∩L

    Returns:
        Кредальное множество над K∩L или None, если пересечение пусто
    """
    common = m1.scope.intersection(m2.scope)
    first = credal_service.marginalize(m1, common)
    second = credal_service.marginalize(m2, common)
    system = polytope_service.intersect(
        polytope_service.v_to_h(first.hull), polytope_service.v_to_h(second.hull)
    )
    try:
        return CredalSet(common, polytope_service.h_to_v(system))
    except EmptyPolytope:
        logger.debug(f"common marginal core on {list(common.names)} is empty")
        return None


def projective_parts(m1: CredalSet, m2: CredalSet, core: CredalSet) -> Tuple[CredalSet, CredalSet]:
    """ℳi^projective = ℳ_KL↑ ∩ ℳi"""
    return (
        credal_service.restrict_marginal(m1, core),
        credal_service.restrict_marginal(m2, core),
    )


def compose_with_trace(m1: CredalSet, m2: CredalSet) -> Tuple[CredalSet, CompositionTrace]:
    """
    ℳ1 ▷ ℳ2 над K∪L вместе с промежуточными результатами

    Оператор всюду определен; результат канонический.
    """
    union = m1.scope.union(m2.scope)
    common = m1.scope.intersection(m2.scope)
    trace = CompositionTrace()
    candidates: List[Point] = []

    # Шаг 1: пары вершин проективных частей с равными маргиналами
    core = common_marginal_core(m1, m2)
    trace.core = core
    if core is not None:
        first, second = projective_parts(m1, m2, core)
        trace.m1_projective, trace.m2_projective = first, second
        second_marginals = [
            (p2, credal_service.marginalize_dist(p2, common)) for p2 in second.vertices
        ]
        for p1 in first.vertices:
            p1_marginal = credal_service.marginalize_dist(p1, common)
            for p2, p2_marginal in second_marginals:
                if p1_marginal == p2_marginal:
                    trace.projective_pairs.append((p1, p2))
                    candidates.append(credal_service.conditional_product(p1, p2).masses)
        logger.debug(f"projective step: {len(trace.projective_pairs)} pairs")

    # Шаг 2: проекция маргинала каждой вершины ℳ1 на ℳ2↓K∩L
    m2_marginal = credal_service.marginalize(m2, common)
    for p1 in m1.vertices:
        p1_marginal = credal_service.marginalize_dist(p1, common)
        q2 = Distribution(common, euclidean_project(p1_marginal.masses, m2_marginal.hull))
        if credal_service.abs_continuous(p1_marginal, q2):
            trace.projection_records.append(ProjectionRecord(p1, q2, RULE_PRODUCT))
            for p2 in credal_service.fiber(m2, q2).vertices:
                candidates.append(credal_service.conditional_product(p1, p2).masses)
        else:
            trace.projection_records.append(ProjectionRecord(p1, q2, RULE_EXTENSION))
            extension = credal_service.vacuous_extend_dist(p1, union)
            candidates.extend(extension.hull.points)

    result = CredalSet(union, polytope_service.canonical(VertexSet(union.cell_count, tuple(candidates))))
    trace.result = result
    rules = [r.rule for r in trace.projection_records]
    logger.info(
        f"Composed {list(m1.scope.names)} ▷ {list(m2.scope.names)}: "
        f"{len(candidates)} candidates, {len(result)} extreme points "
        f"(rule a: {rules.count(RULE_PRODUCT)}, rule b: {rules.count(RULE_EXTENSION)})"
    )
    return result, trace


def compose(m1: CredalSet, m2: CredalSet) -> CredalSet:
    """ℳ1 ▷ ℳ2 над K∪L"""
    result, _ = compose_with_trace(m1, m2)
    return result


def commutes(m1: CredalSet, m2: CredalSet) -> bool:
    """ℳ1 ▷ ℳ2 = ℳ2 ▷ ℳ1 с приведением порядка переменных"""
    forward = compose(m1, m2)
    backward = credal_service.reorder(compose(m2, m1), forward.scope)
    return polytope_service.equal(forward.hull, backward.hull)
