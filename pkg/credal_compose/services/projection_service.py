"""
Projection Service - евклидова проекция точки на многогранник (алгоритм Вулфа, точная арифметика)
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from credal_compose.config.settings import settings
from credal_compose.core.exceptions import DimensionMismatch, ProjectionError
from credal_compose.models.polytope import Point, VertexSet, as_point, dot

logger = logging.getLogger(__name__)


def _solve(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Метод Гаусса над Fraction; вырожденная матрица -> ProjectionError"""
    n = len(rhs)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ProjectionError("singular system in affine minimizer (corral lost affine independence)")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [value / lead for value in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def _affine_minimizer(corral: Sequence[Point]) -> List[Fraction]:
    """
    Веса точки минимальной нормы в аффинной оболочке corral

    Решается система [[0, 1ᵀ], [1, C·Cᵀ]]·[μ, α] = [1, 0].
    """
    k = len(corral)
    matrix = [[Fraction(0)] + [Fraction(1)] * k]
    for p in corral:
        matrix.append([Fraction(1)] + [dot(p, q) for q in corral])
    solution = _solve(matrix, [Fraction(1)] + [Fraction(0)] * k)
    return solution[1:]


def _combine(corral: Sequence[Point], weights: Sequence[Fraction], dim: int) -> Point:
    return tuple(
        sum((w * p[i] for p, w in zip(corral, weights)), Fraction(0))
        for i in range(dim)
    )


def min_norm_point(points: Sequence[Point], max_iterations: Optional[int] = None) -> Point:
    """
    Точка минимальной нормы в conv(points)

    Args:
        points: вершины (начало координат - проецируемая точка)
        max_iterations: предел суммарного числа больших и малых циклов

    Returns:
        Точные координаты минимизатора
    """
    limit = max_iterations or settings.PROJECTION_MAX_ITERATIONS
    dim = len(points[0])
    n = len(points)
    norms = [dot(p, p) for p in points]
    start = min(range(n), key=lambda i: (norms[i], i))
    corral = [start]
    weights = [Fraction(1)]
    x = points[start]
    iterations = 0

    while True:
        xx = dot(x, x)
        if xx == 0:
            break
        scores = [dot(p, x) for p in points]
        j = min(range(n), key=lambda i: (scores[i], i))
        # Условие оптимальности: min_j <p_j, x> >= |x|²
        if scores[j] >= xx:
            break
        if j in corral:
            raise ProjectionError("min-norm-point repeated a corral")
        corral.append(j)
        weights.append(Fraction(0))

        while True:
            iterations += 1
            if iterations > limit:
                raise ProjectionError(f"min-norm-point exceeded {limit} iterations")
            alpha = _affine_minimizer([points[i] for i in corral])
            if all(a > 0 for a in alpha):
                weights = alpha
                break
            # Малый цикл: идем к alpha до первого обнуления веса
            theta = min(
                Fraction(0) if w == 0 else w / (w - a)
                for w, a in zip(weights, alpha)
                if a <= 0
            )
            weights = [theta * a + (1 - theta) * w for w, a in zip(weights, alpha)]
            keep = [i for i, w in enumerate(weights) if w > 0]
            corral = [corral[i] for i in keep]
            weights = [weights[i] for i in keep]
            logger.debug(f"min-norm-point minor cycle: theta={theta}, corral size {len(corral)}")

        x = _combine([points[i] for i in corral], weights, dim)

    logger.debug(f"min-norm-point finished after {iterations} cycles, corral size {len(corral)}")
    return x


def euclidean_project(x: Iterable, v: VertexSet) -> Point:
    """
    Единственный минимизатор ‖x − p‖₂ по p ∈ conv(v.points)

    Результат проверяется точным вариационным неравенством
    ⟨x − p*, q − p*⟩ ≤ 0 для всех вершин q.

    Raises:
        DimensionMismatch: размерности не совпадают
        ProjectionError: проверка оптимальности не пройдена
    """
    x = as_point(x)
    if len(x) != v.dim:
        raise DimensionMismatch(f"point of length {len(x)} against dimension {v.dim}")
    shifted = [tuple(a - b for a, b in zip(p, x)) for p in v.points]
    y = min_norm_point(shifted)
    projection = tuple(a + b for a, b in zip(x, y))
    if not satisfies_variational_inequality(x, projection, v):
        raise ProjectionError("projection failed the exact optimality check")
    return projection


def satisfies_variational_inequality(x: Sequence[Fraction], p: Sequence[Fraction], v: VertexSet) -> bool:
    """⟨x − p, q − p⟩ ≤ 0 для каждой вершины q"""
    residual = [a - b for a, b in zip(x, p)]
    return all(
        dot(residual, [a - b for a, b in zip(q, p)]) <= 0
        for q in v.points
    )


def squared_distance(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """‖a − b‖²"""
    diff = [x - y for x, y in zip(a, b)]
    return dot(diff, diff)
