"""
Вспомогательные функции тестов: переменные, фикстуры, сравнение с округленными таблицами
"""
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence

from credal_compose.models.credal import CredalSet, Scope, Variable
from credal_compose.models.polytope import Point, VertexSet, as_point
from credal_compose.services import io_service

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def binary(name: str) -> Variable:
    """Бинарная переменная с уровнями x и not_x, как в файлах фикстур"""
    level = name.lower()
    return Variable(name, (level, f"not_{level}"))


X1, X2, X3, X4 = (binary(n) for n in ("X1", "X2", "X3", "X4"))


def scope(*names: str) -> Scope:
    variables: Dict[str, Variable] = {v.name: v for v in (X1, X2, X3, X4)}
    return Scope(tuple(variables[n] for n in names))


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_fixture(name: str) -> CredalSet:
    return io_service.load_credal_set(fixture_path(name).read_bytes())


def rows(*values: Sequence) -> List[Point]:
    return [as_point(row) for row in values]


def matches_rounded(v: VertexSet, expected: Sequence[Sequence[str]], tolerance: str = "0.005") -> bool:
    """
    Биекция между вершинами и строками таблицы с допуском по каждой координате

    Паросочетание ищется увеличивающими путями.
    """
    if len(v.points) != len(expected):
        return False
    tol = Fraction(tolerance)
    table = [[Fraction(x) for x in row] for row in expected]
    close = [
        [j for j, row in enumerate(table) if all(abs(a - b) <= tol for a, b in zip(point, row))]
        for point in v.points
    ]
    owner: Dict[int, int] = {}

    def assign(i: int, seen: set) -> bool:
        for j in close[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or assign(owner[j], seen):
                owner[j] = i
                return True
        return False

    return all(assign(i, set()) for i in range(len(v.points)))
