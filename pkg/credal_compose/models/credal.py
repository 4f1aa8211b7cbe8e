"""
Модели вероятностного уровня - переменные, области, распределения, кредальные множества

Порядок ячеек фиксирован: лексикографический по порядку переменных области,
последняя переменная меняется быстрее всех (x1x2, x1x̄2, x̄1x2, x̄1x̄2).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from credal_compose.core.exceptions import InvariantViolation, ScopeMismatch
from credal_compose.models.polytope import Point, VertexSet, as_point

# Ячейка области: индексы уровней переменных
Cell = Tuple[int, ...]


@dataclass(frozen=True)
class Variable:
    """Конечная переменная с упорядоченными уровнями"""
    name: str
    levels: Tuple[str, ...]

    def __post_init__(self):
        levels = tuple(self.levels)
        if not self.name:
            raise ScopeMismatch("variable name must be non-empty")
        if not levels:
            raise ScopeMismatch(f"variable {self.name} has no levels")
        if len(set(levels)) != len(levels):
            raise ScopeMismatch(f"variable {self.name} has duplicate levels")
        object.__setattr__(self, "levels", levels)

    @property
    def cardinality(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class Scope:
    """Упорядоченная группа переменных X_K"""
    variables: Tuple[Variable, ...] = ()

    def __post_init__(self):
        variables = tuple(self.variables)
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise ScopeMismatch(f"duplicate variable names in scope: {names}")
        object.__setattr__(self, "variables", variables)

    @classmethod
    def of(cls, *variables: Variable) -> "Scope":
        return cls(tuple(variables))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @property
    def cell_count(self) -> int:
        """|𝕏_K|; для пустой области равно 1"""
        return reduce(lambda acc, v: acc * v.cardinality, self.variables, 1)

    def cells(self) -> List[Cell]:
        """Все ячейки в фиксированном порядке"""
        return list(product(*(range(v.cardinality) for v in self.variables)))

    def cell_labels(self) -> List[str]:
        """Подписи ячеек вида X1=a,X2=b"""
        return [
            ",".join(f"{v.name}={v.levels[i]}" for v, i in zip(self.variables, cell))
            for cell in self.cells()
        ]

    def variable(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name:
                return v
        raise ScopeMismatch(f"variable {name} is not in scope {list(self.names)}")

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.variables)

    def _check_compatible(self, other: "Scope"):
        """Одноименные переменные обязаны иметь одинаковые уровни"""
        mine: Dict[str, Variable] = {v.name: v for v in self.variables}
        for v in other.variables:
            if v.name in mine and mine[v.name] != v:
                raise ScopeMismatch(f"variable {v.name} is defined with different levels")

    def is_subscope(self, other: "Scope") -> bool:
        """Все переменные self есть в other (порядок не важен)"""
        self._check_compatible(other)
        return set(self.names) <= set(other.names)

    def same_variables(self, other: "Scope") -> bool:
        return self.is_subscope(other) and other.is_subscope(self)

    def union(self, other: "Scope") -> "Scope":
        """Переменные self, затем новые переменные other"""
        self._check_compatible(other)
        extra = tuple(v for v in other.variables if v.name not in self.names)
        return Scope(self.variables + extra)

    def intersection(self, other: "Scope") -> "Scope":
        """Общие переменные в порядке self"""
        self._check_compatible(other)
        return Scope(tuple(v for v in self.variables if v.name in other.names))

    def select(self, names: Iterable[str]) -> "Scope":
        """Подобласть с заданным порядком имен"""
        return Scope(tuple(self.variable(n) for n in names))

    def restriction_indices(self, target: "Scope") -> Tuple[int, ...]:
        """
        Для каждой ячейки self - индекс ее ограничения на target

        target может перечислять переменные в любом порядке.
        """
        if not target.is_subscope(self):
            missing = [n for n in target.names if n not in self.names]
            raise ScopeMismatch(f"variables {missing} are not in scope {list(self.names)}")
        positions = [self.names.index(n) for n in target.names]
        strides = []
        stride = 1
        for v in reversed(target.variables):
            strides.append(stride)
            stride *= v.cardinality
        strides.reverse()
        return tuple(
            sum(cell[p] * s for p, s in zip(positions, strides))
            for cell in self.cells()
        )


def check_distribution(masses: Sequence[Fraction], row: Optional[int] = None):
    for column, mass in enumerate(masses):
        if mass < 0:
            raise InvariantViolation(f"negative mass {mass}", row=row, column=column)
    total = sum(masses, Fraction(0))
    if total != 1:
        raise InvariantViolation(f"masses sum to {total}, not 1", row=row)


@dataclass(frozen=True)
class Distribution:
    """Распределение вероятностей на ячейках области"""
    scope: Scope
    masses: Point

    def __post_init__(self):
        masses = as_point(self.masses)
        if len(masses) != self.scope.cell_count:
            raise InvariantViolation(
                f"distribution over {list(self.scope.names)} needs {self.scope.cell_count} masses, got {len(masses)}"
            )
        check_distribution(masses)
        object.__setattr__(self, "masses", masses)

    def __getitem__(self, index: int) -> Fraction:
        return self.masses[index]


@dataclass(frozen=True)
class CredalSet:
    """
    Кредальное множество ℳ(X_K): область и выпуклая оболочка распределений

    Сервисы всегда возвращают hull в канонической форме (минимальной и отсортированной);
    канонизацию выполняет credal_service.credal_set.
    """
    scope: Scope
    hull: VertexSet

    def __post_init__(self):
        if self.hull.dim != self.scope.cell_count:
            raise InvariantViolation(
                f"hull of dimension {self.hull.dim} for scope with {self.scope.cell_count} cells"
            )
        for row, p in enumerate(self.hull.points):
            check_distribution(p, row=row)

    @property
    def vertices(self) -> List[Distribution]:
        return [Distribution(self.scope, p) for p in self.hull.points]

    def is_singleton(self) -> bool:
        return len(self.hull) == 1

    def __len__(self) -> int:
        return len(self.hull)
