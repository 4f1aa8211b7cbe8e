"""
Модели многогранников - V- и H-представления, линейные отображения
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from credal_compose.core.exceptions import DimensionMismatch
from credal_compose.utils.rational import NumberLike, to_rational

# Точка пространства распределений: кортеж точных координат
Point = Tuple[Fraction, ...]


def as_point(values: Iterable[NumberLike]) -> Point:
    """Кортеж Fraction из любых точных чисел"""
    return tuple(to_rational(v) for v in values)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Скалярное произведение без округлений"""
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class VertexSet:
    """
    V-представление: выпуклая оболочка конечного множества точек

    Дубликаты удаляются при создании, порядок первых вхождений сохраняется.
    """
    dim: int
    points: Tuple[Point, ...]

    def __post_init__(self):
        if self.dim <= 0:
            raise DimensionMismatch(f"dimension must be positive, got {self.dim}")
        points = tuple(dict.fromkeys(as_point(p) for p in self.points))
        if not points:
            raise ValueError("VertexSet needs at least one point")
        for p in points:
            if len(p) != self.dim:
                raise DimensionMismatch(f"point of length {len(p)} in a {self.dim}-dimensional VertexSet")
        object.__setattr__(self, "points", points)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[NumberLike]]) -> "VertexSet":
        """Создание из строк таблицы"""
        points = [as_point(r) for r in rows]
        if not points:
            raise ValueError("VertexSet needs at least one point")
        return cls(dim=len(points[0]), points=tuple(points))

    def sorted(self) -> "VertexSet":
        """Лексикографический порядок по точным координатам"""
        return VertexSet(self.dim, tuple(sorted(self.points)))

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Constraint:
    """Линейное ограничение normal·x ≤ offset (или = offset)"""
    normal: Point
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", as_point(self.normal))
        object.__setattr__(self, "offset", to_rational(self.offset))

    def value(self, x: Sequence[Fraction]) -> Fraction:
        """normal·x"""
        return dot(self.normal, x)

    def is_trivial(self) -> bool:
        """Нулевая нормаль"""
        return all(a == 0 for a in self.normal)

    def normalized(self, equality: bool = False) -> "Constraint":
        """
        Целые взаимно простые коэффициенты

        Неравенства масштабируются только положительным множителем;
        у равенств дополнительно первый ненулевой коэффициент делается положительным.
        Для неравенств положительный первый коэффициент не гарантируется: смена знака
        заменила бы полупространство на противоположное.
        """
        entries = list(self.normal) + [self.offset]
        scale = 1
        for e in entries:
            scale = scale * e.denominator // gcd(scale, e.denominator)
        ints = [int(e * scale) for e in entries]
        divisor = 0
        for i in ints:
            divisor = gcd(divisor, abs(i))
        if divisor == 0:
            return Constraint(tuple(Fraction(0) for _ in self.normal), Fraction(0))
        ints = [i // divisor for i in ints]
        if equality:
            leading = next((i for i in ints[:-1] if i != 0), 0)
            if leading < 0:
                ints = [-i for i in ints]
        return Constraint(tuple(Fraction(i) for i in ints[:-1]), Fraction(ints[-1]))


@dataclass(frozen=True)
class HalfspaceSystem:
    """H-представление: неравенства normal·x ≤ offset и равенства normal·x = offset"""
    dim: int
    inequalities: Tuple[Constraint, ...] = field(default_factory=tuple)
    equalities: Tuple[Constraint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.dim <= 0:
            raise DimensionMismatch(f"dimension must be positive, got {self.dim}")
        object.__setattr__(self, "inequalities", tuple(self.inequalities))
        object.__setattr__(self, "equalities", tuple(self.equalities))
        for c in self.inequalities + self.equalities:
            if len(c.normal) != self.dim:
                raise DimensionMismatch(f"normal of length {len(c.normal)} in a {self.dim}-dimensional system")

    @classmethod
    def from_rows(
        cls,
        dim: int,
        inequalities: Iterable[Tuple[Iterable[NumberLike], NumberLike]] = (),
        equalities: Iterable[Tuple[Iterable[NumberLike], NumberLike]] = (),
    ) -> "HalfspaceSystem":
        """Создание из пар (нормаль, правая часть)"""
        return cls(
            dim=dim,
            inequalities=tuple(Constraint(as_point(a), to_rational(b)) for a, b in inequalities),
            equalities=tuple(Constraint(as_point(a), to_rational(b)) for a, b in equalities),
        )

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        """Точная проверка всех ограничений"""
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} against a {self.dim}-dimensional system")
        return all(c.value(x) <= c.offset for c in self.inequalities) and all(
            c.value(x) == c.offset for c in self.equalities
        )

    def normalized(self) -> "HalfspaceSystem":
        """Нормализованные коэффициенты, отсортированные строки, без тривиальных строк"""
        inequalities = sorted(
            {c.normalized() for c in self.inequalities if not (c.is_trivial() and c.offset >= 0)},
            key=lambda c: (c.normal, c.offset),
        )
        equalities = sorted(
            {c.normalized(equality=True) for c in self.equalities if not (c.is_trivial() and c.offset == 0)},
            key=lambda c: (c.normal, c.offset),
        )
        return HalfspaceSystem(self.dim, tuple(inequalities), tuple(equalities))

    def __len__(self) -> int:
        return len(self.inequalities) + len(self.equalities)


@dataclass(frozen=True)
class LinearMap:
    """Рациональная матрица rows × cols (например, 0-1 матрица маргинализации)"""
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(as_point(r) for r in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        """Единичная матрица"""
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def matrix(self) -> np.ndarray:
        """numpy-массив dtype=object с элементами Fraction"""
        return np.array(self.entries, dtype=object).reshape(self.rows, self.cols)

    def apply(self, x: Sequence[Fraction]) -> Point:
        """m·x"""
        if len(x) != self.cols:
            raise DimensionMismatch(f"map expects dimension {self.cols}, got {len(x)}")
        result = self.matrix.dot(np.array(list(x), dtype=object))
        return tuple(Fraction(v) for v in result)

    def pullback(self, normal: Sequence[Fraction]) -> Point:
        """aᵀ·m: нормаль ограничения в исходном пространстве"""
        if len(normal) != self.rows:
            raise DimensionMismatch(f"map expects a normal of length {self.rows}, got {len(normal)}")
        result = np.array(list(normal), dtype=object).dot(self.matrix)
        return tuple(Fraction(v) for v in result)

    def to_rows(self) -> List[List[Fraction]]:
        """Список строк"""
        return [list(r) for r in self.entries]
