"""
Исключения предметной области

У каждого класса есть машинно-читаемый code, который CLI печатает в stderr.
"""
from typing import Optional


class CredalError(ValueError):
    """Базовая ошибка библиотеки"""
    code = "CREDAL_ERROR"


class DimensionMismatch(CredalError):
    """Размерности операндов не совпадают"""
    code = "DIMENSION_MISMATCH"


class EmptyPolytope(CredalError):
    """Система ограничений несовместна"""
    code = "EMPTY"


class UnboundedPolytope(CredalError):
    """Система ограничений допускает направление рецессии"""
    code = "UNBOUNDED"


class ScopeMismatch(CredalError):
    """Переменная отсутствует в области или определена иначе"""
    code = "SCOPE_MISMATCH"


class ScopesOverlap(CredalError):
    """Области переменных должны быть непересекающимися"""
    code = "SCOPES_OVERLAP"


class NotAbsolutelyContinuous(CredalError):
    """Вероятностная композиция не определена"""
    code = "NOT_ABSOLUTELY_CONTINUOUS"


class EmptyFiber(EmptyPolytope):
    """Заданный маргинал не достигается в кредальном множестве"""
    code = "EMPTY_FIBER"


class ProjectionError(CredalError):
    """Проекция не прошла точную проверку оптимальности"""
    code = "PROJECTION_FAILED"


class _LocatedError(CredalError):
    """Ошибка с координатами в файле"""
    
    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None):
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.row = row
        self.column = column


class ParseError(_LocatedError):
    """Файл не соответствует формату"""
    code = "PARSE_ERROR"


class InvariantViolation(_LocatedError):
    """Нарушены инварианты распределения (отрицательная масса, сумма != 1)"""
    code = "INVARIANT_VIOLATION"
