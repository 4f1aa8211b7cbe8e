"""
Модели файлов - JSON-схемы кредальных множеств, точек и трассировки композиции
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class FileModel(BaseModel):
    """Базовая модель файла: лишние ключи запрещены"""
    model_config = ConfigDict(extra="forbid")


class VariableModel(FileModel):
    """Переменная и ее уровни"""
    name: str
    levels: List[str]


class ConstraintModel(FileModel):
    """Ограничение normal·x <= offset или normal·x = offset"""
    normal: List[str]
    relation: Literal["<=", "="]
    offset: str


class CredalFile(FileModel):
    """Кредальное множество в V- или H-представлении; EMPTY - явный маркер пустоты"""
    variables: List[VariableModel] = Field(default_factory=list)
    scope: List[str] = Field(default_factory=list)
    representation: Literal["V", "H", "EMPTY"]
    vertices: Optional[List[List[str]]] = None
    constraints: Optional[List[ConstraintModel]] = None


class PointFile(FileModel):
    """Точка для команды project"""
    coordinates: List[str]


class ProjectionRecordModel(FileModel):
    """Запись шага 2 композиции"""
    vertex: List[str]
    target: List[str]
    rule: Literal["a", "b"]


class TraceFile(FileModel):
    """Промежуточные результаты композиции"""
    core: CredalFile
    m1_projective: CredalFile
    m2_projective: CredalFile
    projective_pairs: List[List[List[str]]] = Field(default_factory=list)
    projection_records: List[ProjectionRecordModel] = Field(default_factory=list)
    result: CredalFile
