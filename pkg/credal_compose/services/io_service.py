"""
IO Service - чтение и запись файлов кредальных множеств, точек и трассировки

Формат: JSON в UTF-8, фиксированный порядок ключей, отступ 2, перевод строки в конце.
Точные строки ("p/q") - источник истины; округление только для отображения.
"""
import json
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError

from credal_compose.core.exceptions import EmptyPolytope, ParseError
from credal_compose.models.credal import CredalSet, Scope, Variable
from credal_compose.models.files import (
    ConstraintModel,
    CredalFile,
    PointFile,
    ProjectionRecordModel,
    TraceFile,
    VariableModel,
)
from credal_compose.models.polytope import Constraint, HalfspaceSystem, Point
from credal_compose.services import credal_service, polytope_service
from credal_compose.services.compose_service import CompositionTrace
from credal_compose.utils.rational import format_number, to_rational

logger = logging.getLogger(__name__)

Payload = Union[bytes, str]


@dataclass(frozen=True)
class CredalHRep:
    """H-файл: область и система ограничений"""
    scope: Scope
    system: HalfspaceSystem


# ---------- parsing ----------

def _load_json(data: Payload, model: type) -> BaseModel:
    """JSON -> pydantic-модель; ошибки формата переводятся в ParseError"""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", row=e.lineno, column=e.colno) from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        error = e.errors()[0]
        location = [p for p in error["loc"] if isinstance(p, int)]
        path = ".".join(str(p) for p in error["loc"])
        raise ParseError(
            f"{path}: {error['msg']}",
            row=location[0] if location else None,
            column=location[1] if len(location) > 1 else None,
        ) from e


def _number(text: str, row: Optional[int] = None, column: Optional[int] = None):
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"not an exact number: {text!r}", row=row, column=column) from e


def _scope_of(model: CredalFile) -> Scope:
    variables = {}
    for v in model.variables:
        if v.name in variables:
            raise ParseError(f"variable {v.name} is defined twice")
        if len(set(v.levels)) != len(v.levels) or not v.levels:
            raise ParseError(f"variable {v.name} needs unique, non-empty levels")
        variables[v.name] = Variable(v.name, tuple(v.levels))
    missing = [n for n in model.scope if n not in variables]
    if missing:
        raise ParseError(f"scope mentions undefined variables {missing}")
    if len(set(model.scope)) != len(model.scope):
        raise ParseError(f"scope lists a variable twice: {model.scope}")
    return Scope(tuple(variables[n] for n in model.scope))


def _rows(rows: Sequence[Sequence[str]], width: int) -> List[List]:
    result = []
    for r, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"row has {len(row)} entries, scope has {width} cells", row=r)
        result.append([_number(text, r, c) for c, text in enumerate(row)])
    return result


def parse_credal(data: Payload) -> Union[CredalSet, CredalHRep]:
    """
    Разбор файла кредального множества

    Returns:
        CredalSet для V-файла (канонический), CredalHRep для H-файла

    Raises:
        ParseError: файл не соответствует формату
        InvariantViolation: строка V-файла не является распределением
        EmptyPolytope: файл содержит маркер EMPTY
    """
    model = _load_json(data, CredalFile)
    if model.representation == "EMPTY":
        raise EmptyPolytope("file carries the EMPTY marker")
    scope = _scope_of(model)

    if model.representation == "V":
        if not model.vertices:
            raise ParseError("V-file needs a non-empty 'vertices' list")
        rows = _rows(model.vertices, scope.cell_count)
        m = credal_service.credal_set(scope, rows)
        logger.debug(f"parsed V-file over {list(scope.names)}: {len(rows)} rows, {len(m)} extreme points")
        return m

    if model.constraints is None:
        raise ParseError("H-file needs a 'constraints' list")
    inequalities, equalities = [], []
    for r, c in enumerate(model.constraints):
        if len(c.normal) != scope.cell_count:
            raise ParseError(f"normal has {len(c.normal)} entries, scope has {scope.cell_count} cells", row=r)
        constraint = Constraint(
            tuple(_number(t, r, i) for i, t in enumerate(c.normal)), _number(c.offset, r)
        )
        (equalities if c.relation == "=" else inequalities).append(constraint)
    system = HalfspaceSystem(scope.cell_count, tuple(inequalities), tuple(equalities))
    logger.debug(f"parsed H-file over {list(scope.names)}: {len(system)} constraints")
    return CredalHRep(scope, system)


def load_credal_set(data: Payload) -> CredalSet:
    """
    Кредальное множество из V- или H-файла

    H-файл переводится в вершины; каждая вершина проверяется как распределение.
    """
    parsed = parse_credal(data)
    if isinstance(parsed, CredalSet):
        return parsed
    return CredalSet(parsed.scope, polytope_service.h_to_v(parsed.system))


def parse_point(data: Payload) -> Point:
    """Точка из файла {"coordinates": [...]}"""
    model = _load_json(data, PointFile)
    if not model.coordinates:
        raise ParseError("point needs at least one coordinate")
    return tuple(_number(t, column=i) for i, t in enumerate(model.coordinates))


# ---------- emission ----------

def _dump(model: BaseModel) -> bytes:
    payload = model.model_dump(exclude_none=True)
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _strings(values: Sequence, digits: Optional[int]) -> List[str]:
    return [format_number(v, digits) for v in values]


def _variables(scope: Scope) -> List[VariableModel]:
    return [VariableModel(name=v.name, levels=list(v.levels)) for v in scope.variables]


def _credal_model(m: Optional[CredalSet], digits: Optional[int]) -> CredalFile:
    if m is None:
        return CredalFile(representation="EMPTY")
    return CredalFile(
        variables=_variables(m.scope),
        scope=list(m.scope.names),
        representation="V",
        vertices=[_strings(p, digits) for p in m.hull.points],
    )


def _hrep_model(h: CredalHRep, digits: Optional[int]) -> CredalFile:
    system = h.system.normalized()
    constraints = [
        ConstraintModel(normal=_strings(c.normal, digits), relation=relation, offset=format_number(c.offset, digits))
        for relation, group in (("=", system.equalities), ("<=", system.inequalities))
        for c in group
    ]
    return CredalFile(
        variables=_variables(h.scope),
        scope=list(h.scope.names),
        representation="H",
        constraints=constraints,
    )


def emit_credal(m: Optional[Union[CredalSet, CredalHRep]], digits: Optional[int] = None) -> bytes:
    """
    Файл кредального множества

    Args:
        m: CredalSet (V-файл), CredalHRep (H-файл) или None (маркер EMPTY)
        digits: округление для отображения; None - точные строки "p/q"
    """
    if isinstance(m, CredalHRep):
        return _dump(_hrep_model(m, digits))
    return _dump(_credal_model(m, digits))


def to_hrep(m: CredalSet) -> CredalHRep:
    """H-представление кредального множества для записи в файл"""
    return CredalHRep(m.scope, polytope_service.v_to_h(m.hull))


def emit_point(point: Point, digits: Optional[int] = None) -> bytes:
    """Файл точки"""
    return _dump(PointFile(coordinates=_strings(point, digits)))


def emit_trace(trace: CompositionTrace, digits: Optional[int] = None) -> bytes:
    """Трассировка композиции; пустое ядро записывается маркером EMPTY"""
    model = TraceFile(
        core=_credal_model(trace.core, digits),
        m1_projective=_credal_model(trace.m1_projective, digits),
        m2_projective=_credal_model(trace.m2_projective, digits),
        projective_pairs=[
            [_strings(p1.masses, digits), _strings(p2.masses, digits)]
            for p1, p2 in trace.projective_pairs
        ],
        projection_records=[
            ProjectionRecordModel(
                vertex=_strings(r.vertex.masses, digits),
                target=_strings(r.target.masses, digits),
                rule=r.rule,
            )
            for r in trace.projection_records
        ],
        result=_credal_model(trace.result, digits),
    )
    return _dump(model)

