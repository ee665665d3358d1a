# Recuperación exacta de los parámetros de construcción de un punto de la celda

from fractions import Fraction
from typing import Dict, FrozenSet, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.domino.CellPatterns import cell_pattern, reference_run
from src.domino.ConstructMatrix import ConstructionParams, ConstructionStep
from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.MatrixOperations import x_op, y_op
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation, NotInCellImageError

Pattern = FrozenSet[Tuple[int, ...]]


# Función para verificar que el punto está en la celda: mismo patrón y un solo signo
def check_membership(diagram: ChordDiagram, point: RationalMatrix) -> None:
    if point.k != diagram.k or point.cols != IndexSet.interval(1, diagram.n):
        raise InvalidIndexError(f"Se esperaba una matriz {diagram.k}×{diagram.n}")
    values = point.plueckers()
    pattern = frozenset(index for index, value in values.items() if value != 0)
    if pattern != cell_pattern(diagram):
        raise NotInCellImageError(f"El patrón de Plückers no nulos no es el de la celda de {diagram.to_text()}")
    signs = {value > 0 for value in values.values() if value != 0}
    if len(signs) > 1:
        raise NotInCellImageError("El punto tiene Plückers de los dos signos")


def _undo_pre(current: RationalMatrix, column: int) -> RationalMatrix:
    if any(value != 0 for value in current.column(column)):
        raise NotInCellImageError(f"La columna {column} debería ser nula")
    return current.restrict_cols(current.cols.remove(column))


def _undo_inc(current: RationalMatrix, column: int) -> RationalMatrix:
    pivot = next((r for r in current.rows if current.get(r, column) != 0), None)
    if pivot is None:
        raise NotInCellImageError(f"La columna {column} debería contener un vector unitario")
    entries: Dict[Tuple[int, int], Fraction] = {}
    for r in current.rows:
        if r == pivot:
            continue
        factor = current.get(r, column) / current.get(pivot, column)
        for c in current.cols:
            if c == column:
                continue
            value = current.get(r, c) - factor * current.get(pivot, c)
            entries[(r, c)] = -value if c > column else value
    rows = [r for r in current.rows if r != pivot]
    relabel = {r: position for position, r in enumerate(rows, 1)}
    return RationalMatrix(
        range(1, len(rows) + 1),
        current.cols.remove(column),
        {(relabel[r], c): v for (r, c), v in entries.items()},
    )


def _move(step: ConstructionStep, t: Fraction, matrix: RationalMatrix) -> RationalMatrix:
    return x_op(step.column, t, matrix) if step.kind == "x" else y_op(step.column, t, matrix)


def _undo_move(current: RationalMatrix, step: ConstructionStep, before: Pattern, after: Pattern) -> Tuple[Fraction, RationalMatrix]:
    """
    Toma un I que el paso vuelve no nulo: P_I(op(-s)(M)) es lineal en s y se anula en s = t
    """
    created = sorted(after - before)
    if not created:
        raise InvariantViolation(f"El paso {step!r} no cambia el patrón de Plückers", {"step": repr(step)})
    index = created[0]
    f0 = current.pluecker(index)
    f1 = _move(step, -1, current).pluecker(index)
    if f1 == f0:
        raise NotInCellImageError(f"El paso {step!r} no se puede deshacer en este punto")
    t = -f0 / (f1 - f0)
    if t <= 0:
        raise NotInCellImageError(f"El parámetro {step.param[0]}_{step.param[1]} sale {t}, no positivo")
    return t, _move(step, -t, current)


# Función principal: deshace los pasos del algoritmo y lee cada parámetro
def recover_params(diagram: ChordDiagram, point: RationalMatrix) -> ConstructionParams:
    """
    Recorre los pasos de una ejecución de referencia en orden inverso. pre e inc
    se deshacen directamente; cada x o y se deshace con el parámetro que vuelve
    a anular un Plücker que ese paso había creado.
    @param {ChordDiagram} diagram: Diagrama de la celda
    @param {RationalMatrix} point: Matriz k×n de un punto de la celda
    @return {ConstructionParams}: Los únicos parámetros positivos que lo generan
    """
    check_membership(diagram, point)
    steps, snapshots = reference_run(diagram)
    patterns: Dict[int, Pattern] = {}

    def pattern_at(position: int) -> Pattern:
        if position not in patterns:
            patterns[position] = snapshots[position].nonzero_pattern() if position >= 0 else frozenset({()})
        return patterns[position]

    values: Dict[Tuple[str, int], Fraction] = {}
    current = point
    for position in range(len(steps) - 1, -1, -1):
        step = steps[position]
        if step.kind == "pre":
            current = _undo_pre(current, step.column)
        elif step.kind == "inc":
            current = _undo_inc(current, step.column)
        else:
            value, current = _undo_move(current, step, pattern_at(position - 1), pattern_at(position))
            values[step.param] = value
    return ConstructionParams.from_values(diagram.k, values)
