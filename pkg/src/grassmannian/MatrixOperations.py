# Operaciones matriciales que preservan la no negatividad: pre, inc, x, y, iota

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from src.grassmannian.RationalMatrix import Entry, RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError


# Tipo para los parámetros de la inmersión iota (t a la izquierda, s a la derecha)
@dataclass(frozen=True)
class EmbeddingParams:
    t: Tuple[Fraction, ...] = field(default_factory=tuple)
    s: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(Fraction(x) for x in self.t))
        object.__setattr__(self, "s", tuple(Fraction(x) for x in self.s))
        if any(x <= 0 for x in self.t + self.s):
            raise InvalidIndexError("Los parámetros de la inmersión deben ser positivos")


# Función para insertar una columna de ceros
def pre(i: int, matrix: RationalMatrix) -> RationalMatrix:
    """
    pre_i: inserta la columna nula i
    @param {int} i: Índice nuevo de columna
    @param {RationalMatrix} matrix: Matriz original
    @return {RationalMatrix}: Matriz con columnas N ∪ {i}
    """
    if i in matrix.cols:
        raise InvalidIndexError(f"pre_{i}: la columna ya existe")
    return RationalMatrix(matrix.rows, matrix.cols.insert(i), dict(matrix.items()))


# Función para insertar una columna unitaria con una fila nueva
def inc(i: int, j: int, matrix: RationalMatrix) -> RationalMatrix:
    """
    inc_{i;j}: la fila nueva j es el vector unitario en i; se niegan las
    entradas con exactamente una de (fila > j, columna > i)
    @param {int} i: Índice nuevo de columna
    @param {int} j: Índice nuevo de fila
    @param {RationalMatrix} matrix: Matriz original
    @return {RationalMatrix}: Matriz (K ∪ {j}) × (N ∪ {i})
    """
    if i in matrix.cols:
        raise InvalidIndexError(f"inc_{i}: la columna ya existe")
    if j in matrix.rows:
        raise InvalidIndexError(f"inc_{i};{j}: la fila ya existe")
    entries: Dict[Entry, Fraction] = {}
    for (r, c), value in matrix.items():
        entries[(r, c)] = -value if (r > j) != (c > i) else value
    entries[(j, i)] = Fraction(1)
    return RationalMatrix(matrix.rows.insert(j), matrix.cols.insert(i), entries)


# Función para sumar a una columna un múltiplo de otra
def _add_column_multiple(matrix: RationalMatrix, target: int, source: int, factor: Fraction) -> RationalMatrix:
    if factor == 0:
        return matrix
    updates = {
        (r, target): matrix.get(r, target) + factor * matrix.get(r, source)
        for r in matrix.rows
        if matrix.get(r, source) != 0
    }
    return matrix.with_entries(updates)


# Función para obtener el signo de desborde (-1)^(k-1)
def _overflow_sign(matrix: RationalMatrix, i: int) -> int:
    return (-1) ** (matrix.k - 1) if i == matrix.cols.max and matrix.k > 0 else 1


# Función para aplicar x_i(t): la columna i⊕1 gana t veces la columna i
def x_op(i: int, t: Fraction | int, matrix: RationalMatrix) -> RationalMatrix:
    if i not in matrix.cols:
        raise InvalidIndexError(f"x_{i}: la columna no existe")
    t = Fraction(t) * _overflow_sign(matrix, i)
    return _add_column_multiple(matrix, matrix.cols.succ(i), i, t)


# Función para aplicar y_i(t): la columna i gana t veces la columna i⊕1
def y_op(i: int, t: Fraction | int, matrix: RationalMatrix) -> RationalMatrix:
    if i not in matrix.cols:
        raise InvalidIndexError(f"y_{i}: la columna no existe")
    t = Fraction(t) * _overflow_sign(matrix, i)
    return _add_column_multiple(matrix, i, matrix.cols.succ(i), t)


# Función para aplicar la inmersión iota_{i,l,r}
def iota(i: int, params: EmbeddingParams, matrix: RationalMatrix, row: Optional[int] = None) -> RationalMatrix:
    """
    inc_i seguido de x_i(s_1), x_{i⊕1}(s_2), ... y luego y_{i⊖1}(t_1), y_{i⊖2}(t_2), ...
    @param {int} i: Índice nuevo de columna
    @param {EmbeddingParams} params: Parámetros t (izquierda) y s (derecha)
    @param {RationalMatrix} matrix: Matriz original
    @param {int} row: Índice de la fila nueva (por defecto, al final)
    @return {RationalMatrix}: Matriz con una fila y una columna más
    """
    if len(params.t) + len(params.s) > len(matrix.cols):
        raise InvalidIndexError("iota: l + r excede el número de columnas")
    if row is None:
        row = (matrix.rows.max if matrix.k else 0) + 1
    result = inc(i, row, matrix)
    column = i
    for s in params.s:
        result = x_op(column, s, result)
        column = result.cols.succ(column)
    column = i
    for t in params.t:
        column = result.cols.pred(column)
        result = y_op(column, t, result)
    return result
