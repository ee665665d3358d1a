# Álgebra lineal exacta sobre listas de racionales

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

Vector = List[Fraction]
Matrix = List[List[Fraction]]


# Función para escalar cada fila a enteros
def _integer_rows(matrix: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], int]:
    """
    Multiplica cada fila por el mínimo común múltiplo de sus denominadores
    @param {Sequence} matrix: Matriz de racionales
    @return {Tuple}: Filas enteras y el producto de los factores usados
    """
    rows: List[List[int]] = []
    scale = 1
    for row in matrix:
        factor = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * factor) for x in row])
        scale *= factor
    return rows, scale


# Función para calcular el determinante entero con el método de Bareiss
def bareiss_determinant(matrix: List[List[int]]) -> int:
    """
    Eliminación libre de fracciones; cada división es exacta
    @param {List[List[int]]} matrix: Matriz cuadrada de enteros
    @return {int}: Determinante
    """
    size = len(matrix)
    if size == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[size - 1][size - 1]


# Función para calcular el determinante exacto de una matriz racional
def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    if any(len(row) != len(matrix) for row in matrix):
        raise ValueError("El determinante requiere una matriz cuadrada")
    rows, scale = _integer_rows(matrix)
    return Fraction(bareiss_determinant(rows), scale)


# Función para obtener la forma escalonada reducida y las columnas pivote
def row_echelon(matrix: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """
    Forma escalonada reducida por filas con aritmética exacta
    @param {Sequence} matrix: Matriz de racionales
    @return {Tuple[Matrix, List[int]]}: Filas no nulas de la forma reducida y columnas pivote
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        i_row = next((r for r in range(piv_r, n_rows) if m[r][piv_c] != 0), None)
        if i_row is None:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        m[piv_r] = [x / fp for x in m[piv_r]]
        for r in range(n_rows):
            fr = m[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            m[r] = [x - fr * y for x, y in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m[:piv_r], pivots


# Función para calcular el rango
def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(row_echelon(matrix)[1])


# Función para calcular una base del núcleo (vectores x con matrix·x = 0)
def nullspace(matrix: Sequence[Sequence[Fraction]], n_cols: int) -> Matrix:
    """
    Base del núcleo a partir de la forma escalonada reducida
    @param {Sequence} matrix: Matriz de racionales (puede no tener filas)
    @param {int} n_cols: Número de columnas
    @return {Matrix}: Un vector por cada variable libre
    """
    reduced, pivots = row_echelon(matrix)
    free = [c for c in range(n_cols) if c not in pivots]
    basis: Matrix = []
    for f in free:
        vector = [Fraction(0)] * n_cols
        vector[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        basis.append(vector)
    return basis

