# Mapa del amplituedro, coordenadas twistor y pruebas de frontera

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.ampl.PositiveZ import M, PositiveZ
from src.chords.ChordDiagram import ChordDiagram
from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.LinearAlgebra import determinant
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation

SignedIndices = Tuple[Tuple[int, ...], int]


# Función para el mapa Y = C·Z
def amap(matrix: RationalMatrix, z: PositiveZ) -> RationalMatrix:
    """
    @param {RationalMatrix} matrix: Representante no negativo k×N con N ⊆ [n]
    @param {PositiveZ} z: Matriz positiva n×(k+4)
    @return {RationalMatrix}: Y de dimensión k×(k+4), filas 1..k
    """
    if matrix.k != z.k:
        raise InvalidIndexError(f"C tiene {matrix.k} filas y Z espera k={z.k}")
    if any(c < 1 or c > z.n for c in matrix.cols):
        raise InvalidIndexError(f"Las columnas {matrix.cols} no están en [{z.n}]")
    width = z.width
    data = [
        [sum((matrix.get(r, c) * z.row(c)[t] for c in matrix.cols), Fraction(0)) for t in range(width)]
        for r in matrix.rows
    ]
    if not data:
        return RationalMatrix.empty(range(1, width + 1))
    y = RationalMatrix.from_lists(data, rows=range(1, z.k + 1), cols=range(1, width + 1))
    if y.rank() != z.k:
        raise InvariantViolation("Y = CZ no tiene rango k", {"C": matrix.to_json()})
    return y


# Función para la coordenada twistor <Y Z_I>: det de las filas de Y seguidas de Z_I
def twistor(y: RationalMatrix, z: PositiveZ, indices: Sequence[int]) -> Fraction:
    if len(indices) != M:
        raise InvalidIndexError(f"Un twistor necesita {M} índices, recibido {tuple(indices)}")
    if len(set(indices)) < M:
        return Fraction(0)
    return determinant(y.to_lists() + [list(z.row(i)) for i in indices])


# Función para el twistor por Cauchy-Binet: suma sobre J de P_J(C)·<Z_J Z_I>
def cauchy_binet_twistor(matrix: RationalMatrix, z: PositiveZ, indices: Sequence[int]) -> Fraction:
    if len(set(indices)) < M:
        return Fraction(0)
    tail = [list(z.row(i)) for i in indices]
    total = Fraction(0)
    for j in combinations([c for c in matrix.cols if c not in indices], matrix.k):
        plucker = matrix.minor(j)
        if plucker != 0:
            total += plucker * determinant([list(z.row(c)) for c in j] + tail)
    return total


# Función para los twistors de frontera con su signo: <i i+1 j j+1> >= 0 y (-1)^k <1 i i+1 n> >= 0
def boundary_twistor_signs(n: int, k: int) -> List[SignedIndices]:
    found: Dict[Tuple[int, ...], int] = {}
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            quad = {i, i + 1, j, j % n + 1}
            if len(quad) != M:
                continue
            indices = tuple(sorted(quad))
            found[indices] = (-1) ** k if j == n else 1
    return sorted(found.items())


# Función para los signos fijos de los twistors de cinco índices de cada cuerda superior
def top_chord_twistor_signs(diagram: ChordDiagram) -> List[SignedIndices]:
    """
    A = {i, i+1, j, j+1, n} sin p: +1 si p = n, (-1)^(k-l) si p = i,
    (-1)^(k-l+1) si p = i+1, (-1)^(k-l-below) si p = j y (-1)^(k-l-below+1) si p = j+1
    """
    signs: List[SignedIndices] = []
    k = diagram.k
    for l in diagram.top_chords():
        c = diagram.chord(l)
        below = diagram.stat(l).below
        exponents = {c.i: k - l, c.i + 1: k - l + 1, c.j: k - l - below, c.j + 1: k - l - below + 1, diagram.n: 0}
        markers = set(exponents)
        for p, exponent in exponents.items():
            signs.append((tuple(sorted(markers - {p})), (-1) ** exponent))
    return signs


# Función para decidir si un punto está en S_∂A; devuelve el testigo (i, j)
def in_s_partial_a(matrix: RationalMatrix) -> Optional[Tuple[int, int]]:
    """
    El punto está en S_∂A si para algún par (i, j) las columnas fuera de
    {i, i⊕1, j, j⊕1} no tienen rango k (hay un vector soportado en esos cuatro)
    @param {RationalMatrix} matrix: Representante k×N
    @return {Optional[Tuple[int, int]]}: Primer par (i, j) encontrado o None
    """
    cols = matrix.cols
    for i in cols:
        for j in cols:
            if j <= i:
                continue
            quad = {i, cols.succ(i), j, cols.succ(j)}
            if len(quad) != M:
                continue
            rest = [c for c in cols if c not in quad]
            if matrix.restrict_cols(rest).rank() < matrix.k:
                return (i, j)
    return None


# Función para verificar la ley de signos de los twistors de frontera en un punto
def check_boundary_twistors(
    matrix: RationalMatrix,
    z: PositiveZ,
    diagram: Optional[ChordDiagram] = None,
) -> int:
    """
    En un punto no negativo cada twistor de frontera tiene su signo o se anula, y
    se anula solo si el punto está en S_∂A. Con un diagrama se exige además el
    signo estricto y la tabla de las cuerdas superiores.
    @return {int}: Número de twistors verificados
    """
    y = amap(matrix, z)
    witness = in_s_partial_a(matrix)
    checked = 0
    table = boundary_twistor_signs(z.n, z.k)
    if diagram is not None:
        table = table + top_chord_twistor_signs(diagram)
    for indices, sign in table:
        value = sign * twistor(y, z, indices)
        strict = diagram is not None
        if value < 0 or (strict and value == 0) or (value == 0 and witness is None):
            raise InvariantViolation(
                f"El twistor <{' '.join(map(str, indices))}> tiene signo equivocado: {value}",
                {"indices": list(indices), "expected_sign": sign, "C": matrix.to_json()},
            )
        checked += 1
    return checked


# Función para el vector de twistors proporcional a los parámetros de iota_{i,l,4-l}
def embedding_twistor_vector(y: RationalMatrix, z: PositiveZ, i: int, l: int) -> List[Fraction]:
    """
    Con J = (i⊖l, ..., i, ..., i⊕(4-l)) devuelve (+<J∖j1>, -<J∖j2>, ..., +<J∖j5>);
    si J da la vuelta cada entrada se multiplica por (-1)^(k·|{1..j5} ∖ {j_h}|).
    Es proporcional a (t_1···t_l, ..., t_1, 1, s_1, ..., s_1···s_(4-l)).
    """
    cols = IndexSet.interval(1, z.n)
    window = [cols.pred(i, steps) for steps in range(l, 0, -1)] + [i] + [cols.succ(i, steps) for steps in range(1, M - l + 1)]
    wraps = window[-1] < window[0]
    vector: List[Fraction] = []
    for h, left_out in enumerate(window):
        value = (-1) ** h * twistor(y, z, sorted(set(window) - {left_out}))
        if wraps:
            value *= (-1) ** (y.k * len([c for c in range(1, window[-1] + 1) if c != left_out]))
        vector.append(value)
    return vector


# Función para verificar que dos vectores son proporcionales con factor >= 0
def nonnegatively_proportional(vector: Iterable[Fraction], reference: Iterable[Fraction]) -> bool:
    pairs = list(zip(vector, reference))
    pivot = next(((a, b) for a, b in pairs if b != 0), None)
    if pivot is None:
        return all(a == 0 for a, _ in pairs)
    factor = pivot[0] / pivot[1]
    return factor >= 0 and all(a == factor * b for a, b in pairs)
