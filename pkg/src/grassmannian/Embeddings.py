# Inmersiones inferior, superior y media

from fractions import Fraction

from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.MatrixOperations import EmbeddingParams, iota, pre, x_op, y_op
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError


# Función para la inmersión inferior iota_{i,2,2}(t,u,v,w)
def lower_embedding(i: int, t: Fraction, u: Fraction, v: Fraction, w: Fraction, matrix: RationalMatrix) -> RationalMatrix:
    """
    La fila nueva queda al final: (..., t·u, u, 1, v, v·w) en i⊖2, ..., i⊕2
    @param {int} i: Índice nuevo de columna (n⊖2 < i < n⊖1)
    @param {RationalMatrix} matrix: Matriz de dimensión (k-1) × N
    @return {RationalMatrix}: Matriz k × (N ∪ {i})
    """
    return iota(i, EmbeddingParams(t=(u, t), s=(v, w)), matrix)


# Función para la inmersión superior iota_{i,3,1}(t,u,v,w)
def upper_embedding(i: int, t: Fraction, u: Fraction, v: Fraction, w: Fraction, matrix: RationalMatrix) -> RationalMatrix:
    """
    x_i(t), y_n(w), y_{n-1}(v), y_{n-2}(u) sobre inc_i, con la fila nueva primero
    @param {int} i: Índice nuevo de columna (i < min N)
    @param {RationalMatrix} matrix: Matriz de dimensión (k-1) × N
    @return {RationalMatrix}: Matriz k × (N ∪ {i}) con filas 1..k
    """
    if matrix.k and i >= matrix.cols.min:
        raise InvalidIndexError(f"Inmersión superior: se requiere i < min N, recibido {i}")
    shifted = matrix.relabel_rows({r: position + 2 for position, r in enumerate(matrix.rows)})
    return iota(i, EmbeddingParams(t=(w, v, u), s=(t,)), shifted, row=1)


# Función para la inmersión media Upsilon_j(s1, s2, t1, t2, L, R)
def middle_embedding(
    j: int,
    s1: Fraction,
    s2: Fraction,
    t1: Fraction,
    t2: Fraction,
    left: RationalMatrix,
    right: RationalMatrix,
    n: int,
) -> RationalMatrix:
    """
    Apila L', la fila v y R' sobre las columnas [n].
    L vive en [j+1] ∪ {n} y R en {j, ..., n-1}. La columna n de L' lleva el
    signo (-1)^(k2+1), que es el que mantiene no negativos todos los menores.
    @param {int} j: Posición de la fila media (soporte j, j+1, n-2, n-1, n)
    @param {RationalMatrix} left: Matriz k1 × ([j+1] ∪ {n})
    @param {RationalMatrix} right: Matriz k2 × ([n-1] ∖ [j-1])
    @param {int} n: Número de marcadores
    @return {RationalMatrix}: Matriz (k1+k2+1) × [n]
    """
    k1, k2 = left.k, right.k
    if k1 + k2 > n - 5 or k1 > j - 2 or k2 > n - j - 4:
        raise InvalidIndexError(f"Inmersión media: dimensiones inválidas (k1={k1}, k2={k2}, j={j}, n={n})")
    if left.cols != IndexSet(tuple(range(1, j + 2)) + (n,)):
        raise InvalidIndexError("Inmersión media: L debe tener columnas [j+1] ∪ {n}")
    if right.cols != IndexSet.interval(j, n - 1):
        raise InvalidIndexError("Inmersión media: R debe tener columnas {j, ..., n-1}")
    s1, s2, t1, t2 = (Fraction(x) for x in (s1, s2, t1, t2))
    if min(s1, s2, t1, t2) <= 0:
        raise InvalidIndexError("Inmersión media: los parámetros deben ser positivos")

    sign = (-1) ** k2
    left_prime = y_op(j, s1 / s2, left)
    for c in range(j + 2, n):
        left_prime = pre(c, left_prime)
    left_prime = left_prime.with_entries({(r, n): -sign * left_prime.get(r, n) for r in left_prime.rows})

    right_prime = x_op(j, s2 / s1, y_op(n - 2, t1 / t2, right))
    for c in list(range(1, j)) + [n]:
        right_prime = pre(c, right_prime)

    middle = RationalMatrix(
        (1,),
        IndexSet.interval(1, n),
        {(1, j): s1, (1, j + 1): s2, (1, n - 2): sign * t1, (1, n - 1): sign * t2, (1, n): sign},
    )
    blocks = [b for b in (left_prime, middle, right_prime) if b.k]
    return RationalMatrix.stack(blocks)
