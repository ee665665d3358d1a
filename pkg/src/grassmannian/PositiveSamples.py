# Muestras de la Grassmanniana positiva

from fractions import Fraction
from typing import Iterable, List, Sequence

from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.RationalMatrix import RationalMatrix, as_index_set
from src.utils.RandomClass import RandomClass


# Función para construir la matriz de Vandermonde V[r][c] = x_c^(r-1)
def vandermonde_rows(points: Sequence[Fraction], k: int) -> List[List[Fraction]]:
    return [[Fraction(x) ** r for x in points] for r in range(k)]


# Función para obtener un punto aleatorio de Gr>_{k,N}
def random_positive_matrix(k: int, cols: IndexSet | Iterable[int], rng: RandomClass) -> RationalMatrix:
    """
    M[r][c] = d_c · x_c^(r-1) con d > 0 y x creciente; cada menor maximal es
    prod(d_I) · prod_{a<b}(x_b - x_a) > 0
    @param {int} k: Número de filas
    @param {IndexSet} cols: Columnas
    @param {RandomClass} rng: Generador pseudoaleatorio
    @return {RationalMatrix}: Matriz totalmente positiva k × N
    """
    cols = as_index_set(cols)
    points = rng.increasing_fractions(len(cols))
    weights = [rng.random_fraction() for _ in cols]
    rows = vandermonde_rows(points, k)
    data = [[w * x for w, x in zip(weights, row)] for row in rows]
    return RationalMatrix.from_lists(data, rows=range(1, k + 1), cols=cols) if k else RationalMatrix.empty(cols)
