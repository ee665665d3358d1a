# Matrices Z positivas n×(k+4) para el mapa del amplituedro

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from src.grassmannian.LinearAlgebra import determinant
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation
from src.utils.RandomClass import RandomClass

M = 4

# Por encima de este número de menores se confía en la fórmula del determinante de Vandermonde
MAX_VERIFIED_MINORS = 5000


# Clase para una matriz Z con todos sus menores maximales positivos
@dataclass(frozen=True)
class PositiveZ:
    n: int
    k: int
    rows: Tuple[Tuple[Fraction, ...], ...]
    nodes: Tuple[Fraction, ...] = ()

    @property
    def width(self) -> int:
        return self.k + M

    # Función para obtener la fila Z_i (desde 1)
    def row(self, i: int) -> Tuple[Fraction, ...]:
        if i < 1 or i > self.n:
            raise InvalidIndexError(f"Z no tiene fila {i} (n={self.n})")
        return self.rows[i - 1]

    # Función para el menor maximal con las filas dadas, en el orden dado
    def minor(self, indices: Sequence[int]) -> Fraction:
        return determinant([self.row(i) for i in indices])

    # Función para verificar que todos los menores maximales son positivos
    def verify(self) -> None:
        for indices in combinations(range(1, self.n + 1), self.width):
            if self.minor(indices) <= 0:
                raise InvariantViolation(
                    f"Z tiene un menor no positivo en las filas {indices}",
                    {"rows": list(indices), "nodes": [str(x) for x in self.nodes]},
                )

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "nodes": [str(x) for x in self.nodes],
            "rows": [[str(x) for x in row] for row in self.rows],
        }


# Función para construir Z de Vandermonde: Z[i][c] = nodes[i]^c
def make_positive_Z(n: int, k: int, nodes: Optional[Sequence[Fraction | int]] = None) -> PositiveZ:
    """
    Con nodos positivos estrictamente crecientes cada menor maximal es un
    producto de diferencias positivas
    @param {int} n: Número de filas (n >= k+4)
    @param {int} k: Dimensión k
    @param {Sequence} nodes: Nodos crecientes (por defecto 1..n)
    @return {PositiveZ}: Matriz verificada
    """
    if k < 0 or n < k + M:
        raise InvalidIndexError(f"Se requiere n >= k+4, recibido n={n}, k={k}")
    points = tuple(Fraction(x) for x in (nodes if nodes is not None else range(1, n + 1)))
    if len(points) != n:
        raise InvalidIndexError(f"Se esperaban {n} nodos, recibidos {len(points)}")
    if points[0] <= 0 or any(a >= b for a, b in zip(points, points[1:])):
        raise InvalidIndexError(f"Los nodos deben ser positivos y estrictamente crecientes: {points}")
    rows = tuple(tuple(x ** c for c in range(k + M)) for x in points)
    z = PositiveZ(n, k, rows, points)
    if comb(n, k + M) <= MAX_VERIFIED_MINORS:
        z.verify()
    return z


# Función para nodos perturbados i + u_i con u_i en (0, 1), que siguen siendo crecientes
def random_nodes(n: int, rng: RandomClass) -> List[Fraction]:
    return [i + rng.random_unit() for i in range(1, n + 1)]


# Función para el panel de matrices Z: Vandermonde en 1..n y perturbaciones sembradas
def z_panel(n: int, k: int, count: int, seed: int) -> List[PositiveZ]:
    """
    @param {int} count: Número de matrices (la primera usa los nodos 1..n)
    @param {int} seed: Semilla de las perturbaciones
    @return {List[PositiveZ]}: Panel reproducible
    """
    rng = RandomClass(seed)
    panel = [make_positive_Z(n, k)]
    for index in range(1, count):
        panel.append(make_positive_Z(n, k, random_nodes(n, rng.fork(index))))
    return panel
