# Permutaciones decoradas de las fronteras de codimensión uno

from typing import Dict, List

from src.boundaries.BoundaryPoints import boundary_point
from src.boundaries.VarLedger import VarElement, var_set
from src.chords.ChordDiagram import ChordDiagram
from src.chords.DecoratedPermutation import DecoratedPermutation
from src.chords.Permutations import Factor, head_partner, product_of, sigma_factors
from src.grassmannian.LinearAlgebra import rank
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation, OutOfScopeError


def _check_star(diagram: ChordDiagram, star: VarElement) -> None:
    if star not in var_set(diagram):
        raise InvalidIndexError(f"{star} no pertenece a Var de {diagram.to_text()}")
    if star.kind == "beta" and diagram.stat(star.chord).sticky_child:
        raise OutOfScopeError(f"{star}: la frontera beta de un hijo pegajoso no se genera")


def _find(factors: List[Factor], kind: str, l: int) -> int:
    return next(p for p, f in enumerate(factors) if f.kind == kind and f.chord == l)


# Función para editar la factorización de pi según el elemento que se anula
def boundary_factors(diagram: ChordDiagram, star: VarElement) -> List[Factor]:
    """
    Sobre pi = (colas y cabezas en orden de extremos) · (3-ciclos por cabeza):
      eps_hat_j          quita ((a_j+1) a*_j)
      alpha_j            quita (a_j (a_j*+1))
      gamma_hat_j        cambia el 3-ciclo por ((a_j+1) (b_j+1))
      delta_hat_j, eta   cambian el 3-ciclo por ((a_j+1) b_j)
      beta_j, theta      cambian el 3-ciclo por (a_j b_j (b_j+1)), la cabeza
                         por (a_j a*_j), quitan la cola y llevan a a_j la
                         pareja a_j+1 de las cabezas de los hijos
    @param {ChordDiagram} diagram: Diagrama de la celda
    @param {VarElement} star: Elemento de Var que se anula
    @return {List[Factor]}: Factores editados, en orden de producto
    """
    _check_star(diagram, star)
    j = star.chord
    c = diagram.chord(j)
    factors = list(sigma_factors(diagram))
    cycle = _find(factors, "cycle", j)
    if star.kind == "eps_hat":
        del factors[_find(factors, "head", j)]
    elif star.kind == "alpha":
        del factors[_find(factors, "tail", j)]
    elif star.kind == "gamma_hat":
        factors[cycle] = Factor("cycle", j, (c.i + 1, c.j + 1))
    elif star.kind in ("delta_hat", "eta"):
        factors[cycle] = Factor("cycle", j, (c.i + 1, c.j))
    else:
        factors[cycle] = Factor("cycle", j, (c.i, c.j, c.j + 1))
        factors[_find(factors, "head", j)] = Factor("head", j, (c.i, head_partner(diagram, j)))
        for child in diagram.children_of(j):
            factors[_find(factors, "head", child)] = Factor("head", child, (diagram.chord(child).i + 1, c.i))
        del factors[_find(factors, "tail", j)]
    return factors


# Función para la permutación algorítmica editada
def edited_permutation(diagram: ChordDiagram, star: VarElement) -> DecoratedPermutation:
    return product_of(diagram, boundary_factors(diagram, star))


# Función para la permutación decorada del positroide de una matriz
def positroid_permutation(matrix: RationalMatrix) -> DecoratedPermutation:
    """
    pi(i) es el primer j después de i (cíclicamente) con v_i en el generado por
    v_(i+1), ..., v_j. Una columna nula es un punto fijo negro; una columna fuera
    del generado por las demás, un punto fijo blanco.
    @param {RationalMatrix} matrix: Matriz k×N de rango k
    @return {DecoratedPermutation}: Permutación con k anti-excedancias
    """
    cols = list(matrix.cols)
    size = len(cols)
    columns = {c: matrix.column(c) for c in cols}
    images: Dict[int, int] = {}
    white: List[int] = []
    for position, c in enumerate(cols):
        vector = columns[c]
        if all(x == 0 for x in vector):
            images[c] = c
            continue
        span: List[List] = []
        for step in range(1, size):
            d = cols[(position + step) % size]
            span.append(columns[d])
            if rank(span + [vector]) == rank(span):
                images[c] = d
                break
        else:
            images[c] = c
            white.append(c)
    return DecoratedPermutation.from_mapping(images, white)


# Función principal: la permutación de la frontera donde se anula star
def boundary_permutation(diagram: ChordDiagram, star: VarElement, seed: int = 0) -> DecoratedPermutation:
    """
    Se lee del positroide de un punto genérico de la frontera (star = 0 y el
    resto de Var positivo), con aritmética exacta
    @param {ChordDiagram} diagram: Diagrama de la celda
    @param {VarElement} star: Elemento de Var que se anula
    @param {int} seed: Semilla del punto genérico
    @return {DecoratedPermutation}: Permutación del estrato de codimensión uno
    """
    _check_star(diagram, star)
    matrix = boundary_point(diagram, star, seed).to_matrix(diagram)
    if matrix.rank() != diagram.k:
        raise InvariantViolation(
            f"El punto de la frontera {star} de {diagram.to_text()} no tiene rango {diagram.k}",
            {"diagram": diagram.to_json(), "star": star.to_json(), "C": matrix.to_json()},
        )
    return positroid_permutation(matrix)
