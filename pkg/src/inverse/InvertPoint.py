# Reconstrucción de la preimagen en forma dominó a partir de coordenadas twistor

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.ampl.PositiveZ import M, PositiveZ
from src.ampl.Twistors import amap
from src.chords.ChordDiagram import ChordDiagram
from src.domino.DominoAssignment import domino_template
from src.grassmannian.LinearAlgebra import determinant
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import (
    DegenerateIntersectionError,
    InvalidIndexError,
    InvariantViolation,
    NotInCellImageError,
)

Vector = Sequence[Fraction]


# Función para la intersección del espacio de filas de Y con el generado por cinco vectores
def intersection_vector(y: RationalMatrix, vectors: Sequence[Vector]) -> List[Fraction]:
    """
    Los coeficientes b_j = (-1)^(j-1) <Y v_1 ... v_(j-1) v_(j+1) ... v_5> dan el
    vector sum_j b_j v_j, que genera la intersección
    @param {RationalMatrix} y: Matriz k×(k+4)
    @param {Sequence[Vector]} vectors: Cinco vectores de longitud k+4
    @return {List[Fraction]}: Los cinco coeficientes b_j
    """
    width = len(y.cols)
    if len(vectors) != M + 1 or any(len(v) != width for v in vectors):
        raise InvalidIndexError(f"Se esperaban {M + 1} vectores de longitud {width}")
    head = y.to_lists()
    coefficients = [
        (-1) ** j * determinant(head + [list(v) for h, v in enumerate(vectors) if h != j])
        for j in range(M + 1)
    ]
    if all(c == 0 for c in coefficients):
        raise DegenerateIntersectionError("Los cinco determinantes se anulan: la intersección no es una recta")
    return coefficients


# Función para el vector sum_j b_j v_j
def combine(coefficients: Sequence[Fraction], vectors: Sequence[Vector]) -> List[Fraction]:
    return [sum((b * v[t] for b, v in zip(coefficients, vectors)), Fraction(0)) for t in range(len(vectors[0]))]


# Tipo para la traza de una fila reconstruida
@dataclass(frozen=True)
class RowTrace:
    chord: int
    basis: Tuple[str, ...]
    coefficients: Tuple[Fraction, ...]
    row: Tuple[Tuple[int, Fraction], ...]

    def to_json(self) -> Dict:
        return {
            "chord": self.chord,
            "basis": list(self.basis),
            "coefficients": [str(c) for c in self.coefficients],
            "row": {str(c): str(v) for c, v in self.row},
        }


# Tipo para el resultado de la inversión: matriz dominó y traza por cuerda
@dataclass(frozen=True)
class Reconstruction:
    diagram: ChordDiagram
    matrix: RationalMatrix
    trace: Tuple[RowTrace, ...]

    def to_json(self) -> Dict:
        return {
            "diagram": self.diagram.to_json(),
            "matrix": self.matrix.to_json(),
            "trace": [t.to_json() for t in self.trace],
        }


def _solve(y: RationalMatrix, vectors: Sequence[Vector], l: int) -> List[Fraction]:
    try:
        return intersection_vector(y, vectors)
    except DegenerateIntersectionError as e:
        raise NotInCellImageError(f"Fila {l}: {e}") from e


# Función principal: preimagen de Y en la celda del diagrama
def invert_point(diagram: ChordDiagram, y: RationalMatrix, z: PositiveZ) -> Reconstruction:
    """
    Las filas se calculan de padre a hijo. Una cuerda superior usa Z en
    {i, i+1, j, j+1, n}; un hijo usa t1·Z_h + t2·Z_(h+1) con t1 = alpha del padre (sin
    el término epsilon·beta de un padre pegajoso) y t2 = beta del padre. Cada fila se escala para que beta valga 1.
    @param {ChordDiagram} diagram: Diagrama de la celda
    @param {RationalMatrix} y: Punto k×(k+4)
    @param {PositiveZ} z: Matriz positiva n×(k+4)
    @return {Reconstruction}: Matriz dominó k×n y traza
    """
    n, k = diagram.n, diagram.k
    if z.n != n or z.k != k or y.k != k or len(y.cols) != z.width:
        raise InvalidIndexError(f"Y debe ser {k}×{k + M} y Z {n}×{k + M}")
    rows: Dict[int, Dict[int, Fraction]] = {}
    # alpha sin la contribución epsilon·beta del padre (difiere de la fila en los hijos pegajosos)
    alphas: Dict[int, Fraction] = {}
    trace: List[RowTrace] = []
    for l in range(1, k + 1):
        template = domino_template(diagram, l)
        c = diagram.chord(l)
        own = [c.i, c.i + 1, c.j, c.j + 1]
        row: Dict[int, Fraction] = {}
        if template.parent is None:
            positions = own + [n]
            coefficients = _solve(y, [z.row(p) for p in positions], l)
            if any(b == 0 for b in coefficients):
                raise NotInCellImageError(f"Un twistor de la cuerda superior {l} se anula")
            row.update(zip(positions, coefficients))
            basis = tuple(str(p) for p in positions)
        else:
            h = template.inherited[0]
            t1, t2 = alphas[template.parent], rows[template.parent][h + 1]
            v = [t1 * a + t2 * b for a, b in zip(z.row(h), z.row(h + 1))]
            coefficients = _solve(y, [v] + [z.row(p) for p in own], l)
            if coefficients[0] == 0:
                raise NotInCellImageError(f"El twistor <{c.i} {c.i + 1} {c.j} {c.j + 1}> se anula")
            row[h] = coefficients[0] * t1
            row[h + 1] = coefficients[0] * t2
            for p, b in zip(own, coefficients[1:]):
                row[p] = row.get(p, Fraction(0)) + b
            basis = (f"{t1}*Z{h}+{t2}*Z{h + 1}",) + tuple(str(p) for p in own)
        scale = row[c.i + 1]
        if scale == 0:
            raise NotInCellImageError(f"beta_{l} se anula en la reconstrucción")
        rows[l] = {p: x / scale for p, x in row.items()}
        alphas[l] = rows[l][c.i]
        if template.sticky:
            alphas[l] -= coefficients[0] / scale * t2
        trace.append(RowTrace(l, basis, tuple(coefficients), tuple(sorted(rows[l].items()))))

    entries = {(l, p): x for l, row in rows.items() for p, x in row.items()}
    matrix = RationalMatrix(range(1, k + 1), range(1, n + 1), entries)
    if matrix.rank() != k:
        raise NotInCellImageError("Las filas reconstruidas no son independientes")
    if k and not amap(matrix, z).same_row_span(y):
        raise InvariantViolation(
            "La preimagen reconstruida no reproduce Y",
            {"diagram": diagram.to_json(), "Y": y.to_json(), "C": matrix.to_json()},
        )
    return Reconstruction(diagram, matrix, tuple(trace))
