# Clasificación de las fronteras de codimensión uno: en S_∂A o compartidas con otra celda

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Tuple

from src.ampl.Twistors import in_s_partial_a
from src.boundaries.BoundaryPermutations import boundary_permutation
from src.boundaries.BoundaryPoints import boundary_point
from src.boundaries.Shifts import ShiftResult, shift
from src.boundaries.VarLedger import VarElement, var_set
from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation, UndefinedShiftError

Status = Literal["SA", "PAIRED"]


# Tipo para la clasificación de una frontera
@dataclass(frozen=True)
class BoundaryClass:
    diagram: ChordDiagram
    star: VarElement
    status: Status
    case: int
    shift: Optional[ShiftResult] = None
    partner_star: Optional[VarElement] = None

    @property
    def partner(self) -> Optional[ChordDiagram]:
        return self.shift.target if self.shift is not None else None

    def to_json(self) -> Dict:
        data = {
            "diagram": self.diagram.to_text(),
            "star": str(self.star),
            "status": self.status,
            "case": self.case,
        }
        if self.shift is not None:
            data["partner"] = self.shift.target.to_text()
            data["partner_star"] = str(self.partner_star)
            data["shift"] = self.shift.kind
        return data


def _sa(diagram: ChordDiagram, star: VarElement, case: int) -> BoundaryClass:
    return BoundaryClass(diagram, star, "SA", case)


def _paired(diagram: ChordDiagram, star: VarElement, case: int, moved: ShiftResult, kind: str, *chords: int) -> BoundaryClass:
    return BoundaryClass(diagram, star, "PAIRED", case, moved, VarElement(kind, chords or (moved.target_chord,)))


def _starts_before(diagram: ChordDiagram, l: int) -> bool:
    h = diagram.chord(l).i
    return h == 1 or diagram.stat(l).sticky_child


def _classify_alpha(diagram: ChordDiagram, star: VarElement) -> Optional[BoundaryClass]:
    l = star.chord
    c = diagram.chord(l)
    if not c.is_short:
        if c.i + 1 in diagram.start_index:
            return _sa(diagram, star, 2)
        return _paired(diagram, star, 1, shift(diagram, l, "tail", "right"), "beta")
    if c.j == diagram.n - 2:
        return _sa(diagram, star, 2)
    moved = shift(diagram, l, "tail", "right")
    if moved.kind == "tail-right-short":
        return _paired(diagram, star, 1, moved, "delta_hat")
    if c.j in diagram.start_index:
        return _paired(diagram, star, 2, moved, "eta", moved.target_chord, moved.target.start_index[c.j])
    return _paired(diagram, star, 3, moved, "delta_hat")


def _classify_beta(diagram: ChordDiagram, star: VarElement) -> Optional[BoundaryClass]:
    l = star.chord
    if _starts_before(diagram, l):
        return _sa(diagram, star, 3)
    if diagram.chord(l).i in diagram.end_index:
        return None
    return _paired(diagram, star, 1, shift(diagram, l, "tail", "left"), "alpha")


def _classify_gamma(diagram: ChordDiagram, star: VarElement) -> Optional[BoundaryClass]:
    l = star.chord
    if diagram.chord(l).j == diagram.n - 2:
        return _sa(diagram, star, 4)
    moved = shift(diagram, l, "head", "right")
    if moved.kind != "head-right":
        return None
    return _paired(diagram, star, 1, moved, "delta_hat")


def _classify_delta(diagram: ChordDiagram, star: VarElement) -> Optional[BoundaryClass]:
    l = star.chord
    c = diagram.chord(l)
    if not c.is_short:
        moved = shift(diagram, l, "head", "left")
        return _paired(diagram, star, 1, moved, "gamma_hat") if moved.kind == "head-left" else None
    if c.i in diagram.end_index:
        return _paired(diagram, star, 3, shift(diagram, l, "head", "left"), "alpha")
    if _starts_before(diagram, l):
        return _sa(diagram, star, 5)
    return _paired(diagram, star, 1, shift(diagram, l, "head", "left"), "alpha")


def _classify_eta(diagram: ChordDiagram, star: VarElement) -> Optional[BoundaryClass]:
    i, j = star.chords
    if diagram.stat(j).sticky_child and _starts_before(diagram, i):
        return _sa(diagram, star, 6)
    moved = shift(diagram, i, "head", "left")
    if moved.kind == "head-left-child":
        return _paired(diagram, star, 4, moved, "theta", moved.target_chord, moved.target.start_index[diagram.chord(j).i])
    return _paired(diagram, star, 2, moved, "alpha")


def _classify_theta(diagram: ChordDiagram, star: VarElement) -> Optional[BoundaryClass]:
    i, j = star.chords
    moved = shift(diagram, i, "head", "right")
    return _paired(diagram, star, 4, moved, "eta", moved.target_chord, moved.target.start_index[diagram.chord(j).i])


CLASSIFIERS = {
    "alpha": _classify_alpha,
    "beta": _classify_beta,
    "gamma_hat": _classify_gamma,
    "delta_hat": _classify_delta,
    "eta": _classify_eta,
    "theta": _classify_theta,
}


# Función para clasificar una frontera y comprobar la igualdad de permutaciones
def classify_boundary(diagram: ChordDiagram, star: VarElement) -> BoundaryClass:
    if star not in var_set(diagram):
        raise InvalidIndexError(f"{star} no pertenece a Var de {diagram.to_text()}")
    try:
        result = _sa(diagram, star, 1) if star.kind == "eps_hat" else CLASSIFIERS[star.kind](diagram, star)
    except UndefinedShiftError:
        result = None
    if result is None:
        raise InvariantViolation(
            f"La frontera {star} de {diagram.to_text()} quedó sin clasificar",
            {"diagram": diagram.to_json(), "star": star.to_json()},
        )
    if result.status == "PAIRED":
        own = boundary_permutation(diagram, star)
        other = boundary_permutation(result.partner, result.partner_star)
        if own != other:
            raise InvariantViolation(
                f"Las fronteras {star} de {diagram.to_text()} y {result.partner_star} de "
                f"{result.partner.to_text()} tienen permutaciones distintas",
                {
                    "diagram": diagram.to_json(),
                    "star": star.to_json(),
                    "partner": result.partner.to_json(),
                    "partner_star": result.partner_star.to_json(),
                    "permutations": [own.to_json(), other.to_json()],
                },
            )
    return result


# Función principal: clasificar todas las fronteras Var de un diagrama
def pair_boundaries(diagram: ChordDiagram) -> List[BoundaryClass]:
    """
    Cada elemento de Var recibe exactamente una etiqueta: SA (la frontera está
    en S_∂A) o PAIRED con el diagrama corrido y el elemento que se anula allí
    @param {ChordDiagram} diagram: Diagrama válido
    @return {List[BoundaryClass]}: Una clasificación por elemento, en el orden de var_set
    """
    return [classify_boundary(diagram, star) for star in var_set(diagram)]


# Función para un testigo numérico de una frontera SA
def sa_witness(diagram: ChordDiagram, star: VarElement, seed: int = 0) -> Tuple[RationalMatrix, Tuple[int, int]]:
    """
    @return {Tuple[RationalMatrix, Tuple[int, int]]}: Matriz con star = 0 y el
        par (i, j) cuyo soporte {i, i+1, j, j+1} contiene un vector de la fila
    """
    label = classify_boundary(diagram, star)
    if label.status != "SA":
        raise InvalidIndexError(f"{star} de {diagram.to_text()} no es una frontera SA")
    matrix = boundary_point(diagram, star, seed).to_matrix(diagram)
    pair = in_s_partial_a(matrix)
    if pair is None:
        raise InvariantViolation(
            f"El testigo de {star} en {diagram.to_text()} no está en S_∂A",
            {"diagram": diagram.to_json(), "star": star.to_json(), "C": matrix.to_json()},
        )
    return matrix, pair


# Función del proceso de trabajo para la tabla de fronteras
def _classify_all(diagram: ChordDiagram) -> List[Dict]:
    return [label.to_json() for label in pair_boundaries(diagram)]


# Función para la tabla de fronteras de todos los diagramas de (n, k)
def boundary_table(n: int, k: int, jobs: int = 1) -> List[Dict]:
    diagrams = enumerate_diagrams(n, k)
    if jobs <= 1:
        tables = [_classify_all(d) for d in diagrams]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            tables = list(executor.map(_classify_all, diagrams))
    return [row for table in tables for row in table]
