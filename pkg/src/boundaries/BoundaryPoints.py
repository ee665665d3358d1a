# Puntos genéricos de las fronteras: asignaciones dominó con un elemento de Var nulo

from src.boundaries.VarLedger import HATTED_NAMES, VarElement, var_set, var_value
from src.chords.ChordDiagram import ChordDiagram
from src.domino.DominoAssignment import DominoAssignment, random_assignment
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation
from src.utils.RandomClass import RandomClass


# Función para una asignación dominó en la frontera: star = 0 y el resto de Var positivo
def boundary_assignment(diagram: ChordDiagram, star: VarElement, rng: RandomClass) -> DominoAssignment:
    """
    eta_ij se anula igualando el cociente delta/gamma de c_j al de c_i;
    theta_ij igualando el cociente beta/alpha de c_j al delta/gamma de c_i.
    Las demás variables salen de una asignación interior al azar.
    @param {ChordDiagram} diagram: Diagrama de la celda
    @param {VarElement} star: Elemento de Var que se anula
    @param {RandomClass} rng: Generador reproducible
    @return {DominoAssignment}: Asignación sobre la frontera
    """
    if star not in var_set(diagram):
        raise InvalidIndexError(f"{star} no pertenece a Var de {diagram.to_text()}")
    assignment = random_assignment(diagram, rng)
    if star.kind in ("eta", "theta"):
        i, j = star.chords
        ratio = assignment.value("delta", i) / assignment.value("gamma", i)
        if star.kind == "eta":
            return assignment.replace("delta", j, ratio * assignment.value("gamma", j))
        return assignment.replace("beta", j, ratio * assignment.value("alpha", j))
    return assignment.replace(HATTED_NAMES.get(star.kind, star.kind), star.chord, 0)


# Función para el punto de frontera de semilla dada (una rama del generador por elemento)
def boundary_point(diagram: ChordDiagram, star: VarElement, seed: int = 0) -> DominoAssignment:
    rng = RandomClass(seed).fork(var_set(diagram).index(star))
    return boundary_assignment(diagram, star, rng)


# Función para comprobar que una asignación anula star y deja el resto de Var positivo
def check_boundary_assignment(assignment: DominoAssignment, diagram: ChordDiagram, star: VarElement) -> None:
    for other in var_set(diagram):
        value = var_value(assignment, diagram, other)
        if (other == star and value != 0) or (other != star and value <= 0):
            raise InvariantViolation(
                f"En la frontera {star} de {diagram.to_text()}, {other} vale {value}",
                {"diagram": diagram.to_json(), "star": star.to_json(), "assignment": assignment.to_json()},
            )
