# Patrones de Plückers no nulos de una celda, muestreo y búsqueda de testigos

from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.domino.ConstructMatrix import ConstructionParams, ConstructionStep, construct_matrix, run_construction
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvariantViolation
from src.utils.RandomClass import RandomClass


# Función para la ejecución de referencia (todos los parámetros en 1) con la matriz tras cada paso
@lru_cache(maxsize=256)
def reference_run(diagram: ChordDiagram) -> Tuple[Tuple[ConstructionStep, ...], Tuple[RationalMatrix, ...]]:
    builder = run_construction(diagram, ConstructionParams.constant(diagram.k), record=True)
    return tuple(builder.steps), tuple(builder.snapshots)


# Función para el patrón de Plückers no nulos de la celda (no depende de los parámetros)
@lru_cache(maxsize=256)
def cell_pattern(diagram: ChordDiagram) -> FrozenSet[Tuple[int, ...]]:
    return construct_matrix(diagram, ConstructionParams.constant(diagram.k)).nonzero_pattern()


# Función para muestrear un punto de la celda de forma reproducible
def sample_cell(diagram: ChordDiagram, seed: int) -> RationalMatrix:
    """
    construct_matrix con parámetros racionales p/q, p y q en [1, 100]
    @param {ChordDiagram} diagram: Diagrama válido
    @param {int} seed: Semilla del generador
    @return {RationalMatrix}: Matriz k×n de un punto de la celda
    """
    return construct_matrix(diagram, ConstructionParams.random(diagram.k, RandomClass(seed)))


# Función para buscar, en cada cuerda superior, un Plücker no nulo que toque A en un solo marcador
def top_chord_witnesses(diagram: ChordDiagram) -> Dict[int, Dict[int, Tuple[int, ...]]]:
    """
    Para A = {i, i+1, j, j+1, n}: todo I del patrón corta A, y para cada p en A
    hay un I del patrón con I ∩ A = {p}
    @param {ChordDiagram} diagram: Diagrama válido
    @return {Dict}: cuerda -> marcador p -> I testigo
    """
    pattern = sorted(cell_pattern(diagram))
    found: Dict[int, Dict[int, Tuple[int, ...]]] = {}
    for l in diagram.top_chords():
        c = diagram.chord(l)
        markers = {c.i, c.i + 1, c.j, c.j + 1, diagram.n}
        missing: List[Tuple[int, ...]] = [index for index in pattern if not markers.intersection(index)]
        if missing:
            raise InvariantViolation(
                f"El Plücker {missing[0]} no corta los marcadores de la cuerda {l}",
                {"diagram": diagram.to_json(), "chord": l, "index": list(missing[0])},
            )
        found[l] = {}
        for p in sorted(markers):
            witness = next((index for index in pattern if markers.intersection(index) == {p}), None)
            if witness is None:
                raise InvariantViolation(
                    f"Ningún Plücker no nulo corta los marcadores de la cuerda {l} solo en {p}",
                    {"diagram": diagram.to_json(), "chord": l, "marker": p},
                )
            found[l][p] = witness
    return found
