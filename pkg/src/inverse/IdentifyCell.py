# Identificación de la celda BCFW que contiene la preimagen de un punto Y

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.ampl.PositiveZ import PositiveZ, z_panel
from src.ampl.Twistors import amap, in_s_partial_a
from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.domino.SignRules import check_sign_rules
from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.PositiveSamples import random_positive_matrix
from src.grassmannian.RationalMatrix import RationalMatrix
from src.inverse.InvertPoint import invert_point
from src.utils.ExceptionsClass import (
    DegenerateIntersectionError,
    InvalidIndexError,
    InvariantViolation,
    NotInCellImageError,
    SignRuleViolation,
)
from src.utils.RandomClass import RandomClass


# Función del proceso de trabajo: la celda acepta si la inversión cumple las reglas de signos
def _accepts(job: Tuple[ChordDiagram, RationalMatrix, PositiveZ]) -> bool:
    diagram, y, z = job
    try:
        check_sign_rules(invert_point(diagram, y, z).matrix, diagram)
    except (NotInCellImageError, DegenerateIntersectionError, SignRuleViolation):
        return False
    return True


# Función para listar todas las celdas que aceptan Y
def accepting_cells(y: RationalMatrix, z: PositiveZ, n: int, k: int, jobs: int = 1) -> List[ChordDiagram]:
    if z.n != n or z.k != k:
        raise InvalidIndexError(f"Z debe ser {n}×{k + 4}")
    candidates = enumerate_diagrams(n, k)
    work = [(diagram, y, z) for diagram in candidates]
    if jobs <= 1:
        verdicts = [_accepts(job) for job in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            verdicts = list(executor.map(_accepts, work))
    return [diagram for diagram, ok in zip(candidates, verdicts) if ok]


# Función principal: la única celda cuya inversión es válida, o None en la frontera
def identify_cell(y: RationalMatrix, z: PositiveZ, n: int, k: int, jobs: int = 1) -> Optional[ChordDiagram]:
    """
    Recorre todas las celdas para detectar dobles aceptaciones
    @param {RationalMatrix} y: Punto k×(k+4)
    @param {PositiveZ} z: Matriz positiva n×(k+4)
    @return {Optional[ChordDiagram]}: Diagrama aceptado; None si ninguno acepta
    """
    if k == 0:
        return ChordDiagram(n)
    accepted = accepting_cells(y, z, n, k, jobs)
    if len(accepted) > 1:
        raise InvariantViolation(
            f"{len(accepted)} celdas aceptan el mismo punto",
            {"cells": [d.to_json() for d in accepted], "Y": y.to_json(), "z": z.to_json()},
        )
    return accepted[0] if accepted else None


# Tipo para el informe del experimento de sobreyectividad
@dataclass
class SurjectivityReport:
    n: int
    k: int
    seed: int
    points: int = 0
    cells: Counter = field(default_factory=Counter)
    boundary: List[int] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "seed": self.seed,
            "points": self.points,
            "cells": dict(sorted(self.cells.items())),
            "boundary": self.boundary,
        }


# Función para el experimento: puntos interiores al azar, cada uno en exactamente una celda
def surjectivity_experiment(n: int, k: int, seed: int, points: int = 100, zs: int = 3, jobs: int = 1) -> SurjectivityReport:
    """
    Un punto que ninguna celda acepta solo se admite si está en S_∂A
    @param {int} points: Número de puntos de Gr>_{k,n}
    @param {int} zs: Tamaño del panel de Z (se usan por turnos)
    @return {SurjectivityReport}: Conteo de celdas y puntos de frontera
    """
    panel = z_panel(n, k, zs, seed)
    rng = RandomClass(seed)
    report = SurjectivityReport(n, k, seed)
    for index in range(points):
        point = random_positive_matrix(k, IndexSet.interval(1, n), rng.fork(index))
        z = panel[index % len(panel)]
        cell = identify_cell(amap(point, z), z, n, k, jobs)
        report.points += 1
        if cell is not None:
            report.cells[cell.to_text()] += 1
        elif in_s_partial_a(point) is not None:
            report.boundary.append(index)
        else:
            raise InvariantViolation(
                f"Ninguna celda acepta el punto {index}",
                {"index": index, "seed": seed, "C": point.to_json(), "z": z.to_json()},
            )
    return report
