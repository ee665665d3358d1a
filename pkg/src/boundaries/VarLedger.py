# Variables de frontera de una celda: Var¹, Ṽar y el subconjunto mínimo Var

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Literal, Set, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.domino.DominoAssignment import DominoAssignment
from src.utils.ExceptionsClass import InvalidIndexError

VarKind = Literal["eps_hat", "alpha", "beta", "gamma_hat", "delta_hat", "eta", "theta"]

# Orden de las variables de una cuerda dentro del libro
SINGLE_KINDS: Tuple[VarKind, ...] = ("eps_hat", "alpha", "beta", "gamma_hat", "delta_hat")
PAIR_KINDS: Tuple[VarKind, ...] = ("eta", "theta")
HATTED_NAMES = {"eps_hat": "epsilon", "gamma_hat": "gamma", "delta_hat": "delta"}


# Tipo para un elemento de Ṽar: una variable dominó con gorro o un menor 2×2
@dataclass(frozen=True, order=True)
class VarElement:
    kind: VarKind
    chords: Tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 2 if self.kind in PAIR_KINDS else 1
        if self.kind not in SINGLE_KINDS + PAIR_KINDS or len(self.chords) != expected:
            raise InvalidIndexError(f"Elemento de Var inválido: {self.kind} {self.chords}")

    # Función para la cuerda sobre la que actúa la edición de la permutación
    @property
    def chord(self) -> int:
        return self.chords[-1] if self.kind == "theta" else self.chords[0]

    def __str__(self) -> str:
        return f"{self.kind}_{','.join(str(c) for c in self.chords)}"

    # Función para leer la forma de texto "alpha_2" o "eta_1,3"
    @classmethod
    def parse(cls, text: str) -> "VarElement":
        match = re.fullmatch(r"\s*([a-z_]+?)_(\d+(?:,\d+)?)\s*", text)
        if not match:
            raise InvalidIndexError(f"Elemento de Var ilegible: {text!r}")
        return cls(match.group(1), tuple(int(c) for c in match.group(2).split(",")))

    def to_json(self) -> Dict:
        return {"kind": self.kind, "chords": list(self.chords), "text": str(self)}


def single(kind: VarKind, l: int) -> VarElement:
    return VarElement(kind, (l,))


# Función para los pares (i, j) con c_j descendiente de c_i y la misma cabeza
def same_end_pairs(diagram: ChordDiagram) -> List[Tuple[int, int]]:
    return [
        (i, j)
        for i in range(1, diagram.k + 1)
        for j in diagram.descendants(i)
        if diagram.chord(j).j == diagram.chord(i).j
    ]


# Función para los pares (i, j) con c_i terminando donde empieza c_j
def head_to_tail_pairs(diagram: ChordDiagram) -> List[Tuple[int, int]]:
    return sorted(
        (i, diagram.start_index[diagram.chord(i).j])
        for i in range(1, diagram.k + 1)
        if diagram.chord(i).j in diagram.start_index
    )


# Función para Var¹: las cinco variables con gorro de cada cuerda
def var_one(diagram: ChordDiagram) -> List[VarElement]:
    return [single(kind, l) for l in range(1, diagram.k + 1) for kind in SINGLE_KINDS]


# Función para Ṽar: Var¹ y todos los menores eta y theta
def var_tilde(diagram: ChordDiagram) -> List[VarElement]:
    return (
        var_one(diagram)
        + [VarElement("eta", pair) for pair in same_end_pairs(diagram)]
        + [VarElement("theta", pair) for pair in head_to_tail_pairs(diagram)]
    )


# Función principal del libro: el conjunto Var con sus exclusiones
def var_set(diagram: ChordDiagram) -> List[VarElement]:
    """
    eta_ij entra solo si c_i es padre de c_j (y entonces salen delta_i y gamma_j);
    theta_ij solo si son hermanas (y salen gamma_i y beta_j). Las cuerdas
    superiores cuentan como hermanas entre sí.
    @param {ChordDiagram} diagram: Diagrama válido
    @return {List[VarElement]}: Var, primero las variables simples por cuerda
    """
    etas = [(i, j) for i, j in same_end_pairs(diagram) if diagram.stat(j).parent == i]
    thetas = [(i, j) for i, j in head_to_tail_pairs(diagram) if diagram.are_siblings(i, j)]
    excluded: Set[VarElement] = set()
    for i, j in etas:
        excluded.update((single("delta_hat", i), single("gamma_hat", j)))
    for i, j in thetas:
        excluded.update((single("gamma_hat", i), single("beta", j)))
    return (
        [star for star in var_one(diagram) if star not in excluded]
        + [VarElement("eta", pair) for pair in etas]
        + [VarElement("theta", pair) for pair in thetas]
    )


# Función para el valor de un elemento de Ṽar en una asignación dominó
def var_value(assignment: DominoAssignment, diagram: ChordDiagram, star: VarElement) -> Fraction:
    if star.kind == "eta":
        return assignment.eta(diagram, *star.chords)
    if star.kind == "theta":
        return assignment.theta(diagram, *star.chords)
    l = star.chords[0]
    if not 1 <= l <= diagram.k:
        raise InvalidIndexError(f"{star}: la cuerda {l} no existe")
    if star.kind in ("alpha", "beta"):
        return assignment.value(star.kind, l)
    return assignment.hatted(diagram)[HATTED_NAMES[star.kind]][l - 1]


# Función para evaluar todos los elementos de Ṽar
def var_values(assignment: DominoAssignment, diagram: ChordDiagram) -> Dict[VarElement, Fraction]:
    return {star: var_value(assignment, diagram, star) for star in var_tilde(diagram)}


# Función para las identidades que expresan los menores eliminados
def eliminated_identities(values: Dict[VarElement, Fraction], diagram: ChordDiagram) -> List[Tuple[str, Fraction, Fraction]]:
    """
    delta_i·gamma_j = eta_ij + gamma_i·delta_j para cabezas comunes y
    gamma_i·beta_j = theta_ij + delta_i·alpha_j para cabeza en cola (todo con gorro)
    @return {List[Tuple[str, Fraction, Fraction]]}: (identidad, lado izquierdo, lado derecho)
    """
    rows: List[Tuple[str, Fraction, Fraction]] = []

    def v(kind: VarKind, l: int) -> Fraction:
        return values[single(kind, l)]

    for i, j in same_end_pairs(diagram):
        rows.append((
            f"eta_{i},{j}",
            v("delta_hat", i) * v("gamma_hat", j),
            values[VarElement("eta", (i, j))] + v("gamma_hat", i) * v("delta_hat", j),
        ))
    for i, j in head_to_tail_pairs(diagram):
        rows.append((
            f"theta_{i},{j}",
            v("gamma_hat", i) * v("beta", j),
            values[VarElement("theta", (i, j))] + v("delta_hat", i) * v("alpha", j),
        ))
    return rows
