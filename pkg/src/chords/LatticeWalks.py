# Pares de caminos reticulares no cruzados y la biyección Phi con los diagramas

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

from src.chords.ChordDiagram import Chord, ChordDiagram
from src.utils.ExceptionsClass import InvalidDiagramError


# Clase para un par de caminos: filas donde W_A y W_B bajan
@dataclass(frozen=True)
class LatticeWalkPair:
    n: int
    a_vertical: Tuple[int, ...]
    b_vertical: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_vertical", tuple(sorted(self.a_vertical)))
        object.__setattr__(self, "b_vertical", tuple(sorted(self.b_vertical)))
        if len(self.a_vertical) != len(self.b_vertical):
            raise InvalidDiagramError("Los dos caminos deben tener k pasos verticales")
        for steps in (self.a_vertical, self.b_vertical):
            if len(set(steps)) != len(steps) or any(s < 1 or s > self.n - 4 for s in steps):
                raise InvalidDiagramError(f"Pasos verticales fuera de [n-4]: {steps}")

    @property
    def k(self) -> int:
        return len(self.a_vertical)

    # Función para verificar que W_A queda por encima de W_B
    def is_noncrossing(self) -> bool:
        return all(a >= b for a, b in zip(self.a_vertical, self.b_vertical))

    # Función para serializar a JSON
    def to_json(self) -> Dict:
        return {"n": self.n, "a_vertical": list(self.a_vertical), "b_vertical": list(self.b_vertical)}

    @classmethod
    def from_json(cls, data: Dict) -> "LatticeWalkPair":
        return cls(int(data["n"]), tuple(data["a_vertical"]), tuple(data["b_vertical"]))


# Función para enumerar los pares no cruzados LW_{n,k}
def enumerate_walks(n: int, k: int) -> List[LatticeWalkPair]:
    if n < 4 or k < 0 or k > n - 4:
        return []
    subsets = list(combinations(range(1, n - 3), k))
    return [
        LatticeWalkPair(n, a, b)
        for b in subsets
        for a in subsets
        if all(x >= y for x, y in zip(a, b))
    ]


# Función para obtener los saltos a_l = J_{l+1} - J_l - 1 con J_{k+1} = n-3
def _gaps(walks: LatticeWalkPair) -> List[int]:
    bounds = list(walks.a_vertical) + [walks.n - 3]
    return [bounds[l + 1] - bounds[l] - 1 for l in range(walks.k)]


# Función para obtener los conjuntos de cabezas candidatas H_l (de la última cuerda hacia atrás)
def _candidate_heads(tails: Tuple[int, ...], gaps: List[int], n: int) -> List[List[int]]:
    k = len(tails)
    candidates: List[List[int]] = [[] for _ in range(k)]
    for l in range(k - 1, -1, -1):
        if l == k - 1:
            candidates[l] = list(range(tails[l] + 2, n - 1))
        else:
            inherited = candidates[l + 1][gaps[l + 1]:]
            candidates[l] = sorted(set(range(tails[l] + 2, tails[l + 1] + 1)) | set(inherited))
    return candidates


# Función Phi: par de caminos -> diagrama de cuerdas
def walks_to_diagram(walks: LatticeWalkPair) -> ChordDiagram:
    """
    Las colas son los pasos verticales de W_B; la cabeza j_l es el a_l-ésimo
    elemento (desde 0) de H_l
    @param {LatticeWalkPair} walks: Par no cruzado
    @return {ChordDiagram}: Diagrama correspondiente
    """
    if not walks.is_noncrossing():
        raise InvalidDiagramError(f"Los caminos se cruzan: {walks.to_json()}")
    tails = walks.b_vertical
    gaps = _gaps(walks)
    candidates = _candidate_heads(tails, gaps, walks.n)
    chords = []
    for l, tail in enumerate(tails):
        if gaps[l] >= len(candidates[l]):
            raise InvalidDiagramError(f"No hay cabeza disponible para la cola {tail}")
        chords.append(Chord(tail, candidates[l][gaps[l]]))
    return ChordDiagram(walks.n, tuple(chords))


# Función Phi inversa: diagrama de cuerdas -> par de caminos
def diagram_to_walks(diagram: ChordDiagram) -> LatticeWalkPair:
    tails = tuple(c.i for c in diagram.chords)
    k = diagram.k
    gaps = [0] * k
    candidates: List[List[int]] = [[] for _ in range(k)]
    for l in range(k - 1, -1, -1):
        if l == k - 1:
            candidates[l] = list(range(tails[l] + 2, diagram.n - 1))
        else:
            inherited = candidates[l + 1][gaps[l + 1]:]
            candidates[l] = sorted(set(range(tails[l] + 2, tails[l + 1] + 1)) | set(inherited))
        gaps[l] = candidates[l].index(diagram.chord(l + 1).j)
    first_gap = diagram.n - k - 4 - sum(gaps)
    a_vertical = []
    running = first_gap
    for l in range(k):
        a_vertical.append(running + l + 1)
        running += gaps[l]
    return LatticeWalkPair(diagram.n, tuple(a_vertical), tails)
