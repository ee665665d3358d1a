# Plantilla de la matriz dominó y asignaciones de sus variables alpha..epsilon

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError
from src.utils.RandomClass import RandomClass

VARIABLE_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon")


# Tipo para las posiciones de la fila dominó de una cuerda
@dataclass(frozen=True)
class DominoTemplate:
    chord: int
    tail: Tuple[int, int]
    head: Tuple[int, int]
    inherited: Tuple[int, ...]
    parent: int | None
    sticky: bool

    # Función para el soporte de la fila: 5 posiciones (superior o pegajosa) o 6
    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.tail + self.head + self.inherited)


# Función para la plantilla de la fila l
def domino_template(diagram: ChordDiagram, l: int) -> DominoTemplate:
    """
    alpha, beta en (i, i+1), gamma, delta en (j, j+1); epsilon en n para una
    cuerda superior o multiplicando el dominó de cola del padre
    """
    c = diagram.chord(l)
    stat = diagram.stat(l)
    if stat.is_top:
        inherited: Tuple[int, ...] = (diagram.n,)
    else:
        p = diagram.chord(stat.parent)
        inherited = (p.i, p.i + 1)
    return DominoTemplate(l, (c.i, c.i + 1), (c.j, c.j + 1), inherited, stat.parent, stat.sticky_child)


# Función para el signo (-1)^below que llevan gamma y delta
def head_sign(diagram: ChordDiagram, l: int) -> int:
    return (-1) ** diagram.stat(l).below


# Función para el signo de epsilon: (-1)^behind en las superiores, (-1)^beyond en las demás
def epsilon_sign(diagram: ChordDiagram, l: int) -> int:
    stat = diagram.stat(l)
    return (-1) ** (stat.behind if stat.is_top else stat.beyond)


# Clase para una asignación de las variables de la matriz dominó
@dataclass(frozen=True)
class DominoAssignment:
    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]
    gamma: Tuple[Fraction, ...]
    delta: Tuple[Fraction, ...]
    epsilon: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for name in VARIABLE_NAMES:
            object.__setattr__(self, name, tuple(Fraction(x) for x in getattr(self, name)))
        if len({len(getattr(self, name)) for name in VARIABLE_NAMES}) != 1:
            raise InvalidIndexError("Todas las variables dominó necesitan un valor por cuerda")

    @property
    def k(self) -> int:
        return len(self.alpha)

    # Función para leer la variable de nombre dado de la cuerda l (desde 1)
    def value(self, name: str, l: int) -> Fraction:
        return getattr(self, name)[l - 1]

    # Función para reemplazar un valor (devuelve una asignación nueva)
    def replace(self, name: str, l: int, value: Fraction | int) -> "DominoAssignment":
        values = {n: list(getattr(self, n)) for n in VARIABLE_NAMES}
        values[name][l - 1] = Fraction(value)
        return DominoAssignment(*(tuple(values[n]) for n in VARIABLE_NAMES))

    # Función para construir la matriz dominó directamente desde las variables
    def to_matrix(self, diagram: ChordDiagram) -> RationalMatrix:
        """
        En un hijo pegajoso la posición i recibe alpha_l + epsilon_l·beta_padre
        @param {ChordDiagram} diagram: Diagrama con k cuerdas
        @return {RationalMatrix}: Matriz k×n
        """
        if diagram.k != self.k:
            raise InvalidIndexError(f"La asignación tiene {self.k} cuerdas y el diagrama {diagram.k}")
        entries: Dict[Tuple[int, int], Fraction] = {}
        for l in range(1, self.k + 1):
            template = domino_template(diagram, l)
            row: Dict[int, Fraction] = {}
            for position, name in zip(template.tail + template.head, ("alpha", "beta", "gamma", "delta")):
                row[position] = row.get(position, Fraction(0)) + self.value(name, l)
            eps = self.value("epsilon", l)
            if template.parent is None:
                row[diagram.n] = eps
            else:
                for position, name in zip(template.inherited, ("alpha", "beta")):
                    row[position] = row.get(position, Fraction(0)) + eps * self.value(name, template.parent)
            entries.update({(l, c): v for c, v in row.items()})
        return RationalMatrix(range(1, self.k + 1), range(1, diagram.n + 1), entries)

    # Función para los valores con signo corregido: epsilon, gamma y delta con gorro
    def hatted(self, diagram: ChordDiagram) -> Dict[str, Tuple[Fraction, ...]]:
        ls = range(1, self.k + 1)
        return {
            "epsilon": tuple(epsilon_sign(diagram, l) * self.value("epsilon", l) for l in ls),
            "gamma": tuple(head_sign(diagram, l) * self.value("gamma", l) for l in ls),
            "delta": tuple(head_sign(diagram, l) * self.value("delta", l) for l in ls),
        }

    # Función para eta_ij: menor 2×2 en la cabeza común de c_i y su descendiente c_j
    def eta(self, diagram: ChordDiagram, i: int, j: int) -> Fraction:
        if diagram.chord(i).j != diagram.chord(j).j or j not in diagram.descendants(i):
            raise InvalidIndexError(f"eta_{i}{j}: c_{j} no es descendiente de c_{i} con la misma cabeza")
        det = self.value("gamma", i) * self.value("delta", j) - self.value("delta", i) * self.value("gamma", j)
        exponent = diagram.stat(i).below - diagram.stat(j).below + 1
        return (-1) ** exponent * det

    # Función para theta_ij: menor 2×2 donde c_i termina y c_j empieza
    def theta(self, diagram: ChordDiagram, i: int, j: int) -> Fraction:
        if diagram.chord(i).j != diagram.chord(j).i:
            raise InvalidIndexError(f"theta_{i}{j}: c_{i} no termina donde empieza c_{j}")
        det = self.value("gamma", i) * self.value("beta", j) - self.value("delta", i) * self.value("alpha", j)
        return head_sign(diagram, i) * det

    # Función para serializar a JSON: {"1": {"alpha": "3/2", ...}, ...}
    def to_json(self) -> Dict:
        return {
            str(l): {name: str(self.value(name, l)) for name in VARIABLE_NAMES}
            for l in range(1, self.k + 1)
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DominoAssignment":
        try:
            k = len(data)
            columns = {
                name: tuple(Fraction(data[str(l)][name]) for l in range(1, k + 1))
                for name in VARIABLE_NAMES
            }
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidIndexError(f"JSON de asignación dominó inválido: {e}") from None
        return cls(*(columns[name] for name in VARIABLE_NAMES))


# Función para sortear una asignación que cumple las seis reglas de signos
def random_assignment(diagram: ChordDiagram, rng: RandomClass) -> DominoAssignment:
    """
    Primero fija los cocientes delta/gamma de las cuerdas de mayor a menor
    índice (cada uno por encima de los de sus hijos con la misma cabeza) y luego
    los cocientes beta/alpha (por encima de los de las cuerdas que terminan en
    la cola). Las magnitudes salen del generador.
    @param {ChordDiagram} diagram: Diagrama válido
    @param {RandomClass} rng: Generador reproducible
    @return {DominoAssignment}: Asignación válida, sin pasar por construct_matrix
    """
    k = diagram.k
    head_ratio: Dict[int, Fraction] = {}
    for l in range(k, 0, -1):
        floor = max(
            (head_ratio[c] for c in diagram.children_of(l) if diagram.stat(c).same_end_child),
            default=Fraction(0),
        )
        head_ratio[l] = floor + rng.random_fraction()
    values: Dict[str, List[Fraction]] = {name: [] for name in VARIABLE_NAMES}
    for l in range(1, k + 1):
        floor = max(
            (head_ratio[m] for m in diagram.end_index.get(diagram.chord(l).i, ())),
            default=Fraction(0),
        )
        tail_ratio = floor + rng.random_fraction()
        alpha = rng.random_fraction()
        gamma = head_sign(diagram, l) * rng.random_fraction()
        values["alpha"].append(alpha)
        values["beta"].append(tail_ratio * alpha)
        values["gamma"].append(gamma)
        values["delta"].append(head_ratio[l] * gamma)
        values["epsilon"].append(epsilon_sign(diagram, l) * rng.random_fraction())
    return DominoAssignment(*(tuple(values[name]) for name in VARIABLE_NAMES))
