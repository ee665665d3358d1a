# Diagramas ⊕ de celdas BCFW, la biyección Psi y la permutación de tuberías

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.chords.ChordDiagram import Chord, ChordDiagram
from src.chords.DecoratedPermutation import DecoratedPermutation
from src.utils.ExceptionsClass import InvalidDiagramError

PLUS = "⊕"
EMPTY = "◯"
_ALIASES = {"+": PLUS, "o": EMPTY, "0": EMPTY, PLUS: PLUS, EMPTY: EMPTY}


# Clase para un diagrama ⊕: filas = colas, columnas = marcadores restantes en orden decreciente
@dataclass(frozen=True)
class OplusDiagram:
    n: int
    row_labels: Tuple[int, ...]
    filling: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "filling", tuple("".join(_ALIASES.get(ch, ch) for ch in row) for row in self.filling))
        if list(self.row_labels) != sorted(set(self.row_labels)):
            raise InvalidDiagramError(f"Etiquetas de fila no crecientes: {self.row_labels}")
        if len(self.filling) != len(self.row_labels):
            raise InvalidDiagramError("Cada fila necesita su relleno")
        for label, row in zip(self.row_labels, self.filling):
            if len(row) != self.row_length(label):
                raise InvalidDiagramError(f"La fila {label} debe tener {self.row_length(label)} casillas")
            if any(ch not in (PLUS, EMPTY) for ch in row):
                raise InvalidDiagramError(f"Símbolo desconocido en la fila {label}: {row!r}")

    @property
    def column_labels(self) -> Tuple[int, ...]:
        tails = set(self.row_labels)
        return tuple(m for m in range(self.n, 0, -1) if m not in tails)

    # Función para la longitud de la fila de una etiqueta: columnas con etiqueta mayor
    def row_length(self, label: int) -> int:
        return sum(1 for c in self.column_labels if c > label)

    # Función para obtener la casilla (fila r, columna c), ambas desde 0
    def box(self, r: int, c: int) -> Optional[str]:
        row = self.filling[r]
        return row[c] if c < len(row) else None

    # Función para las posiciones de los ⊕ de una fila
    def plus_positions(self, r: int) -> List[int]:
        return [c for c, ch in enumerate(self.filling[r]) if ch == PLUS]

    # Función para validar las reglas (a)-(d) de un diagrama ⊕ BCFW
    def validate(self) -> None:
        """
        (a) cuatro ⊕ por fila; (b) primera y última casilla con ⊕; (c) un ◯ entre
        el tercer y cuarto ⊕ no tiene ⊕ justo encima; (d) bajando desde un ◯ entre el
        segundo y tercer ⊕ se llega, pasando solo por ◯, a una fila donde la casilla
        queda entre el tercer y cuarto ⊕
        """
        for r, label in enumerate(self.row_labels):
            row = self.filling[r]
            pluses = self.plus_positions(r)
            if len(pluses) != 4:
                raise InvalidDiagramError(f"Regla (a): la fila {label} tiene {len(pluses)} ⊕")
            if row[0] != PLUS or row[-1] != PLUS:
                raise InvalidDiagramError(f"Regla (b): la fila {label} no empieza y termina en ⊕")
            for c in range(pluses[2] + 1, pluses[3]):
                if r > 0 and self.box(r - 1, c) == PLUS:
                    raise InvalidDiagramError(f"Regla (c): fila {label}, columna {self.column_labels[c]}")
            for c in range(pluses[1] + 1, pluses[2]):
                if not self._scan_down(r, c):
                    raise InvalidDiagramError(f"Regla (d): fila {label}, columna {self.column_labels[c]}")

    def _scan_down(self, r: int, c: int) -> bool:
        for below in range(r + 1, len(self.row_labels)):
            if self.box(below, c) != EMPTY:
                return False
            pluses = self.plus_positions(below)
            if len(pluses) == 4 and pluses[2] < c < pluses[3]:
                return True
        return False

    # Función para dibujar el diagrama con las etiquetas
    def to_text(self) -> str:
        width = max((len(str(c)) for c in self.column_labels), default=1)
        header = " " * (width + 2) + " ".join(str(c).rjust(width) for c in self.column_labels)
        lines = [header]
        for label, row in zip(self.row_labels, self.filling):
            lines.append(f"{str(label).rjust(width)}: " + " ".join(ch.rjust(width) for ch in row))
        return "\n".join(lines)

    # Función para serializar a JSON
    def to_json(self) -> Dict:
        return {"n": self.n, "rows": {str(label): row for label, row in zip(self.row_labels, self.filling)}}

    @classmethod
    def from_json(cls, data: Dict) -> "OplusDiagram":
        try:
            rows = sorted((int(label), row) for label, row in data["rows"].items())
            return cls(int(data["n"]), tuple(r[0] for r in rows), tuple(r[1] for r in rows))
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise InvalidDiagramError(f"JSON de diagrama ⊕ inválido: {e}") from None


# Función Psi: diagrama de cuerdas -> diagrama ⊕
def diagram_to_oplus(diagram: ChordDiagram) -> OplusDiagram:
    """
    Rellena las filas de abajo hacia arriba: las casillas con etiqueta menor que
    la cabeza reciben ◯…◯⊕ y marcan ◯ en las filas superiores; el resto de
    casillas libres reciben ⊕◯…◯⊕⊕
    @param {ChordDiagram} diagram: Diagrama válido
    @return {OplusDiagram}: Diagrama ⊕ con una fila por cuerda
    """
    tails = tuple(c.i for c in diagram.chords)
    columns = [m for m in range(diagram.n, 0, -1) if m not in set(tails)]
    rows: List[List[Optional[str]]] = [[None] * sum(1 for c in columns if c > t) for t in tails]
    for r in range(diagram.k - 1, -1, -1):
        head = diagram.chord(r + 1).j
        row = rows[r]
        suffix = [c for c in range(len(row)) if columns[c] < head]
        for c in suffix:
            row[c] = EMPTY
        if suffix:
            row[suffix[-1]] = PLUS
        for c in suffix[:-1]:
            for above in range(r):
                if c < len(rows[above]):
                    rows[above][c] = EMPTY
        free = [c for c in range(len(row)) if row[c] is None]
        if len(free) < 3:
            raise InvalidDiagramError(f"No caben los ⊕ de la cuerda {diagram.chord(r + 1)}")
        for c in free:
            row[c] = EMPTY
        for c in (free[0], free[-2], free[-1]):
            row[c] = PLUS
    return OplusDiagram(diagram.n, tails, tuple("".join(row) for row in rows))


# Función Psi inversa: diagrama ⊕ -> diagrama de cuerdas
def oplus_to_diagram(oplus: OplusDiagram) -> ChordDiagram:
    """
    La cabeza sale del tercer ⊕ de cada fila: si su etiqueta menos uno es una cola,
    la cabeza es el inicio de la cadena pegajosa que contiene esa cola
    """
    oplus.validate()
    tails = set(oplus.row_labels)
    columns = oplus.column_labels
    chords = []
    for r, tail in enumerate(oplus.row_labels):
        third = columns[oplus.plus_positions(r)[2]]
        head = third
        if third - 1 in tails:
            head = third - 1
            while head - 1 in tails:
                head -= 1
        chords.append(Chord(tail, head))
    return ChordDiagram(oplus.n, tuple(chords))


# Función para la permutación de tuberías de un diagrama ⊕
def oplus_to_permutation(oplus: OplusDiagram) -> DecoratedPermutation:
    """
    ◯ es un cruce y ⊕ un codo: desde la derecha gira hacia arriba y desde abajo
    hacia la izquierda. Una fila entra por su extremo derecho y una columna por su
    casilla inferior; salir por la izquierda da la etiqueta de la fila y salir por
    arriba la de la columna
    @param {OplusDiagram} oplus: Diagrama ⊕
    @return {DecoratedPermutation}: Permutación; las filas vacías son puntos fijos blancos
    """
    columns = oplus.column_labels
    mapping: Dict[int, int] = {}
    whites: List[int] = []
    for r, label in enumerate(oplus.row_labels):
        if not oplus.filling[r]:
            mapping[label] = label
            whites.append(label)
            continue
        mapping[label] = _flow(oplus, r, len(oplus.filling[r]) - 1, "left")
    for c, label in enumerate(columns):
        bottom = max((r for r in range(len(oplus.row_labels)) if c < len(oplus.filling[r])), default=None)
        mapping[label] = label if bottom is None else _flow(oplus, bottom, c, "up")
    return DecoratedPermutation.from_mapping(mapping, whites)


def _flow(oplus: OplusDiagram, r: int, c: int, direction: str) -> int:
    while True:
        if oplus.box(r, c) == PLUS:
            direction = "up" if direction == "left" else "left"
        if direction == "left":
            c -= 1
            if c < 0:
                return oplus.row_labels[r]
        else:
            r -= 1
            if r < 0:
                return oplus.column_labels[c]
