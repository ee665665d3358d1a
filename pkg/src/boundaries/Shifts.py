# Corrimientos de la cola o la cabeza de una cuerda

from dataclasses import dataclass
from typing import Dict, List, Literal, Tuple

from src.chords.ChordDiagram import Chord, ChordDiagram
from src.utils.ExceptionsClass import InvalidIndexError, UndefinedShiftError

End = Literal["tail", "head"]
Direction = Literal["left", "right"]

# Corrimiento que deshace cada familia, por nombre de la familia
INVERSES: Dict[str, Tuple[End, Direction]] = {
    "tail-left": ("tail", "right"),
    "tail-right": ("tail", "left"),
    "tail-right-short": ("head", "left"),
    "tail-right-sibling": ("head", "left"),
    "tail-right-rolling": ("head", "left"),
    "tail-right-sibling-rolling": ("head", "left"),
    "head-left": ("head", "right"),
    "head-left-child": ("head", "right"),
    "head-left-short": ("tail", "right"),
    "head-left-short-rolling": ("tail", "right"),
    "head-left-sticky": ("tail", "right"),
    "head-left-sticky-rolling": ("tail", "right"),
    "head-right": ("head", "left"),
    "head-right-sibling": ("head", "left"),
}


# Tipo para el resultado de un corrimiento
@dataclass(frozen=True)
class ShiftResult:
    source: ChordDiagram
    chord: int
    end: End
    direction: Direction
    kind: str
    target: ChordDiagram
    target_chord: int

    # Función para el corrimiento que devuelve el diagrama original
    @property
    def inverse(self) -> Tuple[End, Direction]:
        return INVERSES[self.kind]

    def to_json(self) -> Dict:
        return {
            "source": self.source.to_text(),
            "chord": self.chord,
            "end": self.end,
            "direction": self.direction,
            "kind": self.kind,
            "target": self.target.to_text(),
            "target_chord": self.target_chord,
        }


def _rebuild(diagram: ChordDiagram, l: int, new: Chord, moved_heads: Dict[int, int] | None = None) -> ChordDiagram:
    """
    Reemplaza la cuerda l por new y, si se indica, lleva las cabezas de las
    cuerdas que terminan en una clave del diccionario al valor
    """
    moved_heads = moved_heads or {}
    chords: List[Chord] = [new]
    for m, c in enumerate(diagram.chords, 1):
        if m == l:
            continue
        chords.append(Chord(c.i, moved_heads.get(c.j, c.j)))
    return ChordDiagram(diagram.n, tuple(chords))


def _tail_left(diagram: ChordDiagram, l: int) -> Tuple[str, Chord, Dict[int, int]]:
    c = diagram.chord(l)
    h = c.i
    if h == 1:
        raise UndefinedShiftError(f"la cuerda {l} empieza en (1,2)")
    if h - 1 in diagram.start_index:
        raise UndefinedShiftError(f"la cuerda {l} es un hijo pegajoso")
    if h in diagram.end_index:
        raise UndefinedShiftError(f"otra cuerda termina en ({h},{h + 1})")
    return "tail-left", Chord(h - 1, c.j), {}


def _tail_right(diagram: ChordDiagram, l: int) -> Tuple[str, Chord, Dict[int, int]]:
    c = diagram.chord(l)
    h, n = c.i, diagram.n
    if not c.is_short:
        if h + 1 in diagram.start_index:
            raise UndefinedShiftError(f"la cuerda {l} tiene un hijo pegajoso")
        return "tail-right", Chord(h + 1, c.j), {}
    if c.j >= n - 2:
        raise UndefinedShiftError(f"la cuerda corta {l} termina en ({n - 2},{n - 1})")
    follower = diagram.start_index.get(c.j)
    ancestors = c.j in diagram.end_index and diagram.end_index[c.j] != (l,)
    if follower is None and not ancestors:
        return "tail-right-short", Chord(h + 1, h + 3), {}
    if follower is not None and not ancestors:
        return "tail-right-sibling", Chord(h + 1, diagram.chord(follower).j), {}
    if follower is None:
        return "tail-right-rolling", Chord(h + 1, h + 3), {c.j: h + 1}
    return "tail-right-sibling-rolling", Chord(h + 1, diagram.chord(follower).j), {c.j: h + 1}


def _same_end_child(diagram: ChordDiagram, l: int) -> int | None:
    c = diagram.chord(l)
    return next((m for m in diagram.children_of(l) if diagram.chord(m).j == c.j), None)


def _head_left(diagram: ChordDiagram, l: int) -> Tuple[str, Chord, Dict[int, int]]:
    c = diagram.chord(l)
    h = c.i
    blocked_before = h == 1 or h - 1 in diagram.start_index
    if not c.is_short:
        child = _same_end_child(diagram, l)
        if child is None:
            return "head-left", Chord(h, c.j - 1), {}
        start = diagram.chord(child).i
        if start > h + 1:
            return "head-left-child", Chord(h, start), {}
        if h in diagram.end_index:
            return "head-left-sticky-rolling", Chord(h - 1, h + 1), {h: h + 1}
        if blocked_before:
            raise UndefinedShiftError(f"la cuerda {l} empieza en (1,2) o es un hijo pegajoso")
        return "head-left-sticky", Chord(h - 1, h + 1), {}
    if h in diagram.end_index:
        return "head-left-short-rolling", Chord(h - 1, h + 1), {h: h + 1}
    if blocked_before:
        raise UndefinedShiftError(f"la cuerda corta {l} empieza en (1,2) o es un hijo pegajoso")
    return "head-left-short", Chord(h - 1, h + 1), {}


def _head_right(diagram: ChordDiagram, l: int) -> Tuple[str, Chord, Dict[int, int]]:
    c = diagram.chord(l)
    parent = diagram.stat(l).parent
    if parent is not None and diagram.chord(parent).j == c.j:
        raise UndefinedShiftError(f"la cuerda {l} termina donde termina su padre")
    follower = diagram.start_index.get(c.j)
    if follower is not None:
        return "head-right-sibling", Chord(c.i, diagram.chord(follower).j), {}
    if c.j >= diagram.n - 2:
        raise UndefinedShiftError(f"la cuerda {l} termina en ({diagram.n - 2},{diagram.n - 1})")
    return "head-right", Chord(c.i, c.j + 1), {}


RULES = {
    ("tail", "left"): _tail_left,
    ("tail", "right"): _tail_right,
    ("head", "left"): _head_left,
    ("head", "right"): _head_right,
}


# Función principal: correr la cola o la cabeza de la cuerda l
def shift(diagram: ChordDiagram, l: int, end: End, direction: Direction) -> ShiftResult:
    """
    Los casos obstruidos saltan sobre la cuerda vecina; los "rolling" mueven
    además en un marcador las cabezas de las cuerdas que terminan en el punto
    @param {ChordDiagram} diagram: Diagrama de origen
    @param {int} l: Índice de la cuerda (desde 1)
    @param {End} end: "tail" o "head"
    @param {Direction} direction: "left" o "right"
    @return {ShiftResult}: Diagrama corrido y familia del corrimiento
    """
    if not 1 <= l <= diagram.k:
        raise InvalidIndexError(f"La cuerda {l} no existe en {diagram.to_text()}")
    if (end, direction) not in RULES:
        raise InvalidIndexError(f"Corrimiento desconocido: {end} {direction}")
    kind, new, moved_heads = RULES[(end, direction)](diagram, l)
    target = _rebuild(diagram, l, new, moved_heads)
    return ShiftResult(diagram, l, end, direction, kind, target, target.start_index[new.i])


# Función para listar todos los corrimientos definidos de un diagrama
def defined_shifts(diagram: ChordDiagram) -> List[ShiftResult]:
    found: List[ShiftResult] = []
    for l in range(1, diagram.k + 1):
        for end, direction in RULES:
            try:
                found.append(shift(diagram, l, end, direction))
            except UndefinedShiftError:
                continue
    return found
