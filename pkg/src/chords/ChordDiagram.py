import re
from math import comb
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.utils.ExceptionsClass import InvalidDiagramError


# Clase para una cuerda (i, i+1, j, j+1): cola en el segmento i, cabeza en el segmento j
@dataclass(frozen=True, order=True)
class Chord:
    i: int
    j: int

    @property
    def is_short(self) -> bool:
        return self.j == self.i + 2

    # Función para verificar si esta cuerda contiene estrictamente a otra
    def contains(self, other: "Chord") -> bool:
        return self.i < other.i and other.j <= self.j

    # Función para verificar si dos cuerdas se cruzan
    def crosses(self, other: "Chord") -> bool:
        return self.i < other.i < self.j < other.j or other.i < self.i < other.j < self.j

    def __repr__(self) -> str:
        return f"({self.i},{self.i + 1},{self.j},{self.j + 1})"


# Clase para las estadísticas de una cuerda dentro de su diagrama
@dataclass(frozen=True)
class ChordStats:
    index: int
    parent: Optional[int]
    children: Tuple[int, ...]
    below: int
    behind: int
    beyond: Optional[int]
    sticky_child: bool
    chain_end: int
    chain_start: int
    same_end_child: bool
    next_head_to_tail: Optional[int]
    prev_head_to_tail: Optional[int]

    @property
    def is_top(self) -> bool:
        return self.parent is None


# Clase para los diagramas de cuerdas BCFW con n marcadores
@dataclass(frozen=True)
class ChordDiagram:
    n: int
    chords: Tuple[Chord, ...] = ()

    def __post_init__(self) -> None:
        chords = tuple(sorted(Chord(*c) if not isinstance(c, Chord) else c for c in self.chords))
        object.__setattr__(self, "chords", chords)
        self.validate()

    # Función para validar las reglas de un diagrama de cuerdas
    def validate(self) -> None:
        """
        Verifica: cola >= 1, cabeza <= n-2, j >= i+2, colas distintas y sin cruces
        """
        if self.n < 4:
            raise InvalidDiagramError(f"Se requieren al menos 4 marcadores, recibido n={self.n}")
        starts = [c.i for c in self.chords]
        if len(set(starts)) != len(starts):
            raise InvalidDiagramError(f"Dos cuerdas comparten la cola: {self.chords}")
        for chord in self.chords:
            if chord.i < 1 or chord.j > self.n - 2:
                raise InvalidDiagramError(f"La cuerda {chord} sale del rango 1..{self.n - 1}")
            if chord.j < chord.i + 2:
                raise InvalidDiagramError(f"La cuerda {chord} empieza y termina en segmentos vecinos")
        for idx, a in enumerate(self.chords):
            for b in self.chords[idx + 1:]:
                if a.crosses(b):
                    raise InvalidDiagramError(f"Las cuerdas {a} y {b} se cruzan")

    @property
    def k(self) -> int:
        return len(self.chords)

    # Función para obtener la cuerda l (desde 1)
    def chord(self, l: int) -> Chord:
        return self.chords[l - 1]

    def __iter__(self) -> Iterator[Chord]:
        return iter(self.chords)

    # Función para obtener el mapa cola -> índice de cuerda
    @cached_property
    def start_index(self) -> Dict[int, int]:
        return {c.i: l for l, c in enumerate(self.chords, 1)}

    # Función para obtener el mapa cabeza -> índices de cuerdas que terminan ahí
    @cached_property
    def end_index(self) -> Dict[int, Tuple[int, ...]]:
        ends: Dict[int, List[int]] = {}
        for l, c in enumerate(self.chords, 1):
            ends.setdefault(c.j, []).append(l)
        return {j: tuple(ls) for j, ls in ends.items()}

    # Función para calcular las estadísticas de todas las cuerdas
    @cached_property
    def stats(self) -> Tuple[ChordStats, ...]:
        k = self.k
        parents: List[Optional[int]] = []
        for l, c in enumerate(self.chords, 1):
            # El padre es el ancestro más cercano: el último anterior que la contiene
            parent = next((m for m in range(l - 1, 0, -1) if self.chord(m).contains(c)), None)
            parents.append(parent)
        children: Dict[Optional[int], List[int]] = {}
        for l, parent in enumerate(parents, 1):
            children.setdefault(parent, []).append(l)
        result: List[ChordStats] = []
        for l, c in enumerate(self.chords, 1):
            parent = parents[l - 1]
            below = sum(1 for other in self.chords if c.contains(other))
            beyond = None if parent is None else l - parent - 1
            end = l
            while self.chord(end).i + 1 in self.start_index:
                end = self.start_index[self.chord(end).i + 1]
            start = l
            while self.chord(start).i - 1 in self.start_index:
                start = self.start_index[self.chord(start).i - 1]
            same_end_child = parent is not None and self.chord(parent).j == c.j
            result.append(
                ChordStats(
                    index=l,
                    parent=parent,
                    children=tuple(children.get(l, [])),
                    below=below,
                    behind=k - l,
                    beyond=beyond,
                    sticky_child=c.i - 1 in self.start_index,
                    chain_end=end,
                    chain_start=start,
                    same_end_child=same_end_child,
                    next_head_to_tail=self.start_index.get(c.j),
                    prev_head_to_tail=next(
                        (m for m in self.end_index.get(c.i, ()) if parents[m - 1] == parent), None
                    ),
                )
            )
        return tuple(result)

    # Función para obtener las estadísticas de la cuerda l
    def stat(self, l: int) -> ChordStats:
        return self.stats[l - 1]

    # Función para obtener los índices de las cuerdas superiores
    def top_chords(self) -> Tuple[int, ...]:
        return tuple(s.index for s in self.stats if s.is_top)

    # Función para obtener los hijos de una cuerda (o las superiores si l es None)
    def children_of(self, l: Optional[int]) -> Tuple[int, ...]:
        if l is None:
            return self.top_chords()
        return self.stat(l).children

    # Función para obtener los descendientes de una cuerda
    def descendants(self, l: int) -> Tuple[int, ...]:
        c = self.chord(l)
        return tuple(m for m in range(1, self.k + 1) if c.contains(self.chord(m)))

    # Función para verificar si dos cuerdas son hermanas (las superiores lo son entre sí)
    def are_siblings(self, l: int, m: int) -> bool:
        return l != m and self.stat(l).parent == self.stat(m).parent

    # Función para obtener los marcadores que no toca ninguna cuerda
    def unused_markers(self) -> Tuple[int, ...]:
        used = set()
        for c in self.chords:
            used.update((c.i, c.i + 1, c.j, c.j + 1))
        return tuple(m for m in range(1, self.n + 1) if m not in used)

    # Función para serializar a JSON
    def to_json(self) -> Dict:
        return {"n": self.n, "chords": [[c.i, c.j] for c in self.chords]}

    # Función para leer desde JSON
    @classmethod
    def from_json(cls, data: Mapping) -> "ChordDiagram":
        try:
            return cls(int(data["n"]), tuple(Chord(int(i), int(j)) for i, j in data.get("chords", [])))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidDiagramError(f"JSON de diagrama inválido: {e}") from None

    # Función para la forma de texto "n=14; 1-11, 3-6, 8-10"
    def to_text(self) -> str:
        body = ", ".join(f"{c.i}-{c.j}" for c in self.chords)
        return f"n={self.n}; {body}" if body else f"n={self.n};"

    # Función para leer la forma de texto
    @classmethod
    def from_text(cls, text: str) -> "ChordDiagram":
        match = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;?(.*)", text)
        if not match:
            raise InvalidDiagramError(f"Texto de diagrama inválido: {text!r}")
        chords: List[Chord] = []
        for part in filter(None, (p.strip() for p in match.group(2).split(","))):
            pair = re.fullmatch(r"(\d+)\s*-\s*(\d+)", part)
            if not pair:
                raise InvalidDiagramError(f"Cuerda inválida: {part!r}")
            chords.append(Chord(int(pair.group(1)), int(pair.group(2))))
        return cls(int(match.group(1)), tuple(chords))

    # Función para construir el diagrama a partir de pares (i, j)
    @classmethod
    def of(cls, n: int, pairs: Sequence[Tuple[int, int]]) -> "ChordDiagram":
        return cls(n, tuple(Chord(i, j) for i, j in pairs))

    def __repr__(self) -> str:
        return f"ChordDiagram({self.to_text()})"


# Función para enumerar todos los diagramas de n marcadores y k cuerdas
def enumerate_diagrams(n: int, k: int) -> List[ChordDiagram]:
    """
    Colocación recursiva de cuerdas en orden lexicográfico (i, j)
    @param {int} n: Número de marcadores (n >= 4)
    @param {int} k: Número de cuerdas
    @return {List[ChordDiagram]}: Diagramas en orden lexicográfico, sin repetidos
    """
    if n < 4 or k < 0 or k > n - 4:
        return []
    found: List[ChordDiagram] = []

    def place(chords: List[Chord], first_start: int) -> None:
        if len(chords) == k:
            found.append(ChordDiagram(n, tuple(chords)))
            return
        for i in range(first_start, n - 3):
            for j in range(i + 2, n - 1):
                candidate = Chord(i, j)
                if any(candidate.crosses(c) for c in chords):
                    continue
                chords.append(candidate)
                place(chords, i + 1)
                chords.pop()

    place([], 1)
    return found


# Función para el número de celdas BCFW: C(n-3,k+1)·C(n-3,k)/(n-3)
def cell_count(n: int, k: int) -> int:
    if n < 4 or k < 0 or k > n - 4:
        return 0
    return comb(n - 3, k + 1) * comb(n - 3, k) // (n - 3)
