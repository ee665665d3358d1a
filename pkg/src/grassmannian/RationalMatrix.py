from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.LinearAlgebra import determinant, rank, row_echelon
from src.utils.ExceptionsClass import InvalidIndexError

Entry = Tuple[int, int]


# Función para convertir a IndexSet cuando se recibe un iterable
def as_index_set(values: IndexSet | Iterable[int]) -> IndexSet:
    return values if isinstance(values, IndexSet) else IndexSet.of(values)


# Clase para matrices racionales exactas con filas K y columnas N arbitrarias
class RationalMatrix:
    """
    Matriz K×N sobre los racionales. Las entradas ausentes valen cero.
    Los valores son inmutables: toda operación devuelve una matriz nueva.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(
        self,
        rows: IndexSet | Iterable[int],
        cols: IndexSet | Iterable[int],
        entries: Optional[Mapping[Entry, Fraction | int]] = None,
    ) -> None:
        self.rows = as_index_set(rows)
        self.cols = as_index_set(cols)
        stored: Dict[Entry, Fraction] = {}
        for (r, c), value in (entries or {}).items():
            if r not in self.rows or c not in self.cols:
                raise InvalidIndexError(f"Entrada ({r},{c}) fuera de {self.rows}×{self.cols}")
            value = Fraction(value)
            if value != 0:
                stored[(r, c)] = value
        self._entries = stored

    # Función para construir la matriz desde una lista de filas
    @classmethod
    def from_lists(
        cls,
        data: Sequence[Sequence[Fraction | int]],
        rows: Optional[Iterable[int]] = None,
        cols: Optional[Iterable[int]] = None,
    ) -> "RationalMatrix":
        rows = IndexSet.of(rows) if rows is not None else IndexSet.interval(1, len(data))
        width = len(data[0]) if data else 0
        cols = IndexSet.of(cols) if cols is not None else IndexSet.interval(1, width)
        entries = {
            (r, c): value
            for r, row in zip(rows, data)
            for c, value in zip(cols, row)
        }
        return cls(rows, cols, entries)

    # Función para construir la matriz sin filas sobre un conjunto de columnas
    @classmethod
    def empty(cls, cols: IndexSet | Iterable[int]) -> "RationalMatrix":
        return cls((), cols)

    @property
    def k(self) -> int:
        return len(self.rows)

    # Función para obtener una entrada
    def get(self, r: int, c: int) -> Fraction:
        return self._entries.get((r, c), Fraction(0))

    # Función para iterar sobre las entradas no nulas
    def items(self) -> Iterator[Tuple[Entry, Fraction]]:
        return iter(self._entries.items())

    # Función para obtener una fila en el orden de las columnas
    def row(self, r: int) -> List[Fraction]:
        return [self.get(r, c) for c in self.cols]

    # Función para obtener una columna en el orden de las filas
    def column(self, c: int) -> List[Fraction]:
        return [self.get(r, c) for r in self.rows]

    # Función para obtener el soporte de una fila
    def support(self, r: int) -> FrozenSet[int]:
        return frozenset(c for c in self.cols if self.get(r, c) != 0)

    # Función para obtener la matriz como lista de filas
    def to_lists(self) -> List[List[Fraction]]:
        return [self.row(r) for r in self.rows]

    # Función para reemplazar entradas (devuelve una matriz nueva)
    def with_entries(self, updates: Mapping[Entry, Fraction | int]) -> "RationalMatrix":
        merged: Dict[Entry, Fraction | int] = dict(self._entries)
        merged.update(updates)
        return RationalMatrix(self.rows, self.cols, merged)

    # Función para multiplicar una fila por un escalar
    def scale_row(self, r: int, factor: Fraction | int) -> "RationalMatrix":
        return self.with_entries({(r, c): self.get(r, c) * factor for c in self.cols})

    # Función para renombrar las filas
    def relabel_rows(self, mapping: Mapping[int, int]) -> "RationalMatrix":
        rows = [mapping.get(r, r) for r in self.rows]
        entries = {(mapping.get(r, r), c): v for (r, c), v in self._entries.items()}
        return RationalMatrix(IndexSet.of(rows), self.cols, entries)

    # Función para restringir la matriz a un subconjunto de columnas
    def restrict_cols(self, cols: Iterable[int]) -> "RationalMatrix":
        keep = as_index_set(cols)
        return RationalMatrix(
            self.rows, keep, {(r, c): v for (r, c), v in self._entries.items() if c in keep}
        )

    # Función para apilar matrices con las mismas columnas (filas renumeradas 1..k)
    @staticmethod
    def stack(blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        cols = blocks[0].cols
        data: List[List[Fraction]] = []
        for block in blocks:
            if block.cols != cols:
                raise InvalidIndexError("Los bloques apilados deben compartir columnas")
            data.extend(block.to_lists())
        return RationalMatrix(
            IndexSet.interval(1, len(data)),
            cols,
            {(r + 1, c): v for r, row in enumerate(data) for c, v in zip(cols, row)},
        )

    # Función para calcular el menor de filas y columnas dadas
    def minor(self, cols: Sequence[int], rows: Optional[Sequence[int]] = None) -> Fraction:
        rows = list(self.rows) if rows is None else list(rows)
        return determinant([[self.get(r, c) for c in cols] for r in rows])

    # Función para calcular la coordenada de Plücker P_I
    def pluecker(self, index: Iterable[int]) -> Fraction:
        """
        Determinante del menor maximal con columnas I en orden creciente
        @param {Iterable[int]} index: Subconjunto de k columnas
        @return {Fraction}: P_I
        """
        cols = sorted(index)
        if len(cols) != self.k:
            raise InvalidIndexError(f"|I|={len(cols)} no coincide con k={self.k}")
        if len(set(cols)) != len(cols) or any(c not in self.cols for c in cols):
            raise InvalidIndexError(f"Subconjunto de columnas inválido: {cols}")
        return self.minor(cols)

    # Función para calcular todas las coordenadas de Plücker
    def plueckers(self) -> Dict[Tuple[int, ...], Fraction]:
        return {index: self.minor(index) for index in combinations(self.cols, self.k)}

    # Función para obtener el patrón de Plückers no nulos
    def nonzero_pattern(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(index for index, value in self.plueckers().items() if value != 0)

    # Función para verificar que todas las coordenadas de Plücker son >= 0
    def is_nonnegative(self) -> bool:
        return all(value >= 0 for value in self.plueckers().values())

    # Función para calcular el rango
    def rank(self) -> int:
        return rank(self.to_lists())

    # Función para obtener la base escalonada reducida del espacio de filas
    def row_space_basis(self) -> List[List[Fraction]]:
        return row_echelon(self.to_lists())[0]

    # Función para comparar espacios de filas
    def same_row_span(self, other: "RationalMatrix") -> bool:
        if self.cols != other.cols or self.k != other.k:
            return False
        return self.row_space_basis() == other.row_space_basis()

    # Función para serializar a JSON
    def to_json(self) -> Dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[r, c, str(v)] for (r, c), v in sorted(self._entries.items())],
        }

    # Función para leer desde JSON
    @classmethod
    def from_json(cls, data: Mapping) -> "RationalMatrix":
        return cls(
            data["rows"],
            data["cols"],
            {(int(r), int(c)): Fraction(v) for r, c, v in data.get("entries", [])},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        lines = [" ".join(str(v) for v in self.row(r)) for r in self.rows]
        return f"RationalMatrix({self.rows}x{self.cols}: [" + "; ".join(lines) + "])"
