from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from src.utils.ExceptionsClass import InvalidIndexError


# Clase para los conjuntos finitos de índices positivos con aritmética cíclica
@dataclass(frozen=True)
class IndexSet:
    elements: Tuple[int, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if any(e < 1 for e in elements):
            raise InvalidIndexError(f"Los índices deben ser positivos: {elements}")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise InvalidIndexError(f"Los índices deben ser estrictamente crecientes: {elements}")
        object.__setattr__(self, "elements", elements)

    # Función para construir el conjunto a partir de cualquier iterable
    @classmethod
    def of(cls, values: Iterable[int]) -> "IndexSet":
        values = list(values)
        if len(set(values)) != len(values):
            raise InvalidIndexError(f"Índices repetidos: {values}")
        return cls(tuple(sorted(values)))

    # Función para construir el intervalo {first, ..., last}
    @classmethod
    def interval(cls, first: int, last: int) -> "IndexSet":
        return cls(tuple(range(first, last + 1)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def __getitem__(self, position: int) -> int:
        return self.elements[position]

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    # Función para obtener la posición (desde 0) de un índice
    def position(self, i: int) -> int:
        try:
            return self.elements.index(i)
        except ValueError:
            raise InvalidIndexError(f"El índice {i} no pertenece a {self.elements}") from None

    # Función para obtener el sucesor cíclico i⊕1
    def succ(self, i: int, steps: int = 1) -> int:
        return self.elements[(self.position(i) + steps) % len(self.elements)]

    # Función para obtener el predecesor cíclico i⊖1
    def pred(self, i: int, steps: int = 1) -> int:
        return self.elements[(self.position(i) - steps) % len(self.elements)]

    # Función para agregar un índice nuevo
    def insert(self, i: int) -> "IndexSet":
        if i in self.elements:
            raise InvalidIndexError(f"El índice {i} ya pertenece a {self.elements}")
        return IndexSet.of(self.elements + (i,))

    # Función para quitar un índice
    def remove(self, i: int) -> "IndexSet":
        self.position(i)
        return IndexSet(tuple(e for e in self.elements if e != i))

    def __repr__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"
