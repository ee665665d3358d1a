from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from src.grassmannian.IndexSet import IndexSet
from src.utils.ExceptionsClass import InvalidIndexError

Cycle = Tuple[int, ...]


# Clase para las permutaciones decoradas (puntos fijos blancos o negros)
@dataclass(frozen=True)
class DecoratedPermutation:
    domain: IndexSet
    images: Tuple[int, ...]
    white_fixed: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if sorted(self.images) != list(self.domain):
            raise InvalidIndexError(f"{self.images} no es una biyección de {self.domain}")
        object.__setattr__(self, "white_fixed", frozenset(self.white_fixed))
        if any(self(i) != i for i in self.white_fixed):
            raise InvalidIndexError("Solo los puntos fijos pueden ser blancos")

    # Función para construir la identidad (todos los puntos fijos negros)
    @classmethod
    def identity(cls, domain: IndexSet | Iterable[int]) -> "DecoratedPermutation":
        domain = domain if isinstance(domain, IndexSet) else IndexSet.of(domain)
        return cls(domain, tuple(domain))

    # Función para construir la permutación desde un diccionario
    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], white_fixed: Iterable[int] = ()) -> "DecoratedPermutation":
        domain = IndexSet.of(mapping.keys())
        return cls(domain, tuple(mapping[i] for i in domain), frozenset(white_fixed))

    # Función para construir el producto de ciclos, aplicados de derecha a izquierda
    @classmethod
    def from_cycles(cls, domain: IndexSet | Iterable[int], cycles: Sequence[Cycle]) -> "DecoratedPermutation":
        """
        pi(x) = c_1(c_2(...c_m(x))): el ciclo de más a la derecha actúa primero
        @param {IndexSet} domain: Conjunto de índices
        @param {Sequence[Cycle]} cycles: Ciclos (a b c ...) con a -> b -> c -> ... -> a
        @return {DecoratedPermutation}: Producto (puntos fijos negros)
        """
        domain = domain if isinstance(domain, IndexSet) else IndexSet.of(domain)
        mapping = {i: i for i in domain}
        for cycle in reversed(cycles):
            step = {a: b for a, b in zip(cycle, cycle[1:] + cycle[:1])}
            mapping = {i: step.get(v, v) for i, v in mapping.items()}
        return cls.from_mapping(mapping)

    def __call__(self, i: int) -> int:
        return self.images[self.domain.position(i)]

    # Función para obtener las posiciones de anti-excedencia
    def anti_excedances(self) -> List[int]:
        """
        i es anti-excedencia si pi(i) < i, o si i es un punto fijo blanco
        @return {List[int]}: Posiciones de anti-excedencia en orden creciente
        """
        return [i for i in self.domain if self(i) < i or i in self.white_fixed]

    # Función para contar anti-excedencias (es el k de la celda)
    def anti_excedance_count(self) -> int:
        return len(self.anti_excedances())

    # Función para obtener la notación de dos líneas (solo la segunda línea)
    def two_line(self) -> Tuple[int, ...]:
        return self.images

    # Función para obtener la descomposición en ciclos disjuntos
    def cycles(self) -> List[Cycle]:
        seen = set()
        result: List[Cycle] = []
        for start in self.domain:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    # Función para serializar a JSON
    def to_json(self) -> Dict:
        return {
            "domain": list(self.domain),
            "images": list(self.images),
            "white_fixed": sorted(self.white_fixed),
        }

    # Función para la forma de texto en ciclos
    def to_text(self) -> str:
        cycles = "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles()) or "()"
        whites = " blancos=" + ",".join(str(w) for w in sorted(self.white_fixed)) if self.white_fixed else ""
        return cycles + whites
