# Funcionarios: polinomios en coordenadas twistor con coeficientes racionales

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from src.ampl.PositiveZ import M, PositiveZ
from src.ampl.Twistors import twistor
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError

_TOKEN = re.compile(r"\s*([+-]|\d+(?:/\d+)?|<[\d\s,]*>|\*)")


# Clase para un twistor <i1 i2 i3 i4> con índices crecientes
@dataclass(frozen=True, order=True)
class TwistorSymbol:
    indices: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.indices) != M or any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidIndexError(f"Un twistor canónico necesita 4 índices crecientes: {self.indices}")

    # Función para ordenar los índices; devuelve el signo de la permutación (0 si se repiten)
    @staticmethod
    def canonical(indices: Sequence[int]) -> Tuple[int, Optional["TwistorSymbol"]]:
        if len(indices) != M:
            raise InvalidIndexError(f"Un twistor necesita 4 índices: {tuple(indices)}")
        if len(set(indices)) < M:
            return 0, None
        inversions = sum(1 for a in range(M) for b in range(a + 1, M) if indices[a] > indices[b])
        return (-1) ** inversions, TwistorSymbol(tuple(sorted(indices)))

    def __str__(self) -> str:
        return "<" + " ".join(map(str, self.indices)) + ">"


Monomial = Tuple[TwistorSymbol, ...]


# Clase para una suma de productos de twistors
class Functionary:
    """
    Guarda los términos como monomio -> coeficiente, sin coeficientes nulos.
    Un monomio es una tupla ordenada de twistors canónicos (con repetición).
    """

    def __init__(self, terms: Optional[Mapping[Monomial, Fraction | int]] = None) -> None:
        self.terms: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            self._accumulate(tuple(sorted(monomial)), Fraction(coefficient))

    def _accumulate(self, monomial: Monomial, coefficient: Fraction) -> None:
        value = self.terms.get(monomial, Fraction(0)) + coefficient
        if value == 0:
            self.terms.pop(monomial, None)
        else:
            self.terms[monomial] = value

    @classmethod
    def zero(cls) -> "Functionary":
        return cls()

    @classmethod
    def constant(cls, value: Fraction | int) -> "Functionary":
        return cls({(): value})

    # Función para el funcionario de un solo twistor, con el signo de ordenar sus índices
    @classmethod
    def twistor(cls, *indices: int) -> "Functionary":
        sign, symbol = TwistorSymbol.canonical(indices)
        if symbol is None:
            return cls()
        return cls({(symbol,): sign})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Functionary") -> "Functionary":
        result = Functionary(self.terms)
        for monomial, coefficient in other.terms.items():
            result._accumulate(monomial, coefficient)
        return result

    def __neg__(self) -> "Functionary":
        return Functionary({monomial: -c for monomial, c in self.terms.items()})

    def __sub__(self, other: "Functionary") -> "Functionary":
        return self + (-other)

    def __mul__(self, other: "Functionary | Fraction | int") -> "Functionary":
        if not isinstance(other, Functionary):
            return Functionary({monomial: c * Fraction(other) for monomial, c in self.terms.items()})
        result = Functionary()
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._accumulate(tuple(sorted(left + right)), a * b)
        return result

    def __rmul__(self, other: Fraction | int) -> "Functionary":
        return self * other

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Functionary) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # Función para los grados de los monomios
    def degrees(self) -> Set[int]:
        return {len(monomial) for monomial in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        if not self.is_homogeneous():
            raise InvalidIndexError("El funcionario no es homogéneo")
        return next(iter(self.degrees()), 0)

    @staticmethod
    def _index_multiset(monomial: Monomial) -> Tuple[int, ...]:
        return tuple(sorted(i for symbol in monomial for i in symbol.indices))

    # Función para decidir si todos los monomios usan el mismo multiconjunto de índices
    def is_pure(self) -> bool:
        return len({self._index_multiset(monomial) for monomial in self.terms}) <= 1

    # Función para el tipo: el multiconjunto común de índices de un funcionario puro
    def type(self) -> Tuple[int, ...]:
        if not self.is_pure():
            raise InvalidIndexError(f"El funcionario {self.to_text()} no es puro")
        return next((self._index_multiset(m) for m in self.terms), ())

    # Función para las multiplicidades d_1, ..., d_n del tipo
    def multiplicities(self, n: int) -> Tuple[int, ...]:
        counts = Counter(self.type())
        if any(i < 1 or i > n for i in counts):
            raise InvalidIndexError(f"El tipo usa índices fuera de [{n}]")
        return tuple(counts[i] for i in range(1, n + 1))

    # Función para evaluar en Y con una Z dada
    def evaluate(self, y: RationalMatrix, z: PositiveZ) -> Fraction:
        cache: Dict[TwistorSymbol, Fraction] = {}
        total = Fraction(0)
        for monomial, coefficient in self.terms.items():
            value = coefficient
            for symbol in monomial:
                if symbol not in cache:
                    cache[symbol] = twistor(y, z, symbol.indices)
                value *= cache[symbol]
            total += value
        return total

    def _sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    # Función para el formato de texto "+1*<1 4 5 9>*<2 7 8 9> -1*<2 4 5 9>*<1 7 8 9>"
    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for monomial, coefficient in self._sorted_terms():
            sign = "+" if coefficient > 0 else "-"
            parts.append(sign + "*".join([str(abs(coefficient))] + [str(s) for s in monomial]))
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "Functionary":
        """
        Acepta el formato de to_text; los índices de cada twistor se ordenan con su signo
        @param {str} text: Texto del funcionario
        @return {Functionary}: Funcionario leído
        """
        if not re.fullmatch(r"(?:\s*(?:[+-]|\d+(?:/\d+)?|<[\d\s,]*>|\*))*\s*", text):
            raise InvalidIndexError(f"Funcionario ilegible: {text!r}")
        result = cls()
        sign, coefficient, factors = 1, None, []
        started = False

        def flush() -> None:
            if not started:
                return
            value = Fraction(sign) * (coefficient if coefficient is not None else 1)
            term = cls.constant(value)
            for indices in factors:
                term = term * cls.twistor(*indices)
            result.terms = (result + term).terms

        for token in _TOKEN.findall(text):
            if token in "+-":
                flush()
                sign, coefficient, factors, started = (1 if token == "+" else -1), None, [], True
            elif token == "*":
                continue
            elif token.startswith("<"):
                indices = [int(x) for x in re.split(r"[\s,]+", token[1:-1].strip()) if x]
                factors.append(indices)
                started = True
            else:
                if coefficient is not None or factors:
                    raise InvalidIndexError(f"Coeficiente fuera de lugar en {text!r}")
                coefficient = Fraction(token)
                started = True
        flush()
        return result

    def to_json(self) -> Dict:
        return {
            "terms": [
                {"coefficient": str(coefficient), "twistors": [list(s.indices) for s in monomial]}
                for monomial, coefficient in self._sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Functionary":
        result = cls()
        for term in data.get("terms", []):
            value = cls.constant(Fraction(term["coefficient"]))
            for indices in term.get("twistors", []):
                value = value * cls.twistor(*indices)
            result = result + value
        return result

    # Función para el conjunto de índices que aparecen
    def indices(self) -> Set[int]:
        return {i for monomial in self.terms for symbol in monomial for i in symbol.indices}

    # Función para renombrar índices (los twistors se reordenan con su signo)
    def relabel(self, mapping: Mapping[int, int]) -> "Functionary":
        result = Functionary()
        for monomial, coefficient in self.terms.items():
            term = Functionary.constant(coefficient)
            for symbol in monomial:
                term = term * Functionary.twistor(*(mapping.get(i, i) for i in symbol.indices))
            result = result + term
        return result

    # Función para sustituir filas de Z por combinaciones y expandir multilinealmente
    def substitute(self, rules: Mapping[int, Sequence[Tuple["Functionary", int]]]) -> "Functionary":
        """
        Cada regla j -> [(c_1, j_1), ...] reemplaza Z_j por c_1 Z_{j_1} + ...; los
        índices sin regla quedan igual y los twistors con índices repetidos se anulan
        @param {Mapping} rules: Índice -> lista de (coeficiente, índice nuevo)
        @return {Functionary}: Funcionario expandido
        """
        result = Functionary()
        for monomial, coefficient in self.terms.items():
            term = Functionary.constant(coefficient)
            for symbol in monomial:
                term = term * self._substitute_symbol(symbol, rules)
            result = result + term
        return result

    @staticmethod
    def _substitute_symbol(symbol: TwistorSymbol, rules: Mapping[int, Sequence[Tuple["Functionary", int]]]) -> "Functionary":
        expansions: List[Tuple[Functionary, Tuple[int, ...]]] = [(Functionary.constant(1), ())]
        for i in symbol.indices:
            options = rules.get(i, [(Functionary.constant(1), i)])
            expansions = [(c * factor, chosen + (j,)) for c, chosen in expansions for factor, j in options]
        result = Functionary()
        for c, chosen in expansions:
            result = result + c * Functionary.twistor(*chosen)
        return result

    def __repr__(self) -> str:
        return f"Functionary({self.to_text()!r})"


# Función para el funcionario favorito <<i i'|j j'|h h'|l>>
def favorite(i: int, i2: int, j: int, j2: int, h: int, h2: int, l: int) -> Functionary:
    """
    <i j j' l><i' h h' l> - <i' j j' l><i h h' l>
    """
    t = Functionary.twistor
    return t(i, j, j2, l) * t(i2, h, h2, l) - t(i2, j, j2, l) * t(i, h, h2, l)

