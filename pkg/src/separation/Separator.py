# Funcionarios separadores entre pares de celdas BCFW

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Tuple

from src.ampl.Functionary import Functionary, favorite
from src.chords.ChordDiagram import Chord, ChordDiagram
from src.utils.ExceptionsClass import InvalidDiagramError, InvalidIndexError, InvariantViolation


# Clase para un separador: funcionario puro con signos fijos y opuestos en las dos celdas
@dataclass(frozen=True)
class Separator:
    functionary: Functionary
    sign_a: int
    sign_b: int
    cases: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.sign_a != -self.sign_b or abs(self.sign_a) != 1:
            raise InvariantViolation(
                f"Signos previstos inválidos: {self.sign_a}, {self.sign_b}",
                {"functionary": self.functionary.to_json(), "cases": list(self.cases)},
            )
        if self.functionary.is_zero() or not self.functionary.is_pure():
            raise InvariantViolation(
                f"El separador {self.functionary.to_text()} no es puro",
                {"functionary": self.functionary.to_json(), "cases": list(self.cases)},
            )

    # Función para intercambiar los papeles de las dos celdas
    def swapped(self) -> "Separator":
        return Separator(self.functionary, self.sign_b, self.sign_a, self.cases)

    def to_json(self) -> Dict:
        return {
            "functionary": self.functionary.to_json(),
            "text": self.functionary.to_text(),
            "sign_a": self.sign_a,
            "sign_b": self.sign_b,
            "cases": list(self.cases),
        }


def _multiplicity(functionary: Functionary, index: int) -> int:
    return Counter(functionary.type())[index]


def _check_indices(functionary: Functionary, allowed: set, operation: str) -> None:
    outside = sorted(functionary.indices() - allowed)
    if outside:
        raise InvalidIndexError(f"{operation}: índices fuera de rango {outside}")


# Función para la promoción por la inmersión superior (subdiagramas de la derecha distintos)
def promote_case_E(functionary: Functionary, i: int, n: int) -> Functionary:
    """
    Z_{n-1} <- <i,i+1,n-2,n> Z_{n-1} - <i,i+1,n-1,n> Z_{n-2}
    Z_n     <- <i,i+1,n-2,n-1> Z_n - <i,i+1,n-2,n> Z_{n-1} + <i,i+1,n-1,n> Z_{n-2}
    @param {Functionary} functionary: Funcionario con índices en {i+1, ..., n}
    @param {int} i: Cola de la última cuerda superior
    @param {int} n: Número de marcadores
    @return {Functionary}: Funcionario promovido, expandido y canónico
    """
    _check_indices(functionary, set(range(i + 1, n + 1)), "promote_case_E")
    t = Functionary.twistor
    alpha, beta, gamma = t(i, i + 1, n - 2, n), t(i, i + 1, n - 1, n), t(i, i + 1, n - 2, n - 1)
    return functionary.substitute({
        n - 1: [(alpha, n - 1), (-beta, n - 2)],
        n: [(gamma, n), (-alpha, n - 1), (beta, n - 2)],
    })


# Función para la promoción por la inmersión inferior falsa (mismo subdiagrama de la derecha)
def promote_case_F(functionary: Functionary, i: int, n: int) -> Functionary:
    """
    Z_{i+1} <- <i,n-2,n-1,n> Z_{i+1} - <i+1,n-2,n-1,n> Z_i
    @param {Functionary} functionary: Funcionario con índices en [i+1] ∪ {n}
    @param {int} i: Cola de la última cuerda superior
    @param {int} n: Número de marcadores
    @return {Functionary}: Funcionario promovido
    """
    _check_indices(functionary, set(range(1, i + 2)) | {n}, "promote_case_F")
    t = Functionary.twistor
    return functionary.substitute({i + 1: [(t(i, n - 2, n - 1, n), i + 1), (-t(i + 1, n - 2, n - 1, n), i)]})


def _last_top(diagram: ChordDiagram) -> Tuple[int, Chord]:
    l = diagram.top_chords()[-1]
    return l, diagram.chord(l)


# Signo de <i,i+1,j,n> en la celda, para la última cuerda superior (i,i+1,j,j+1)
def _head_twistor_sign(diagram: ChordDiagram, l: int) -> int:
    return (-1) ** (diagram.k - l - diagram.stat(l).below + 1)


def _strip_marker(diagram: ChordDiagram, h: int) -> ChordDiagram:
    def shift(m: int) -> int:
        return m - 1 if m > h else m

    return ChordDiagram.of(diagram.n - 1, [(shift(c.i), shift(c.j)) for c in diagram])


# Subdiagrama de los descendientes de la cuerda l sobre los marcadores {i+1, ..., n}, renumerados desde 1
def _descendant_part(diagram: ChordDiagram, l: int) -> ChordDiagram:
    c = diagram.chord(l)
    chords = [diagram.chord(m) for m in diagram.descendants(l)]
    return ChordDiagram.of(diagram.n - c.i, [(d.i - c.i, d.j - c.i) for d in chords])


# Subdiagrama sin la cuerda l ni sus descendientes, sobre [i+1] ∪ {n} con n renumerado a i+2
def _left_part(diagram: ChordDiagram, l: int) -> ChordDiagram:
    c = diagram.chord(l)
    removed = set(diagram.descendants(l)) | {l}
    chords = [diagram.chord(m) for m in range(1, diagram.k + 1) if m not in removed]
    return ChordDiagram.of(c.i + 2, [(d.i, d.j) for d in chords])


def _against_empty(diagram: ChordDiagram) -> Separator:
    n = diagram.n
    l, c = _last_top(diagram)
    return Separator(Functionary.twistor(c.i, c.i + 1, c.j, n), _head_twistor_sign(diagram, l), 1, ("A",))


def _separate(a: ChordDiagram, b: ChordDiagram) -> Separator:
    n = a.n
    # (A) uno de los diagramas es vacío
    if b.k == 0:
        return _against_empty(a)
    if a.k == 0:
        return _against_empty(b).swapped()

    # (B) marcador común sin usar: se quita el menor y se renumera
    common = sorted((set(a.unused_markers()) & set(b.unused_markers())) - {n})
    if common:
        h = common[0]
        inner = _separate(_strip_marker(a, h), _strip_marker(b, h))
        lifted = inner.functionary.relabel({m: m + 1 for m in range(h, n)})
        return Separator(lifted, inner.sign_a, inner.sign_b, ("B",) + inner.cases)

    la, ca = _last_top(a)
    lb, cb = _last_top(b)
    ends_a, ends_b = ca.j == n - 2, cb.j == n - 2

    # (C) solo uno usa el marcador n-1
    if ends_a != ends_b:
        if ends_b:
            return _separate(b, a).swapped()
        functionary = Functionary.twistor(ca.i, ca.i + 1, n - 2, n)
        return Separator(functionary, _head_twistor_sign(a, la), 1, ("C",))

    # (D) últimas cuerdas con colas distintas
    if ca.i != cb.i:
        return Separator(favorite(ca.i, ca.i + 1, cb.i, cb.i + 1, n - 2, n - 1, n), -1, 1, ("D",))

    i = ca.i
    sub_a, sub_b = _descendant_part(a, la), _descendant_part(b, lb)

    # (E) misma última cuerda, descendientes distintos
    if sub_a != sub_b:
        inner = _separate(sub_a, sub_b)
        lifted = inner.functionary.relabel({m: m + i for m in range(1, n - i + 1)})
        flip = (-1) ** _multiplicity(lifted, n - 1)
        return Separator(promote_case_E(lifted, i, n), flip * inner.sign_a, flip * inner.sign_b, ("E",) + inner.cases)

    # (F) mismo subdiagrama de la derecha: la parte izquierda difiere
    inner = _separate(_left_part(a, la), _left_part(b, lb))
    lifted = inner.functionary.relabel({i + 2: n})
    incs = 1 + a.stat(la).below
    flip = (-1) ** (incs * (_multiplicity(lifted, i + 1) + _multiplicity(lifted, n)))
    return Separator(promote_case_F(lifted, i, n), flip * inner.sign_a, flip * inner.sign_b, ("F",) + inner.cases)


# Función principal: separador de dos celdas BCFW con el mismo n (k puede diferir)
def separator(a: ChordDiagram, b: ChordDiagram) -> Separator:
    """
    Recursión sobre n con los casos A a F en ese orden
    @param {ChordDiagram} a: Diagrama de la primera celda
    @param {ChordDiagram} b: Diagrama de la segunda celda
    @return {Separator}: Funcionario puro con signos previstos opuestos
    """
    if a.n != b.n:
        raise InvalidIndexError(f"Los diagramas tienen n distintos: {a.n} y {b.n}")
    if a == b:
        raise InvalidDiagramError(f"No se puede separar una celda de sí misma: {a.to_text()}")
    return _separate(a, b)
