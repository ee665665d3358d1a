# Permutaciones de un diagrama de cuerdas: pi (5-ciclos) y sigma (algorítmica)

from dataclasses import dataclass
from typing import List, Literal, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.chords.DecoratedPermutation import Cycle, DecoratedPermutation

FactorKind = Literal["tail", "head", "cycle"]


# Tipo para un factor etiquetado de sigma
@dataclass(frozen=True)
class Factor:
    kind: FactorKind
    chord: int
    points: Cycle


# Función para obtener i_{l*}+1, el segmento siguiente al final de la cadena pegajosa
def _after_chain(diagram: ChordDiagram, l: int) -> int:
    return diagram.chord(diagram.stat(l).chain_end).i + 1


# Función para calcular los cuatro valores (T, U, V, W) del 5-ciclo de la cuerda l
def five_cycle(diagram: ChordDiagram, l: int) -> Cycle:
    c = diagram.chord(l)
    starts = diagram.start_index
    t = c.i
    u = _after_chain(diagram, l)
    v = _after_chain(diagram, starts[c.j]) if c.j in starts else c.j
    if c.j not in starts:
        w = _after_chain(diagram, starts[c.j + 1]) if c.j + 1 in starts else c.j + 1
    else:
        m = diagram.chord(starts[c.j])
        w = _after_chain(diagram, starts[m.j]) if m.j in starts else m.j
    return (t, u, v, w, diagram.n)


# Función para calcular la permutación decorada pi de un diagrama
def to_permutation(diagram: ChordDiagram) -> DecoratedPermutation:
    """
    Producto de 5-ciclos (T_l U_l V_l W_l n), con el de la cuerda 1 a la izquierda
    @param {ChordDiagram} diagram: Diagrama válido
    @return {DecoratedPermutation}: Permutación con k anti-excedencias
    """
    cycles = [five_cycle(diagram, l) for l in range(1, diagram.k + 1)]
    return DecoratedPermutation.from_cycles(range(1, diagram.n + 1), cycles)


# Función para la clave de orden de una cabeza: (j, -i), las más profundas primero
def _head_key(diagram: ChordDiagram, l: int) -> Tuple[int, int]:
    c = diagram.chord(l)
    return (c.j, -c.i)


# Función para obtener la transposición de la cola de la cuerda l
def tail_transposition(diagram: ChordDiagram, l: int) -> Cycle:
    return (diagram.chord(l).i, _after_chain(diagram, l))


# Función para obtener a*_l: n para una cuerda superior, o la cola del padre más uno
def head_partner(diagram: ChordDiagram, l: int) -> int:
    parent = diagram.stat(l).parent
    return diagram.n if parent is None else diagram.chord(parent).i + 1


# Función para obtener la transposición de la cabeza de la cuerda l
def head_transposition(diagram: ChordDiagram, l: int) -> Cycle:
    return tuple(sorted((diagram.chord(l).i + 1, head_partner(diagram, l))))


# Función para obtener el 3-ciclo de la cuerda l
def three_cycle(diagram: ChordDiagram, l: int) -> Cycle:
    c = diagram.chord(l)
    return (c.i + 1, c.j, c.j + 1)


# Función para listar los factores etiquetados de sigma en orden de producto
def sigma_factors(diagram: ChordDiagram) -> List[Factor]:
    """
    Transposiciones en el orden de los extremos (cabezas antes que colas en el
    mismo segmento) seguidas de los 3-ciclos, el de la primera cabeza a la derecha
    @param {ChordDiagram} diagram: Diagrama válido
    @return {List[Factor]}: Factores; el primero de la lista es el de más a la izquierda
    """
    events: List[Tuple[Tuple[int, int, int], Factor]] = []
    for l in range(1, diagram.k + 1):
        c = diagram.chord(l)
        events.append(((c.i, 1, 0), Factor("tail", l, tail_transposition(diagram, l))))
        events.append(((c.j, 0, -c.i), Factor("head", l, head_transposition(diagram, l))))
    transpositions = [factor for _, factor in sorted(events, key=lambda e: e[0])]
    by_head = sorted(range(1, diagram.k + 1), key=lambda l: _head_key(diagram, l), reverse=True)
    cycles = [Factor("cycle", l, three_cycle(diagram, l)) for l in by_head]
    return transpositions + cycles


# Función para multiplicar una lista de factores
def product_of(diagram: ChordDiagram, factors: List[Factor]) -> DecoratedPermutation:
    return DecoratedPermutation.from_cycles(range(1, diagram.n + 1), [f.points for f in factors])


# Función para obtener el representante superior de la familia de una cuerda
def _family(diagram: ChordDiagram, l: int) -> int:
    while diagram.stat(l).parent is not None:
        l = diagram.stat(l).parent
    return l


# Función para calcular los factores de sigma' (algoritmo hacia la derecha)
def rightwards_factors(diagram: ChordDiagram) -> List[Factor]:
    """
    sigma' = tau'_g ... tau'_1 · rho'_1 ... rho'_g por familias de cuerdas superiores:
    la transposición (i+1, n) de la cuerda superior pasa a (i+1, j) y su 3-ciclo
    (i+1, j, j+1) pasa a (j, j+1, n)
    """
    factors = sigma_factors(diagram)
    tops = diagram.top_chords()
    taus: List[List[Factor]] = []
    rhos: List[List[Factor]] = []
    for top in tops:
        c = diagram.chord(top)
        tau = [f for f in factors if f.kind != "cycle" and _family(diagram, f.chord) == top]
        rho = [f for f in factors if f.kind == "cycle" and _family(diagram, f.chord) == top]
        tau = [Factor("head", top, (c.i + 1, c.j)) if (f.kind == "head" and f.chord == top) else f for f in tau]
        rho = [Factor("cycle", top, (c.j, c.j + 1, diagram.n)) if f.chord == top else f for f in rho]
        taus.append(tau)
        rhos.append(rho)
    result: List[Factor] = []
    for tau in reversed(taus):
        result.extend(tau)
    for rho in rhos:
        result.extend(rho)
    return result


# Función para calcular la permutación algorítmica sigma (o sigma')
def algorithmic_permutation(diagram: ChordDiagram, rightwards: bool = False) -> DecoratedPermutation:
    factors = rightwards_factors(diagram) if rightwards else sigma_factors(diagram)
    return product_of(diagram, factors)
