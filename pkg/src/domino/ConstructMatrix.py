# Algoritmo construct-matrix: forma recursiva, forma iterativa y variante hacia la derecha

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Set, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.chords.DecoratedPermutation import DecoratedPermutation
from src.grassmannian.MatrixOperations import inc, pre, x_op, y_op
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError
from src.utils.RandomClass import RandomClass

StepKind = Literal["pre", "inc", "x", "y"]
PARAM_NAMES = ("s", "u", "v", "w")


# Clase para los 4k parámetros positivos (s_l, u_l, v_l, w_l) del algoritmo
@dataclass(frozen=True)
class ConstructionParams:
    s: Tuple[Fraction, ...] = ()
    u: Tuple[Fraction, ...] = ()
    v: Tuple[Fraction, ...] = ()
    w: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            object.__setattr__(self, name, tuple(Fraction(x) for x in getattr(self, name)))
        if len({len(self.s), len(self.u), len(self.v), len(self.w)}) != 1:
            raise InvalidIndexError("Los parámetros s, u, v, w deben tener la misma longitud")
        if any(x <= 0 for name in PARAM_NAMES for x in getattr(self, name)):
            raise InvalidIndexError("Los parámetros de construcción deben ser positivos")

    @property
    def k(self) -> int:
        return len(self.s)

    # Función para leer el parámetro de nombre dado de la cuerda l (desde 1)
    def value(self, name: str, l: int) -> Fraction:
        return getattr(self, name)[l - 1]

    # Función para construir parámetros con todos los valores iguales
    @classmethod
    def constant(cls, k: int, value: Fraction | int = 1) -> "ConstructionParams":
        values = (Fraction(value),) * k
        return cls(values, values, values, values)

    # Función para sortear parámetros a partir de un generador
    @classmethod
    def random(cls, k: int, rng: RandomClass) -> "ConstructionParams":
        """
        Sortea, cuerda por cuerda, s_l, u_l, v_l, w_l en ese orden
        @param {int} k: Número de cuerdas
        @param {RandomClass} rng: Generador reproducible
        @return {ConstructionParams}: Parámetros racionales positivos
        """
        drawn: Dict[str, List[Fraction]] = {name: [] for name in PARAM_NAMES}
        for _ in range(k):
            for name in PARAM_NAMES:
                drawn[name].append(rng.random_fraction())
        return cls(*(tuple(drawn[name]) for name in PARAM_NAMES))

    # Función para construir los parámetros desde un diccionario (nombre, cuerda) -> valor
    @classmethod
    def from_values(cls, k: int, values: Mapping[Tuple[str, int], Fraction]) -> "ConstructionParams":
        return cls(*(tuple(values[(name, l)] for l in range(1, k + 1)) for name in PARAM_NAMES))

    # Función para serializar a JSON: {"1": {"s": "3/2", ...}, ...}
    def to_json(self) -> Dict:
        return {
            str(l): {name: str(self.value(name, l)) for name in PARAM_NAMES}
            for l in range(1, self.k + 1)
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ConstructionParams":
        try:
            k = len(data)
            values = {(name, l): Fraction(data[str(l)][name]) for l in range(1, k + 1) for name in PARAM_NAMES}
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidIndexError(f"JSON de parámetros inválido: {e}") from None
        return cls.from_values(k, values)


# Tipo para un paso del algoritmo: operación, columna y, si aplica, fila o parámetro
@dataclass(frozen=True)
class ConstructionStep:
    kind: StepKind
    column: int
    row: Optional[int] = None
    param: Optional[Tuple[str, int]] = None

    def __repr__(self) -> str:
        if self.kind == "inc":
            return f"inc_{self.column};{self.row}"
        if self.param is not None:
            return f"{self.kind}_{self.column}({self.param[0]}{self.param[1]})"
        return f"{self.kind}_{self.column}"


# Clase que ejecuta los pasos del algoritmo y registra la permutación instrumentada
@dataclass
class MatrixBuilder:
    """
    Mantiene la matriz parcial y la permutación que acompaña a cada paso:
    pre agrega un punto fijo negro, inc uno blanco, x_c multiplica a la
    derecha por (c c⊕1) e y_c a la izquierda
    """

    diagram: ChordDiagram
    params: ConstructionParams
    record: bool = False
    matrix: RationalMatrix = field(init=False)
    steps: List[ConstructionStep] = field(init=False, default_factory=list)
    snapshots: List[RationalMatrix] = field(init=False, default_factory=list)
    _sigma: Dict[int, int] = field(init=False, default_factory=dict)
    _white: Set[int] = field(init=False, default_factory=set)

    def __post_init__(self) -> None:
        if self.params.k != self.diagram.k:
            raise InvalidIndexError(f"Se esperaban {self.diagram.k} cuerdas de parámetros, recibido {self.params.k}")
        n = self.diagram.n
        self.matrix = RationalMatrix.empty([n])
        self._sigma = {n: n}

    @property
    def permutation(self) -> DecoratedPermutation:
        return DecoratedPermutation.from_mapping(self._sigma, self._white)

    def _apply(self, step: ConstructionStep) -> None:
        current = self.matrix
        c = step.column
        if step.kind == "pre":
            self.matrix = pre(c, current)
            self._sigma[c] = c
        elif step.kind == "inc":
            self.matrix = inc(c, step.row, current)
            self._sigma[c] = c
            self._white.add(c)
        else:
            value = self.params.value(*step.param)
            partner = current.cols.succ(c)
            if step.kind == "x":
                self.matrix = x_op(c, value, current)
                self._sigma[c], self._sigma[partner] = self._sigma[partner], self._sigma[c]
            else:
                self.matrix = y_op(c, value, current)
                swap = {c: partner, partner: c}
                self._sigma = {a: swap.get(b, b) for a, b in self._sigma.items()}
            self._white = {p for p in self._white if self._sigma[p] == p}
        self.steps.append(step)
        if self.record:
            self.snapshots.append(self.matrix)

    # Función para agregar la columna m si todavía no existe
    def fill(self, m: int) -> None:
        if m not in self.matrix.cols:
            self._apply(ConstructionStep("pre", m))

    # Función para la cabeza de la cuerda l: inc_{i+1}, x_{i+1}(v), x_j(w), y_{(i+1)⊖1}(s)
    def head(self, l: int) -> None:
        c = self.diagram.chord(l)
        self._apply(ConstructionStep("inc", c.i + 1, row=l))
        self._apply(ConstructionStep("x", c.i + 1, param=("v", l)))
        self._apply(ConstructionStep("x", self.matrix.cols.succ(c.i + 1), param=("w", l)))
        self._apply(ConstructionStep("y", self.matrix.cols.pred(c.i + 1), param=("s", l)))

    # Función para la cabeza en la variante hacia la derecha: inc_j, x_j(w), x_{j+1}(s), y_{i+1}(v)
    def head_right(self, l: int) -> None:
        c = self.diagram.chord(l)
        self._apply(ConstructionStep("inc", c.j, row=l))
        self._apply(ConstructionStep("x", c.j, param=("w", l)))
        self._apply(ConstructionStep("x", c.j + 1, param=("s", l)))
        self._apply(ConstructionStep("y", c.i + 1, param=("v", l)))

    # Función para la cola: y_{i_h}(u_h) a lo largo de la cadena pegajosa que empieza en l
    def tail(self, l: int) -> None:
        if self.diagram.stat(l).sticky_child:
            return
        h = l
        while True:
            self._apply(ConstructionStep("y", self.diagram.chord(h).i, param=("u", h)))
            following = self.diagram.start_index.get(self.diagram.chord(h).i + 1)
            if following is None:
                break
            h = following


def _sub_construct(builder: MatrixBuilder, siblings: Sequence[int], parent_tail: int, parent_head: int) -> None:
    previous = parent_head
    for l in siblings:
        c = builder.diagram.chord(l)
        for m in range(previous - 1, c.j - 1, -1):
            builder.fill(m)
        builder.head(l)
        _sub_construct(builder, tuple(reversed(builder.diagram.children_of(l))), c.i, c.j)
        builder.tail(l)
        previous = c.i
    for m in range(previous - 1, parent_tail - 1, -1):
        builder.fill(m)


# Función para ejecutar el algoritmo y conservar el constructor con su registro
def run_construction(
    diagram: ChordDiagram,
    params: ConstructionParams,
    record: bool = False,
    rightwards: bool = False,
) -> MatrixBuilder:
    """
    Ejecuta la forma recursiva (o la variante hacia la derecha)
    @param {ChordDiagram} diagram: Diagrama válido
    @param {ConstructionParams} params: Parámetros positivos
    @param {bool} record: Guarda la matriz después de cada paso
    @param {bool} rightwards: Recorre las cuerdas superiores de izquierda a derecha
    @return {MatrixBuilder}: Constructor con la matriz final, los pasos y la permutación
    """
    builder = MatrixBuilder(diagram, params, record)
    if not rightwards:
        _sub_construct(builder, tuple(reversed(diagram.top_chords())), 1, diagram.n)
        return builder
    previous = -1
    for l in diagram.top_chords():
        c = diagram.chord(l)
        for m in list(range(previous + 2, c.i + 2)) + [c.j + 1]:
            builder.fill(m)
        builder.head_right(l)
        _sub_construct(builder, tuple(reversed(diagram.children_of(l))), c.i + 2, c.j)
        builder.tail(l)
        previous = c.j
    for m in range(previous + 2, diagram.n):
        builder.fill(m)
    return builder


# Función principal: matriz k×n de la celda BCFW para los parámetros dados
def construct_matrix(diagram: ChordDiagram, params: ConstructionParams) -> RationalMatrix:
    """
    Forma recursiva del algoritmo. La fila l corresponde a la cuerda l.
    @param {ChordDiagram} diagram: Diagrama válido
    @param {ConstructionParams} params: Parámetros positivos (uno de cada tipo por cuerda)
    @return {RationalMatrix}: Matriz con filas 1..k, columnas 1..n y Plückers >= 0
    """
    return run_construction(diagram, params).matrix


# Función para la variante que recorre las cuerdas superiores de izquierda a derecha
def construct_matrix_rightwards(diagram: ChordDiagram, params: ConstructionParams) -> RationalMatrix:
    return run_construction(diagram, params, rightwards=True).matrix


# Función para la permutación registrada durante la construcción
def instrumented_permutation(diagram: ChordDiagram, params: Optional[ConstructionParams] = None) -> DecoratedPermutation:
    params = params or ConstructionParams.constant(diagram.k)
    return run_construction(diagram, params).permutation


# Forma iterativa equivalente; solo se usa para contrastar con la recursiva
def _construct_matrix_iterative(diagram: ChordDiagram, params: ConstructionParams) -> MatrixBuilder:
    builder = MatrixBuilder(diagram, params)
    for m in range(diagram.n - 1, 0, -1):
        builder.fill(m)
        if m in diagram.start_index:
            builder.tail(diagram.start_index[m])
        for l in diagram.end_index.get(m, ()):
            builder.head(l)
    return builder
