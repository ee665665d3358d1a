# Descomposición media de Gr>=_{k,n}: piezas, signos fijos y separación por signos

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

from src.ampl.Functionary import Functionary, favorite
from src.ampl.PositiveZ import PositiveZ
from src.ampl.Twistors import amap
from src.grassmannian.Embeddings import middle_embedding, upper_embedding
from src.grassmannian.IndexSet import IndexSet
from src.grassmannian.MatrixOperations import pre
from src.grassmannian.PositiveSamples import random_positive_matrix
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, InvariantViolation
from src.utils.RandomClass import RandomClass

SignTable = List[Tuple[Functionary, int]]


# Tipo para una pieza de la descomposición: "pre" o S_{j,n;k1,k2}
@dataclass(frozen=True)
class MiddlePiece:
    kind: str
    j: int = 0
    k1: int = 0
    k2: int = 0

    @property
    def label(self) -> str:
        if self.kind == "pre":
            return "pre"
        return f"S_{{{self.j};{self.k1},{self.k2}}}"


# Tipo para el informe de la verificación
@dataclass
class MiddleReport:
    n: int
    k: int
    pieces: List[MiddlePiece] = field(default_factory=list)
    checked: int = 0
    separated: List[Tuple[str, str, str]] = field(default_factory=list)
    unseparated: List[Tuple[str, str]] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "pieces": [p.label for p in self.pieces],
            "checked": self.checked,
            "separated": [list(x) for x in self.separated],
            "unseparated": [list(x) for x in self.unseparated],
        }


# Función para listar las piezas: pre_{n-1}, S_{1;0,k-1} y las S_{j;k1,k2} con k1+k2 = k-1
def middle_pieces(n: int, k: int) -> List[MiddlePiece]:
    pieces = [MiddlePiece("pre")]
    if k == 0:
        return pieces
    pieces.append(MiddlePiece("S", 1, 0, k - 1))
    for k1 in range(0, k):
        k2 = k - 1 - k1
        for j in range(k1 + 2, n - k2 - 4 + 1):
            pieces.append(MiddlePiece("S", j, k1, k2))
    return pieces


# Función para muestrear un punto de una pieza
def sample_piece(piece: MiddlePiece, n: int, k: int, rng: RandomClass) -> RationalMatrix:
    if piece.kind == "pre":
        return pre(n - 1, random_positive_matrix(k, IndexSet.interval(1, n).remove(n - 1), rng))
    s1, s2, t1, t2 = (rng.random_fraction() for _ in range(4))
    if piece.j == 1:
        inner = random_positive_matrix(k - 1, IndexSet.interval(2, n), rng)
        return upper_embedding(1, s1, s2, t1, t2, inner)
    left = random_positive_matrix(piece.k1, IndexSet(tuple(range(1, piece.j + 2)) + (n,)), rng)
    right = random_positive_matrix(piece.k2, IndexSet.interval(piece.j, n - 1), rng)
    return middle_embedding(piece.j, s1, s2, t1, t2, left, right, n)


# Función para la tabla de signos fijos de una pieza
def sign_table(piece: MiddlePiece, n: int, k: int) -> SignTable:
    """
    pre: <j j+1 n-2 n> > 0 para j+1 < n-2. S_{i;k1,k2}: <i+1 n-2 n-1 n> con signo
    (-1)^(k-k1-1), <i n-2 n-1 n> con (-1)^(k-k1), <i i+1 n-2 n> negativo,
    <<i i+1|j j+1|n-2 n-1|n>> negativo si i < j <= n-4 y
    <<j j+1|i i+1|n-2 n-1|n>> positivo si j < i
    """
    t = Functionary.twistor
    if piece.kind == "pre":
        return [(t(j, j + 1, n - 2, n), 1) for j in range(1, n - 3)]
    i = piece.j
    table: SignTable = [
        (t(i + 1, n - 2, n - 1, n), (-1) ** (k - piece.k1 - 1)),
        (t(i, n - 2, n - 1, n), (-1) ** (k - piece.k1)),
        (t(i, i + 1, n - 2, n), -1),
    ]
    table += [(favorite(i, i + 1, j, j + 1, n - 2, n - 1, n), -1) for j in range(i + 1, n - 3)]
    table += [(favorite(j, j + 1, i, i + 1, n - 2, n - 1, n), 1) for j in range(1, i)]
    return table


# Función para comparar las tablas de dos piezas: un funcionario con signos opuestos las separa
def _separating(first: SignTable, second: SignTable) -> Functionary | None:
    for f, sign in first:
        for g, other in second:
            if f == g and sign != other:
                return f
            if f == -g and sign == other:
                return f
    return None


# Función principal de verificación de la descomposición media
def check_middle_decomposition(n: int, k: int, z: PositiveZ, seed: int, samples: int = 3) -> MiddleReport:
    """
    Muestrea cada pieza, comprueba su tabla de signos en Y = CZ y busca para cada
    par de piezas un funcionario con signos fijos opuestos
    @param {int} n: Número de marcadores
    @param {int} k: Dimensión
    @param {PositiveZ} z: Matriz positiva n×(k+4)
    @param {int} seed: Semilla del muestreo
    @param {int} samples: Puntos por pieza
    @return {MiddleReport}: Informe con las piezas y los pares separados
    """
    if z.n != n or z.k != k or k < 1:
        raise InvalidIndexError(f"Z debe ser {n}×{k + 4} y k >= 1")
    report = MiddleReport(n, k, middle_pieces(n, k))
    rng = RandomClass(seed)
    tables = {piece: sign_table(piece, n, k) for piece in report.pieces}
    for position, piece in enumerate(report.pieces):
        for sample in range(samples):
            point = sample_piece(piece, n, k, rng.fork(position, sample))
            y = amap(point, z)
            for functionary, sign in tables[piece]:
                value = functionary.evaluate(y, z)
                if sign * value <= 0:
                    raise InvariantViolation(
                        f"En {piece.label} el funcionario {functionary.to_text()} vale {value}",
                        {"piece": piece.label, "functionary": functionary.to_json(), "C": point.to_json(), "seed": seed},
                    )
                report.checked += 1
    for first, second in combinations(report.pieces, 2):
        witness = _separating(tables[first], tables[second])
        if witness is None:
            report.unseparated.append((first.label, second.label))
        else:
            report.separated.append((first.label, second.label, witness.to_text()))
    return report
