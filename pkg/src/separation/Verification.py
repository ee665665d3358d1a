# Verificación numérica de los separadores sobre muestras de las celdas y un panel de Z

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from src.ampl.PositiveZ import PositiveZ, z_panel
from src.ampl.Twistors import amap
from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.consts.env import DEFAULT_SAMPLES, DEFAULT_ZS
from src.domino.CellPatterns import sample_cell
from src.separation.Separator import Separator, separator
from src.utils.ExceptionsClass import InvariantViolation


# Tipo para una fila de la tabla de verificación
@dataclass
class PairCheck:
    a: ChordDiagram
    b: ChordDiagram
    separator: Separator
    evaluations: int = 0
    signs: Dict[str, List[int]] = field(default_factory=dict)

    def to_json(self) -> Dict:
        return {
            "a": self.a.to_text(),
            "b": self.b.to_text(),
            "n": self.a.n,
            "separator": self.separator.functionary.to_text(),
            "degree": self.separator.functionary.degree,
            "sign_a": self.separator.sign_a,
            "sign_b": self.separator.sign_b,
            "cases": "".join(self.separator.cases),
            "evaluations": self.evaluations,
        }


@lru_cache(maxsize=64)
def _cached_panel(n: int, k: int, zs: int, seed: int) -> Tuple[PositiveZ, ...]:
    return tuple(z_panel(n, k, zs, seed))


def _sign(value) -> int:
    return (value > 0) - (value < 0)


# Función para comprobar un separador en las dos celdas
def verify_separator(
    a: ChordDiagram,
    b: ChordDiagram,
    sep: Optional[Separator] = None,
    samples: int = DEFAULT_SAMPLES,
    zs: int = DEFAULT_ZS,
    seed: int = 0,
) -> PairCheck:
    """
    Evalúa el funcionario en Y = CZ para samples puntos de cada celda y cada Z del
    panel (un panel por k); el signo debe ser el previsto y nunca cero
    @param {ChordDiagram} a: Primera celda
    @param {ChordDiagram} b: Segunda celda
    @param {Optional[Separator]} sep: Separador a comprobar (por defecto, el calculado)
    @param {int} samples: Puntos por celda (semillas seed, seed+1, ...)
    @param {int} zs: Tamaño del panel de Z
    @param {int} seed: Semilla base
    @return {PairCheck}: Fila de la tabla con los signos observados
    """
    sep = sep if sep is not None else separator(a, b)
    check = PairCheck(a, b, sep)
    for label, diagram, expected in (("a", a, sep.sign_a), ("b", b, sep.sign_b)):
        observed: List[int] = []
        for z in _cached_panel(diagram.n, diagram.k, zs, seed):
            for sample in range(samples):
                point = sample_cell(diagram, seed + sample)
                value = sep.functionary.evaluate(amap(point, z), z)
                check.evaluations += 1
                if _sign(value) != expected:
                    raise InvariantViolation(
                        f"El separador de {a.to_text()} y {b.to_text()} vale {value} en la celda {label}",
                        {
                            "a": a.to_json(),
                            "b": b.to_json(),
                            "cell": label,
                            "sample_seed": seed + sample,
                            "z": z.to_json(),
                            "functionary": sep.functionary.to_json(),
                            "expected_sign": expected,
                            "value": str(value),
                        },
                    )
                observed.append(_sign(value))
        check.signs[label] = observed
    return check


# Función del proceso de trabajo (a nivel de módulo para poder serializarla)
def _verify_pair(job: Tuple[ChordDiagram, ChordDiagram, int, int, int]) -> PairCheck:
    a, b, samples, zs, seed = job
    return verify_separator(a, b, samples=samples, zs=zs, seed=seed)


# Función para listar todas las celdas de un n, para todo k
def all_cells(n: int) -> List[ChordDiagram]:
    return [d for k in range(0, n - 3) for d in enumerate_diagrams(n, k)]


# Función principal: verificar todos los pares de celdas distintas de un n
def verify_all_pairs(n: int, samples: int = DEFAULT_SAMPLES, zs: int = DEFAULT_ZS, seed: int = 0, jobs: int = 1) -> List[PairCheck]:
    """
    Recorre los pares en el orden de la enumeración; con jobs > 1 reparte los
    pares entre procesos y conserva ese orden en la salida
    @param {int} n: Número de marcadores
    @param {int} jobs: Procesos de trabajo
    @return {List[PairCheck]}: Una fila por par
    """
    jobs_list = [(a, b, samples, zs, seed) for a, b in combinations(all_cells(n), 2)]
    if jobs <= 1:
        return [_verify_pair(job) for job in jobs_list]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_verify_pair, jobs_list, chunksize=8))
