from typing import Callable, Dict, Iterator, List, Optional

from src.ampl.MiddleDecomposition import check_middle_decomposition
from src.ampl.Twistors import amap, check_boundary_twistors
from src.boundaries.Pairing import classify_boundary, pair_boundaries, sa_witness
from src.chords.ChordDiagram import ChordDiagram, cell_count, enumerate_diagrams
from src.chords.LatticeWalks import diagram_to_walks, enumerate_walks, walks_to_diagram
from src.chords.OplusDiagram import diagram_to_oplus, oplus_to_diagram, oplus_to_permutation
from src.chords.Permutations import algorithmic_permutation, to_permutation
from src.consts.env import DEFAULT_POINTS, DEFAULT_SAMPLES, DEFAULT_ZS
from src.domino.CellPatterns import cell_pattern, sample_cell
from src.domino.ConstructMatrix import ConstructionParams, construct_matrix, instrumented_permutation
from src.domino.RecoverParams import recover_params
from src.domino.SignRules import check_sign_rules, extract_assignment
from src.inverse.IdentifyCell import surjectivity_experiment
from src.inverse.InvertPoint import invert_point
from src.separation.Verification import verify_all_pairs
from src.types.configTypes import SuiteResult
from src.utils.ExceptionsClass import BcfwError, InvalidIndexError, InvariantViolation
from src.utils.RandomClass import RandomClass

Check = Callable[[], None]

# Tamaños en los que la descomposición media distingue todas sus piezas
MIDDLE_SIZES = {(7, 1), (7, 2), (8, 1), (8, 2)}


def _expect(condition: bool, message: str, witness: Dict) -> None:
    if not condition:
        raise InvariantViolation(message, witness)


class VerifyManager:
    """Clase para las baterías de aceptación de verify"""

    def __init__(self, bcfw_instance):
        """Inicializa el gestor con una instancia de BcfwClass"""
        self.bcfw = bcfw_instance
        self.colors = bcfw_instance.colors
        self.config = bcfw_instance.run_config
        self.suites: Dict[str, Callable[[], Iterator[Check]]] = {
            "counts": self._counts,
            "permutations": self._permutations,
            "domino": self._domino,
            "inverse": self._inverse,
            "twistors": self._twistors,
            "boundaries": self._boundaries,
            "surjectivity": self._surjectivity,
            "middle": self._middle,
            "separation": self._separation,
        }

    @property
    def n(self) -> int:
        return self.config["n"]

    @property
    def seed(self) -> int:
        return self.config.get("seed", 0)

    @property
    def samples(self) -> int:
        return self.config.get("samples", DEFAULT_SAMPLES)

    # Función para los k de la ejecución: --k o todos
    def _ks(self) -> List[int]:
        k = self.config.get("k")
        return [k] if k is not None else list(range(0, self.n - 3))

    def _cells(self) -> List[ChordDiagram]:
        return [d for k in self._ks() for d in enumerate_diagrams(self.n, k)]

    # Baterías: cada una produce comprobaciones que lanzan BcfwError al fallar

    def _counts(self) -> Iterator[Check]:
        for k in self._ks():
            def check(k: int = k) -> None:
                found = (len(enumerate_diagrams(self.n, k)), len(enumerate_walks(self.n, k)))
                _expect(
                    found == (cell_count(self.n, k),) * 2,
                    f"Conteo de celdas equivocado para n={self.n}, k={k}",
                    {"n": self.n, "k": k, "found": list(found), "expected": cell_count(self.n, k)},
                )
            yield check

    def _permutations(self) -> Iterator[Check]:
        for diagram in self._cells():
            def check(d: ChordDiagram = diagram) -> None:
                pi = to_permutation(d)
                others = {
                    "sigma": algorithmic_permutation(d),
                    "sigma_prime": algorithmic_permutation(d, rightwards=True),
                    "pipes": oplus_to_permutation(diagram_to_oplus(d)),
                    "instrumented": instrumented_permutation(d),
                }
                for name, other in others.items():
                    _expect(other == pi, f"{name} difiere de pi en {d.to_text()}", {"diagram": d.to_json(), "check": name})
                _expect(walks_to_diagram(diagram_to_walks(d)) == d, f"Caminos sin ida y vuelta en {d.to_text()}", {"diagram": d.to_json()})
                _expect(oplus_to_diagram(diagram_to_oplus(d)) == d, f"Diagrama ⊕ sin ida y vuelta en {d.to_text()}", {"diagram": d.to_json()})
            yield check

    def _domino(self) -> Iterator[Check]:
        for diagram in self._cells():
            for offset in range(self.samples):
                def check(d: ChordDiagram = diagram, seed: int = self.seed + offset) -> None:
                    params = ConstructionParams.random(d.k, RandomClass(seed))
                    point = construct_matrix(d, params)
                    witness = {"diagram": d.to_json(), "params": params.to_json()}
                    _expect(point.is_nonnegative(), f"Plücker negativo en {d.to_text()}", witness)
                    check_sign_rules(point, d)
                    _expect(point.nonzero_pattern() == cell_pattern(d), f"Patrón de Plücker distinto en {d.to_text()}", witness)
                    _expect(recover_params(d, point) == params, f"Parámetros no recuperados en {d.to_text()}", witness)
                yield check

    def _inverse(self) -> Iterator[Check]:
        for diagram in self._cells():
            for z in self.bcfw.panel(diagram.n, diagram.k):
                for offset in range(self.samples):
                    def check(d: ChordDiagram = diagram, z=z, seed: int = self.seed + offset) -> None:
                        point = sample_cell(d, seed)
                        reconstruction = invert_point(d, amap(point, z), z)
                        _expect(
                            reconstruction.matrix == extract_assignment(point, d).to_matrix(d),
                            f"La preimagen en {d.to_text()} no recupera el punto",
                            {"diagram": d.to_json(), "sample_seed": seed, "z": z.to_json()},
                        )
                    yield check

    def _twistors(self) -> Iterator[Check]:
        for diagram in self._cells():
            if diagram.k == 0:
                continue
            for z in self.bcfw.panel(diagram.n, diagram.k):
                for offset in range(self.samples):
                    def check(d: ChordDiagram = diagram, z=z, seed: int = self.seed + offset) -> None:
                        check_boundary_twistors(sample_cell(d, seed), z, d)
                    yield check

    def _boundaries(self) -> Iterator[Check]:
        for diagram in self._cells():
            def check(d: ChordDiagram = diagram) -> None:
                for label in pair_boundaries(d):
                    if label.status == "SA":
                        sa_witness(d, label.star, self.seed)
                        continue
                    back = classify_boundary(label.partner, label.partner_star)
                    _expect(
                        (back.partner, back.partner_star) == (d, label.star),
                        f"Emparejamiento no simétrico en {d.to_text()} para {label.star}",
                        {"label": label.to_json(), "back": back.to_json()},
                    )
            yield check

    def _surjectivity(self) -> Iterator[Check]:
        for k in self._ks():
            if k == 0:
                continue
            def check(k: int = k) -> None:
                surjectivity_experiment(
                    self.n, k, self.seed, self.config.get("points", DEFAULT_POINTS), self.config.get("zs", DEFAULT_ZS), self.config.get("jobs", 1)
                )
            yield check

    def _middle(self) -> Iterator[Check]:
        for k in self._ks():
            if (self.n, k) not in MIDDLE_SIZES:
                continue
            for z in self.bcfw.panel(self.n, k):
                def check(k: int = k, z=z) -> None:
                    report = check_middle_decomposition(self.n, k, z, self.seed, self.samples)
                    _expect(report.unseparated == [], f"Piezas sin separar para n={self.n}, k={k}", report.to_json())
                yield check

    def _separation(self) -> Iterator[Check]:
        def check() -> None:
            verify_all_pairs(self.n, self.samples, self.config.get("zs", DEFAULT_ZS), self.seed, self.config.get("jobs", 1))
        yield check

    # Función para ejecutar una batería y contar sus comprobaciones
    def run_suite(self, name: str) -> SuiteResult:
        """
        Cada comprobación fallida suma uno a failed; se guarda el testigo de la primera
        @param {str} name: Nombre de la batería
        @return {SuiteResult}: Fila de la tabla de verify
        """
        passed, failed = 0, 0
        witness: Optional[Dict] = None
        for check in self.suites[name]():
            try:
                check()
                passed += 1
            except BcfwError as e:
                failed += 1
                if witness is None:
                    witness = {"error": str(e), "type": type(e).__name__, "witness": e.witness()}
                    self.colors.error(f"[{name}] {e}")
        if hasattr(self.bcfw, "logger") and self.bcfw.logger is not None:
            self.bcfw.logger.log_check(name, passed, failed)
        return {"suite": name, "passed": passed, "failed": failed, "witness": witness}

    def verify(self) -> int:
        """Ejecuta las baterías pedidas (todas por defecto) y emite la tabla de aprobados y fallos"""
        self.bcfw.validate_required_fields(["n"])
        names = self.config.get("suites") or list(self.suites)
        unknown = [name for name in names if name not in self.suites]
        if unknown:
            raise InvalidIndexError(f"Baterías desconocidas: {', '.join(unknown)}")
        if "middle" in names and not any((self.n, k) in MIDDLE_SIZES for k in self._ks()):
            message = f"La batería middle no tiene comprobaciones para n={self.n}"
            self.colors.warning(message)
            if hasattr(self.bcfw, "logger") and self.bcfw.logger is not None:
                self.bcfw.logger.log_warning(message, "verify")
        results = [self.run_suite(name) for name in names]
        for result in results:
            self.bcfw.emit(dict(result))
        failed = [r["suite"] for r in results if r["failed"]]
        if failed:
            self.colors.error(f"Baterías con fallos: {', '.join(failed)}")
            return 1
        self.colors.success(f"{len(results)} batería(s) sin fallos")
        return 0
