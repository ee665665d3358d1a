import json

from src.chords.LatticeWalks import LatticeWalkPair, diagram_to_walks, walks_to_diagram
from src.chords.OplusDiagram import OplusDiagram, diagram_to_oplus, oplus_to_diagram
from src.chords.Permutations import algorithmic_permutation, to_permutation
from src.domino.CellPatterns import sample_cell
from src.domino.SignRules import extract_assignment
from src.utils.ExceptionsClass import InvalidDiagramError


class CellsManager:
    """Clase para enumerar, convertir y muestrear celdas"""

    def __init__(self, bcfw_instance):
        """Inicializa el gestor con una instancia de BcfwClass"""
        self.bcfw = bcfw_instance
        self.colors = bcfw_instance.colors
        self.config = bcfw_instance.run_config

    def enumerate(self) -> int:
        """Lista los diagramas de (n, k), o de todos los k si no se indica"""
        count = 0
        current_k, index = None, 0
        for diagram in self.bcfw.diagrams():
            index = index + 1 if diagram.k == current_k else 1
            current_k = diagram.k
            self.bcfw.emit({"n": diagram.n, "k": diagram.k, "index": index, "diagram": diagram.to_text()})
            count += 1
        self.colors.success(f"{count} diagrama(s)")
        return 0

    # Función para leer la entrada de convert: diagrama, caminos o diagrama ⊕
    def _source(self):
        try:
            if self.config.get("walks"):
                return walks_to_diagram(LatticeWalkPair.from_json(json.loads(self.config["walks"])))
            if self.config.get("oplus"):
                return oplus_to_diagram(OplusDiagram.from_json(json.loads(self.config["oplus"])))
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise InvalidDiagramError(f"Entrada de convert inválida: {e}") from None
        self.bcfw.validate_required_fields(["diagram"])
        return self.bcfw.parse_diagram(self.config["diagram"])

    def convert(self) -> int:
        """Pasa un diagrama (o sus caminos, o su diagrama ⊕) a la codificación pedida"""
        self.bcfw.validate_required_fields(["to"])
        diagram = self._source()
        target = self.config["to"]
        record = {"diagram": diagram.to_text(), "to": target}
        if target == "perm":
            pi = to_permutation(diagram)
            record.update(permutation=pi.to_json(), cycles=pi.to_text())
        elif target == "sigma":
            record.update(
                sigma=algorithmic_permutation(diagram).to_json(),
                sigma_prime=algorithmic_permutation(diagram, rightwards=True).to_json(),
            )
        elif target == "walks":
            record.update(walks=diagram_to_walks(diagram).to_json())
        elif target == "oplus":
            oplus = diagram_to_oplus(diagram)
            record.update(oplus=oplus.to_json(), text=oplus.to_text())
        else:
            record.update(chords=diagram.to_json()["chords"], n=diagram.n)
        self.bcfw.emit(record)
        return 0

    def sample(self) -> int:
        """Muestrea puntos de cada celda con semillas seed, seed+1, ..."""
        seed = self.config.get("seed", 0)
        count = 0
        for diagram in self.bcfw.diagrams():
            for offset in range(self.config.get("samples", 1)):
                point = sample_cell(diagram, seed + offset)
                self.bcfw.emit({
                    "diagram": diagram.to_text(),
                    "seed": seed + offset,
                    "matrix": point.to_json(),
                    "assignment": extract_assignment(point, diagram).to_json(),
                })
                count += 1
        self.colors.success(f"{count} punto(s) muestreados")
        return 0
