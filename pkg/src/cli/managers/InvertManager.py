from src.ampl.Twistors import amap
from src.domino.CellPatterns import sample_cell
from src.domino.SignRules import extract_assignment
from src.inverse.InvertPoint import invert_point
from src.utils.ExceptionsClass import InvariantViolation


class InvertManager:
    """Clase para reconstruir puntos de las celdas a partir de su imagen"""

    def __init__(self, bcfw_instance):
        """Inicializa el gestor con una instancia de BcfwClass"""
        self.bcfw = bcfw_instance
        self.colors = bcfw_instance.colors
        self.config = bcfw_instance.run_config

    def invert(self) -> int:
        """
        Para cada celda, cada Z del panel y cada muestra: Y = CZ, preimagen y
        comparación con la matriz dominó del punto muestreado
        """
        seed = self.config.get("seed", 0)
        count = 0
        for diagram in self.bcfw.diagrams():
            for z_index, z in enumerate(self.bcfw.panel(diagram.n, diagram.k)):
                for offset in range(self.config.get("samples", 1)):
                    point = sample_cell(diagram, seed + offset)
                    reconstruction = invert_point(diagram, amap(point, z), z)
                    expected = extract_assignment(point, diagram).to_matrix(diagram)
                    if reconstruction.matrix != expected:
                        raise InvariantViolation(
                            f"La preimagen en {diagram.to_text()} no recupera el punto",
                            {"diagram": diagram.to_json(), "sample_seed": seed + offset, "z": z.to_json()},
                        )
                    self.bcfw.emit({
                        "diagram": diagram.to_text(),
                        "z": z_index,
                        "seed": seed + offset,
                        "matrix": reconstruction.matrix.to_json(),
                    })
                    count += 1
        self.colors.success(f"{count} punto(s) invertidos")
        return 0
