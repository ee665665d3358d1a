from collections import Counter

from src.boundaries.Pairing import boundary_table, pair_boundaries


class BoundariesManager:
    """Clase para las tablas de clasificación de fronteras"""

    def __init__(self, bcfw_instance):
        """Inicializa el gestor con una instancia de BcfwClass"""
        self.bcfw = bcfw_instance
        self.colors = bcfw_instance.colors
        self.config = bcfw_instance.run_config

    def boundaries(self) -> int:
        """Una fila por elemento de Var: SA o PAIRED con la celda vecina"""
        if self.config.get("diagram"):
            rows = [label.to_json() for label in pair_boundaries(self.bcfw.parse_diagram(self.config["diagram"]))]
        else:
            self.bcfw.validate_required_fields(["n"])
            n = self.config["n"]
            k = self.config.get("k")
            ks = [k] if k is not None else range(1, n - 3)
            rows = [row for kk in ks for row in boundary_table(n, kk, self.config.get("jobs", 1))]
        for row in rows:
            self.bcfw.emit(row)
        statuses = Counter(row["status"] for row in rows)
        self.colors.success(f"{statuses['SA']} frontera(s) SA y {statuses['PAIRED']} emparejada(s)")
        return 0
