from src.consts.env import DEFAULT_SAMPLES, DEFAULT_ZS
from src.separation.Verification import verify_all_pairs, verify_separator


class SeparateManager:
    """Clase para calcular y comprobar separadores entre celdas"""

    def __init__(self, bcfw_instance):
        """Inicializa el gestor con una instancia de BcfwClass"""
        self.bcfw = bcfw_instance
        self.colors = bcfw_instance.colors
        self.config = bcfw_instance.run_config

    def separate(self) -> int:
        """Un par con --a y --b, o todos los pares de celdas de --n"""
        samples = self.config.get("samples", DEFAULT_SAMPLES)
        zs = self.config.get("zs", DEFAULT_ZS)
        seed = self.config.get("seed", 0)
        if self.config.get("a") or self.config.get("b"):
            self.bcfw.validate_required_fields(["a", "b"])
            a = self.bcfw.parse_diagram(self.config["a"])
            b = self.bcfw.parse_diagram(self.config["b"])
            checks = [verify_separator(a, b, samples=samples, zs=zs, seed=seed)]
        else:
            self.bcfw.validate_required_fields(["n"])
            checks = verify_all_pairs(self.config["n"], samples, zs, seed, self.config.get("jobs", 1))
        for check in checks:
            self.bcfw.emit(check.to_json())
        self.colors.success(f"{len(checks)} par(es) separados")
        return 0
