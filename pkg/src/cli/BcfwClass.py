import json
import sys
from typing import Callable, Dict, List, Optional, TextIO

from src.ampl.PositiveZ import PositiveZ, make_positive_Z, z_panel
from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.cli.RunLogClass import RunLogClass
from src.cli.managers.BoundariesManager import BoundariesManager
from src.cli.managers.CellsManager import CellsManager
from src.cli.managers.InvertManager import InvertManager
from src.cli.managers.SeparateManager import SeparateManager
from src.cli.managers.VerifyManager import VerifyManager
from src.core.GlobalClass import GlobalClass
from src.types.configTypes import RunConfig
from src.utils.ExceptionsClass import BcfwError, InvalidDiagramError


class BcfwClass(GlobalClass):
    """Clase para ejecutar los comandos del gestor de celdas BCFW"""

    def __init__(self, config: "RunConfig", logs_dir: Optional[str] = None, stream: Optional[TextIO] = None):
        """
        Inicializa el gestor con la configuración de la ejecución
        @param {RunConfig} config: Configuración combinada (perfil y línea de comandos)
        @param {Optional[str]} logs_dir: Directorio de logs (por defecto LOGS_DIR)
        @param {Optional[TextIO]} stream: Salida de las tablas (por defecto stdout)
        """
        super().__init__(selected_config=config)
        self.run_config: RunConfig = config
        self.stream = stream if stream is not None else sys.stdout
        self.logger = RunLogClass(logs_dir) if config.get("log", True) else None

        # Inicializar gestores especializados
        self.cells_manager = CellsManager(self)
        self.separate_manager = SeparateManager(self)
        self.invert_manager = InvertManager(self)
        self.boundaries_manager = BoundariesManager(self)
        self.verify_manager = VerifyManager(self)

        self.commands: Dict[str, Callable[[], int]] = {
            "enumerate": self.cells_manager.enumerate,
            "convert": self.cells_manager.convert,
            "sample": self.cells_manager.sample,
            "separate": self.separate_manager.separate,
            "invert": self.invert_manager.invert,
            "boundaries": self.boundaries_manager.boundaries,
            "verify": self.verify_manager.verify,
        }

    # Función para escribir una fila de la tabla en stdout
    def emit(self, record: Dict) -> None:
        """
        json: una línea JSON con claves ordenadas; text: pares clave: valor
        @param {Dict} record: Fila serializable
        """
        if self.run_config.get("format", "json") == "text":
            line = "  ".join(f"{key}: {value}" for key, value in record.items())
        else:
            line = json.dumps(record, sort_keys=True, ensure_ascii=False, default=str)
        print(line, file=self.stream)

    # Función para leer un diagrama en JSON o en texto "n=8; 1-6, 2-4"
    @staticmethod
    def parse_diagram(text: str) -> ChordDiagram:
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                return ChordDiagram.from_json(json.loads(stripped))
            except json.JSONDecodeError as e:
                raise InvalidDiagramError(f"JSON de diagrama inválido: {e}") from None
        return ChordDiagram.from_text(stripped)

    # Función para los diagramas de la ejecución: --diagram o todos los de (n, k)
    def diagrams(self, min_k: int = 0) -> List[ChordDiagram]:
        if self.run_config.get("diagram"):
            return [self.parse_diagram(self.run_config["diagram"])]
        self.validate_required_fields(["n"])
        n = self.run_config["n"]
        k = self.run_config.get("k")
        ks = [k] if k is not None else range(min_k, n - 3)
        return [d for kk in ks for d in enumerate_diagrams(n, kk)]

    # Función para el panel de Z: los nodos dados o el panel sembrado
    def panel(self, n: int, k: int) -> List[PositiveZ]:
        nodes = self.run_config.get("nodes")
        if nodes:
            return [make_positive_Z(n, k, nodes)]
        return z_panel(n, k, self.run_config.get("zs", 3), self.run_config.get("seed", 0))

    # Función principal: ejecutar el comando y devolver el código de salida
    def run(self) -> int:
        """
        Los errores del dominio se informan en stderr, en el log y como
        contraejemplo JSON en stdout
        @return {int}: 0 si todo pasó, 1 si hubo un error o una comprobación fallida
        """
        command = self.run_config.get("command", "")
        if hasattr(self, "logger") and self.logger is not None:
            self.logger.log_program_start(self.run_config)
            self.logger.log_command(command, self.run_config)
        self.view_selected_config(self.run_config)
        try:
            status = self.commands[command]()
        except BcfwError as e:
            self.colors.error(str(e))
            if hasattr(self, "logger") and self.logger is not None:
                self.logger.log_error(str(e), command)
            self.emit({"error": str(e), "type": type(e).__name__, "witness": e.witness()})
            status = 1
        if hasattr(self, "logger") and self.logger is not None:
            if status == 0:
                self.logger.log_success(f"Comando {command} terminado", "run")
            self.logger.log_program_end()
        return status
