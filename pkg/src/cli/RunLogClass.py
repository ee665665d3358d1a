import os
import sys
from datetime import date, datetime
from typing import Optional

from src.consts.env import LOGS_DIR
from src.types.configTypes import LogStatus, RunConfig

SEPARATOR = "=" * 80
LOG_SUFFIX = "_bcfw_runs.log"


# Clase para el registro diario de las ejecuciones del gestor
class RunLogClass:

    def __init__(self, logs_dir: Optional[str] = None):
        """
        Prepara el directorio de registros
        @param {Optional[str]} logs_dir: Carpeta de los registros (por defecto LOGS_DIR)
        """
        self.logs_dir = os.path.abspath(logs_dir or LOGS_DIR)
        os.makedirs(self.logs_dir, exist_ok=True)

    # Un archivo por día: 2024-01-15_bcfw_runs.log
    def _path_for(self, day: date) -> str:
        return os.path.join(self.logs_dir, day.strftime("%Y-%m-%d") + LOG_SUFFIX)

    @staticmethod
    def _timestamp() -> str:
        return datetime.now().strftime("%Y-%m-%d %H:%M:%S")

    # Escribir nunca corta la ejecución: ante un fallo solo se avisa por stderr
    def _append(self, text: str) -> None:
        try:
            with open(self.get_today_log_path(), "a", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as e:
            print(f"⚠️ No se pudo escribir en el log: {e}", file=sys.stderr)

    # Función para escribir una línea [fecha] [ESTADO] OPERACION - detalles
    def log_operation(self, operation: str, details: str = "", status: "LogStatus" = "INFO") -> None:
        """
        @param {str} operation: Operación (COMMAND_VERIFY, CHECK, ERROR...)
        @param {str} details: Texto libre tras el guion
        @param {LogStatus} status: INFO, SUCCESS, WARNING o ERROR
        """
        line = f"[{self._timestamp()}] [{status}] {operation}"
        self._append(f"{line} - {details}\n" if details else line + "\n")

    def _tagged(self, status: "LogStatus", message: str, context: str) -> None:
        self.log_operation(status, f"{context} | {message}" if context else message, status)

    def log_command(self, command: str, config: "RunConfig") -> None:
        sizes = " ".join(f"{key}={config.get(key)}" for key in ("n", "k", "seed", "samples", "zs", "jobs"))
        self.log_operation(f"COMMAND_{command.upper()}", sizes)

    # Función para anotar el resultado de una batería de verify
    def log_check(self, suite: str, passed: int, failed: int) -> None:
        """
        La línea queda en SUCCESS solo si ninguna comprobación falló
        @param {str} suite: Nombre de la batería
        @param {int} passed: Comprobaciones correctas
        @param {int} failed: Comprobaciones fallidas
        """
        self.log_operation(
            "CHECK", f"Suite: {suite} | Passed: {passed} | Failed: {failed}", "SUCCESS" if failed == 0 else "ERROR"
        )

    def log_error(self, error_message: str, context: str = "") -> None:
        self._tagged("ERROR", error_message, context)

    def log_warning(self, warning_message: str, context: str = "") -> None:
        self._tagged("WARNING", warning_message, context)

    def log_success(self, success_message: str, context: str = "") -> None:
        self._tagged("SUCCESS", success_message, context)

    # Cabecera de la ejecución: comando, perfil, tamaño y semilla
    def log_program_start(self, config: "RunConfig") -> None:
        now = self._timestamp()
        entries = [
            "🚀 INICIO DEL GESTOR DE CELDAS BCFW",
            f"COMMAND_INFO - {config.get('command')}",
            f"PROFILE_INFO - {config.get('profile') or 'ninguno'}",
            f"SIZE_INFO - n={config.get('n')} | k={config.get('k')}",
            f"SEED_INFO - {config.get('seed')}",
        ]
        body = "".join(f"[{now}] [INFO] {entry}\n" for entry in entries)
        self._append(f"\n{SEPARATOR}\n{body}{SEPARATOR}\n")

    def log_program_end(self) -> None:
        self._append(f"[{self._timestamp()}] [INFO] 🏁 FIN DEL GESTOR DE CELDAS BCFW\n{SEPARATOR}\n\n")

    def get_today_log_path(self) -> str:
        return self._path_for(date.today())

    # Función para leer el registro de hoy (o un aviso si todavía no existe)
    def read_today_log(self) -> str:
        """
        @return {str}: Contenido del archivo de hoy
        """
        path = self.get_today_log_path()
        if not os.path.exists(path):
            return "Todavía no hay registro de hoy."
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return handle.read()
        except OSError as e:
            return f"No se pudo leer el log: {e}"
