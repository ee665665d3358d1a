import os
from typing import List, Optional

from src.utils.ConsoleColors import ConsoleColors
from src.utils.ExceptionsClass import ConfigError
from src.types.configTypes import RunConfig, LoggerProtocol


# Clase abstracta para manejar las configuraciones globales
class GlobalClass:

    # Atributos opcionales que pueden ser agregados por clases hijas
    logger: Optional["LoggerProtocol"]
    config: RunConfig | None

    # Constructor de la clase
    def __init__(self, selected_config: Optional["RunConfig"] = None) -> None:
        # Inicializa los colores (en silencio con --quiet)
        quiet = bool(selected_config.get("quiet")) if selected_config else False
        self.colors = ConsoleColors(quiet=quiet)
        # Inicializa config como None por defecto
        self.config = selected_config

    # Función para imprimir la configuración seleccionada
    def view_selected_config(self, config: "RunConfig") -> None:
        """
        Imprime la configuración de la ejecución
        @param {RunConfig} config: La configuración seleccionada
        """
        self.colors.info("--------------------------------")
        self.colors.info(f"👉 Comando: {config.get('command')}")
        if config.get("profile"):
            self.colors.info(f"👉 Perfil: {config.get('profile')}")
        self.colors.info(f"👉 n: {config.get('n')}  k: {config.get('k')}")
        self.colors.info(f"👉 Semilla: {config.get('seed')}")
        self.colors.info(f"👉 Muestras: {config.get('samples')}  Panel Z: {config.get('zs')}")
        if config.get("nodes"):
            self.colors.info(f"👉 Nodos: {config.get('nodes')}")
        self.colors.info(f"👉 Procesos: {config.get('jobs')}")
        self.colors.info("--------------------------------")

    # Función para validar los campos requeridos
    def validate_required_fields(self, fields: List[str], path: Optional[str] = None) -> None:
        """
        Valida los campos requeridos
        @param {List[str]} fields: Los campos requeridos
        @param {Optional[str]} path: Ruta de un archivo que debe existir
        """
        # Verifica si faltan campos en la configuración seleccionada
        for field in fields:
            value = self.config.get(field) if isinstance(self.config, dict) else None
            if value is None or value == "":
                if hasattr(self, "logger") and self.logger is not None:
                    self.logger.log_error(f"Falta el campo '{field}'", "validate_required_fields")
                raise ConfigError(f"Falta el campo '{field}' en la configuración.")
        # Verifica si la ruta existe
        if path is not None and not os.path.exists(path):
            raise ConfigError(f"La ruta {path} no existe.")
