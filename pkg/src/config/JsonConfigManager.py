import json
from typing import Dict, Mapping, Optional

from src.consts.env import DEFAULT_JOBS, DEFAULT_POINTS, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_ZS
from src.core.GlobalClass import GlobalClass
from src.types.configTypes import ConfigSection, ProfileType, RunConfig
from src.utils.ExceptionsClass import ConfigError

# Campos numéricos que un perfil (o su sección) puede fijar
PROFILE_FIELDS = ("n", "k", "seed", "samples", "zs", "nodes", "jobs", "points")

DEFAULTS: RunConfig = {
    "seed": DEFAULT_SEED,
    "samples": DEFAULT_SAMPLES,
    "zs": DEFAULT_ZS,
    "jobs": DEFAULT_JOBS,
    "points": DEFAULT_POINTS,
    "format": "json",
    "quiet": False,
    "log": True,
}


class JsonConfigManager(GlobalClass):
    """Clase para manejar los perfiles de ejecución del JSON con secciones"""

    def __init__(self, json_file: str):
        """
        Inicializa el gestor de configuración JSON
        @param {str} json_file: Ruta al archivo de configuración
        """
        super().__init__()
        self.json_file = json_file
        self.sections_data: Dict[str, ConfigSection] = {}

    # Función para cargar las secciones del archivo de configuración
    def load_sections(self) -> Dict[str, ConfigSection]:
        """
        @return {Dict[str, ConfigSection]}: Secciones disponibles
        """
        self.validate_required_fields([], self.json_file)
        try:
            with open(self.json_file, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{self.json_file} no es un JSON válido: {e}") from None
        self.sections_data = data.get("sections", {}) if isinstance(data, dict) else {}
        if not self.sections_data:
            raise ConfigError("No se encontraron secciones en el archivo de configuración")
        return self.sections_data

    # Función para buscar un perfil "SECCION/NOMBRE"
    def find_profile(self, reference: str) -> ProfileType:
        """
        Los valores de la sección son los valores por defecto de sus perfiles
        @param {str} reference: Referencia SECCION/NOMBRE
        @return {ProfileType}: Perfil con los valores de la sección aplicados
        """
        if not self.sections_data:
            self.load_sections()
        section_key, _, name = reference.partition("/")
        section = self.sections_data.get(section_key)
        if section is None:
            raise ConfigError(f"No existe la sección '{section_key}'")
        for config in section.get("configs", []):
            if config.get("name") == name:
                inherited = {field: section[field] for field in PROFILE_FIELDS if field in section}
                return {**inherited, **config}  # type: ignore
        raise ConfigError(f"No existe el perfil '{name}' en la sección '{section_key}'")

    # Función para combinar valores por defecto < perfil < línea de comandos
    def build_run_config(self, arguments: Mapping, profile: Optional[str] = None) -> RunConfig:
        """
        Los argumentos en None no pisan al perfil
        @param {Mapping} arguments: Argumentos de la línea de comandos
        @param {Optional[str]} profile: Referencia SECCION/NOMBRE o None
        @return {RunConfig}: Configuración de la ejecución
        """
        config: Dict = dict(DEFAULTS)
        if profile:
            found = self.find_profile(profile)
            config.update({field: found[field] for field in PROFILE_FIELDS if field in found})
        config.update({key: value for key, value in arguments.items() if value is not None})
        config["profile"] = profile
        return config  # type: ignore


# Alias para compatibilidad con código existente
JsonClass = JsonConfigManager
