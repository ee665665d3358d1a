# Tipos

from typing import TypedDict, Optional, Protocol, Literal, List, Dict


# Protocolo para el logger
class LoggerProtocol(Protocol):
    def log_operation(self, operation: str, details: str = "", status: "LogStatus" = "INFO") -> None: ...
    def log_command(self, command: str, config: "RunConfig") -> None: ...
    def log_check(self, suite: str, passed: int, failed: int) -> None: ...
    def log_warning(self, warning_message: str, context: str = "") -> None: ...
    def log_success(self, success_message: str, context: str = "") -> None: ...
    def log_error(self, error_message: str, context: str = "") -> None: ...
    def log_program_start(self, config: "RunConfig") -> None: ...
    def log_program_end(self) -> None: ...
    def read_today_log(self) -> str: ...
    def get_today_log_path(self) -> str: ...


# Tipos literales para los status de log
LogStatus = Literal["INFO", "SUCCESS", "WARNING", "ERROR"]

# Formatos de salida de las tablas
OutputFormat = Literal["json", "text"]

# Codificaciones de convert
Encoding = Literal["perm", "sigma", "walks", "oplus", "diagram"]


# Tipo para un perfil de ejecución guardado en config.json
class ProfileType(TypedDict, total=False):
    name: str
    n: int
    k: int
    seed: int
    samples: int
    zs: int
    nodes: List[int]
    jobs: int
    points: int


# Tipo para secciones de configuración
class ConfigSection(TypedDict, total=False):
    description: str
    n: int
    k: int
    seed: int
    samples: int
    zs: int
    jobs: int
    configs: List[ProfileType]


# Tipo para la configuración final de una ejecución (perfil < línea de comandos)
class RunConfig(TypedDict, total=False):
    command: str
    profile: Optional[str]
    n: Optional[int]
    k: Optional[int]
    seed: int
    samples: int
    zs: int
    nodes: Optional[List[int]]
    jobs: int
    points: int
    format: OutputFormat
    quiet: bool
    log: bool
    to: Optional[Encoding]
    diagram: Optional[str]
    walks: Optional[str]
    oplus: Optional[str]
    a: Optional[str]
    b: Optional[str]
    suites: Optional[List[str]]


# Tipo para una fila de la tabla de verify
class SuiteResult(TypedDict):
    suite: str
    passed: int
    failed: int
    witness: Optional[Dict]
