import os
from dotenv import load_dotenv

# Cargar variables de entorno desde .env
load_dotenv()

# Ruta del archivo de perfiles, en la raíz del repositorio
CONFIG_FILE = os.getenv("BCFW_CONFIG_FILE", os.path.join(os.path.dirname(__file__), "../../config.json"))

# Directorio de los logs diarios
LOGS_DIR = os.getenv("LOGS_DIR", os.path.join(os.path.dirname(__file__), "../../logs"))

# Valores por defecto de las ejecuciones
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))
DEFAULT_SAMPLES = int(os.getenv("DEFAULT_SAMPLES", "5"))
DEFAULT_ZS = int(os.getenv("DEFAULT_ZS", "3"))
DEFAULT_JOBS = int(os.getenv("DEFAULT_JOBS", "1"))
DEFAULT_POINTS = int(os.getenv("DEFAULT_POINTS", "100"))
