import argparse
import sys
from typing import List, Optional

from src.cli.BcfwClass import BcfwClass
from src.config.JsonConfigManager import JsonClass
from src.consts.env import CONFIG_FILE
from src.utils.ConsoleColors import ConsoleColors
from src.utils.ExceptionsClass import BcfwError

COMMANDS = ("enumerate", "convert", "sample", "separate", "invert", "boundaries", "verify")
ENCODINGS = ("perm", "sigma", "walks", "oplus", "diagram")


# Función para construir el parser de la línea de comandos
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcfw_cells", description="Gestor de celdas BCFW")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--zs", type=int)
    parser.add_argument("--nodes", type=int, nargs="+", help="Nodos crecientes de una Z fija")
    parser.add_argument("--jobs", type=int)
    parser.add_argument("--points", type=int, help="Puntos del experimento de sobreyectividad")
    parser.add_argument("--format", choices=("json", "text"))
    parser.add_argument("--to", choices=ENCODINGS)
    parser.add_argument("--diagram", help='Diagrama en JSON o como "n=8; 1-6, 2-4"')
    parser.add_argument("--walks", help="Par de caminos en JSON")
    parser.add_argument("--oplus", help="Diagrama ⊕ en JSON")
    parser.add_argument("--a", help="Primera celda de separate")
    parser.add_argument("--b", help="Segunda celda de separate")
    parser.add_argument("--suites", nargs="+", help="Baterías de verify")
    parser.add_argument("--profile", help="Perfil SECCION/NOMBRE de config.json")
    parser.add_argument("--quiet", action="store_true", default=None)
    parser.add_argument("--no-log", dest="log", action="store_false", default=None)
    return parser


# Función principal
def main(argv: Optional[List[str]] = None) -> int:
    # argparse sale con 2 ante un uso incorrecto
    arguments = vars(build_parser().parse_args(argv))
    profile = arguments.pop("profile")
    try:
        # Carga el perfil del json (si se pidió) y lo combina con los argumentos
        run_config = JsonClass(CONFIG_FILE).build_run_config(arguments, profile)
        return BcfwClass(run_config).run()
    except BcfwError as e:
        ConsoleColors(quiet=bool(arguments.get("quiet"))).error(str(e))
        return 1
    except KeyboardInterrupt:
        print("\n\nPrograma interrumpido por el usuario. ¡Hasta luego!", file=sys.stderr)
        return 130


# Ejecuta el programa
if __name__ == "__main__":
    sys.exit(main())
