import sys

from colorama import init, Fore, Style


# Clase para manejar los colores de la consola
class ConsoleColors:
    # Los mensajes van a stderr; stdout queda libre para la salida JSON
    def __init__(self, quiet: bool = False):
        # Inicializa colorama (para Windows)
        init(autoreset=True)
        self.quiet = quiet

    # Función para escribir un mensaje con color
    def _write(self, color: str, prefix: str, message: str) -> None:
        if self.quiet:
            return
        print(color + prefix + message + Style.RESET_ALL, file=sys.stderr)

    # Función para imprimir un mensaje de error
    def error(self, message: str) -> None:
        self._write(Fore.RED, "❌ ", message)

    # Función para imprimir un mensaje de éxito
    def success(self, message: str) -> None:
        self._write(Fore.GREEN, "✅ ", message)

    # Función para imprimir un mensaje de advertencia
    def warning(self, message: str) -> None:
        self._write(Fore.YELLOW, "⚠ ", message)

    # Función para imprimir un mensaje de información
    def info(self, message: str) -> None:
        self._write(Fore.CYAN, "ℹ ", message)
