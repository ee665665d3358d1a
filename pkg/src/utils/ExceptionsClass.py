from typing import Any, Dict, Optional


class BcfwError(Exception):
    """Excepción base para los errores del gestor de celdas BCFW"""

    # Función para obtener el testigo serializable del error
    def witness(self) -> Dict[str, Any]:
        """
        Obtiene un testigo serializable en JSON que permite repetir la verificación
        @return {Dict[str, Any]}: Testigo del error (vacío por defecto)
        """
        return {}


class InvalidIndexError(BcfwError):
    """Excepción para índices repetidos, ausentes o fuera de rango"""
    pass


class InvalidDiagramError(BcfwError):
    """Excepción para diagramas de cuerdas (o codificaciones equivalentes) inválidos"""
    pass


class SignRuleViolation(BcfwError):
    """Excepción para una matriz que no cumple una regla de signos del dominó"""

    def __init__(self, rule: int | str, chord: int, message: str = "") -> None:
        self.rule = rule
        self.chord = chord
        super().__init__(message or f"Regla de signos {rule} violada en la cuerda {chord}")

    def witness(self) -> Dict[str, Any]:
        return {"rule": self.rule, "chord": self.chord}


class NotInCellImageError(BcfwError):
    """Excepción para puntos que no están en la celda (o en su imagen)"""
    pass


class DegenerateIntersectionError(BcfwError):
    """Excepción para intersecciones cuyo sistema de determinantes se anula"""
    pass


class InvariantViolation(BcfwError):
    """Excepción para contraejemplos de una propiedad que debe cumplirse siempre"""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None) -> None:
        self._witness = dict(witness or {})
        super().__init__(message)

    def witness(self) -> Dict[str, Any]:
        return self._witness

    # Conserva el testigo al cruzar procesos (--jobs)
    def __reduce__(self):
        return (self.__class__, (str(self), self._witness))


class UndefinedShiftError(BcfwError):
    """Excepción para un corrimiento de cuerda que no está definido"""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"Corrimiento no definido: {reason}")

    def witness(self) -> Dict[str, Any]:
        return {"reason": self.reason}


class OutOfScopeError(BcfwError):
    """Excepción para casos que quedan fuera del alcance del gestor"""
    pass


class ConfigError(BcfwError):
    """Excepción para perfiles o archivos de configuración inválidos"""
    pass
