from fractions import Fraction
from typing import List

# Constantes del generador congruencial lineal de 64 bits (MMIX de Knuth)
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1

# Rango de numeradores y denominadores de los racionales aleatorios
FRACTION_LOW = 1
FRACTION_HIGH = 100


# Clase para generar números pseudoaleatorios reproducibles
class RandomClass:
    """
    Generador congruencial lineal de 64 bits:
        state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64
    Los enteros se toman de los 32 bits altos del estado. Forma parte del
    contrato externo: la misma semilla produce la misma salida en cualquier
    implementación.
    """

    # Constructor de la clase
    def __init__(self, seed: int = 0) -> None:
        """
        Inicializa el generador
        @param {int} seed: Semilla de 64 bits (se reduce módulo 2^64)
        """
        self.seed = seed & LCG_MASK
        self.state = self.seed

    # Función para avanzar el estado y obtener 32 bits
    def next_u32(self) -> int:
        """
        Avanza el estado una vez
        @return {int}: Los 32 bits altos del nuevo estado
        """
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & LCG_MASK
        return self.state >> 32

    # Función para obtener un entero uniforme en [low, high]
    def randint(self, low: int, high: int) -> int:
        """
        Obtiene un entero en el intervalo cerrado [low, high]
        @param {int} low: Extremo inferior
        @param {int} high: Extremo superior
        @return {int}: Entero pseudoaleatorio
        """
        if high < low:
            raise ValueError(f"Intervalo vacío: [{low}, {high}]")
        return low + self.next_u32() % (high - low + 1)

    # Función para obtener un racional positivo p/q con p, q en [1, 100]
    def random_fraction(self) -> Fraction:
        numerator = self.randint(FRACTION_LOW, FRACTION_HIGH)
        denominator = self.randint(FRACTION_LOW, FRACTION_HIGH)
        return Fraction(numerator, denominator)

    # Función para obtener un racional en el intervalo abierto (0, 1)
    def random_unit(self) -> Fraction:
        return Fraction(self.randint(1, FRACTION_HIGH - 1), FRACTION_HIGH)

    # Función para obtener una lista de racionales positivos estrictamente crecientes
    def increasing_fractions(self, count: int, start: Fraction = Fraction(0)) -> List[Fraction]:
        """
        Obtiene valores crecientes sumando incrementos positivos
        @param {int} count: Cantidad de valores
        @param {Fraction} start: Valor a partir del cual se suma
        @return {List[Fraction]}: Lista estrictamente creciente
        """
        values: List[Fraction] = []
        current = Fraction(start)
        for _ in range(count):
            current += self.random_fraction()
            values.append(current)
        return values

    # Función para derivar un generador independiente a partir de etiquetas enteras
    def fork(self, *labels: int) -> "RandomClass":
        """
        Deriva un generador nuevo; no altera el estado del actual
        @param {int} labels: Etiquetas enteras (índice de diagrama, muestra, etc.)
        @return {RandomClass}: Generador derivado
        """
        state = self.seed
        for label in labels:
            state = (LCG_MULTIPLIER * (state ^ (label & LCG_MASK)) + LCG_INCREMENT) & LCG_MASK
        return RandomClass(state)
