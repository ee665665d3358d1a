# Extracción de las variables dominó de una matriz y verificación de las reglas de signos

from fractions import Fraction
from typing import List, Tuple

from src.chords.ChordDiagram import ChordDiagram
from src.domino.DominoAssignment import DominoAssignment, domino_template, epsilon_sign, head_sign
from src.grassmannian.LinearAlgebra import nullspace
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, SignRuleViolation

Violation = Tuple[int, int, str]


# Función para obtener la fila dominó de la cuerda l dentro del espacio de filas
def _domino_row(matrix: RationalMatrix, diagram: ChordDiagram, l: int) -> List[Fraction]:
    support = domino_template(diagram, l).support
    outside = [c for c in matrix.cols if c not in support]
    system = [[matrix.get(r, c) for r in matrix.rows] for c in outside]
    kernel = nullspace(system, matrix.k)
    if len(kernel) != 1:
        raise SignRuleViolation("support", l, f"La cuerda {l} no tiene una única fila con el soporte de su dominó")
    coefficients = kernel[0]
    return [
        sum((a * matrix.get(r, c) for a, r in zip(coefficients, matrix.rows)), Fraction(0))
        for c in matrix.cols
    ]


# Función para extraer alpha..epsilon, con cada fila escalada para que beta valga 1
def extract_assignment(matrix: RationalMatrix, diagram: ChordDiagram) -> DominoAssignment:
    """
    Las cuerdas se procesan en orden, así el padre ya está normalizado cuando
    se lee el epsilon de sus hijos
    @param {RationalMatrix} matrix: Matriz k×n que representa el punto
    @param {ChordDiagram} diagram: Diagrama de la celda
    @return {DominoAssignment}: Variables de la única matriz dominó con beta = 1
    """
    if matrix.k != diagram.k or list(matrix.cols) != list(range(1, diagram.n + 1)):
        raise InvalidIndexError(f"Se esperaba una matriz {diagram.k}×{diagram.n}")
    if matrix.rank() != diagram.k:
        raise SignRuleViolation("support", 1, "La matriz no tiene rango completo")
    cols = list(matrix.cols)
    alpha: List[Fraction] = []
    beta: List[Fraction] = []
    gamma: List[Fraction] = []
    delta: List[Fraction] = []
    epsilon: List[Fraction] = []
    for l in range(1, diagram.k + 1):
        template = domino_template(diagram, l)
        raw = _domino_row(matrix, diagram, l)
        scale = raw[cols.index(template.tail[1])]
        if scale == 0:
            raise SignRuleViolation(1, l, f"beta_{l} se anula")
        row = {c: x / scale for c, x in zip(cols, raw)}
        if template.parent is None:
            eps = row[diagram.n]
            first = row[template.tail[0]]
        else:
            parent_alpha = alpha[template.parent - 1]
            if parent_alpha == 0:
                raise SignRuleViolation(1, template.parent, f"alpha_{template.parent} se anula")
            eps = row[template.inherited[0]] / parent_alpha
            if template.sticky:
                first = row[template.tail[0]] - eps * beta[template.parent - 1]
            else:
                first = row[template.tail[0]]
                if row[template.inherited[1]] != eps * beta[template.parent - 1]:
                    raise SignRuleViolation("support", l, f"La fila {l} no es proporcional al dominó de cola del padre")
        alpha.append(first)
        beta.append(Fraction(1))
        gamma.append(row[template.head[0]])
        delta.append(row[template.head[1]])
        epsilon.append(eps)
    return DominoAssignment(tuple(alpha), tuple(beta), tuple(gamma), tuple(delta), tuple(epsilon))


# Función para listar las violaciones de las seis reglas de signos
def rule_violations(assignment: DominoAssignment, diagram: ChordDiagram) -> List[Violation]:
    """
    1: alpha, beta > 0. 2: (-1)^below gamma, delta > 0. 3: (-1)^behind epsilon > 0
    en las superiores. 4: (-1)^beyond epsilon > 0 en las demás. 5: delta/gamma del
    hijo con la misma cabeza menor que la del padre. 6: delta/gamma de la cuerda
    que termina en una cola menor que beta/alpha de la que empieza ahí.
    @return {List[Violation]}: Tripletas (regla, cuerda, mensaje) ordenadas por regla
    """
    found: List[Violation] = []
    value = assignment.value
    for l in range(1, diagram.k + 1):
        stat = diagram.stat(l)
        for name in ("alpha", "beta"):
            if value(name, l) <= 0:
                found.append((1, l, f"{name}_{l} = {value(name, l)} no es positivo"))
        for name in ("gamma", "delta"):
            if head_sign(diagram, l) * value(name, l) <= 0:
                found.append((2, l, f"{name}_{l} = {value(name, l)} con below = {stat.below}"))
        if epsilon_sign(diagram, l) * value("epsilon", l) <= 0:
            found.append((3 if stat.is_top else 4, l, f"epsilon_{l} = {value('epsilon', l)} tiene el signo equivocado"))
    # Los cocientes solo tienen sentido con alpha, gamma distintos de cero
    if not any(rule in (1, 2) for rule, _, _ in found):
        for l in range(1, diagram.k + 1):
            stat = diagram.stat(l)
            if stat.same_end_child:
                m = stat.parent
                if value("delta", l) / value("gamma", l) >= value("delta", m) / value("gamma", m):
                    found.append((5, l, f"delta_{l}/gamma_{l} no es menor que delta_{m}/gamma_{m}"))
            for m in diagram.end_index.get(diagram.chord(l).i, ()):
                if value("delta", m) / value("gamma", m) >= value("beta", l) / value("alpha", l):
                    found.append((6, l, f"delta_{m}/gamma_{m} no es menor que beta_{l}/alpha_{l}"))
    return sorted(found, key=lambda v: (v[0], v[1]))


# Función principal: extrae la asignación y exige las seis reglas
def check_sign_rules(matrix: RationalMatrix, diagram: ChordDiagram) -> DominoAssignment:
    """
    Verifica que la matriz represente un punto de la celda del diagrama
    @param {RationalMatrix} matrix: Matriz k×n
    @param {ChordDiagram} diagram: Diagrama de la celda
    @return {DominoAssignment}: Asignación extraída (beta = 1)
    """
    assignment = extract_assignment(matrix, diagram)
    violations = rule_violations(assignment, diagram)
    if violations:
        rule, chord, message = violations[0]
        raise SignRuleViolation(rule, chord, f"Regla {rule}, cuerda {chord}: {message}")
    return assignment


# Función para los menores eta (padre-hijo con la misma cabeza) y theta (cabeza en cola)
def pair_minors(assignment: DominoAssignment, diagram: ChordDiagram) -> List[Tuple[str, int, int, Fraction]]:
    minors: List[Tuple[str, int, int, Fraction]] = []
    for l in range(1, diagram.k + 1):
        stat = diagram.stat(l)
        if stat.same_end_child:
            minors.append(("eta", stat.parent, l, assignment.eta(diagram, stat.parent, l)))
        for m in diagram.end_index.get(diagram.chord(l).i, ()):
            minors.append(("theta", m, l, assignment.theta(diagram, m, l)))
    return minors
