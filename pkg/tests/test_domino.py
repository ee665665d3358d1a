from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.chords.Permutations import to_permutation
from src.domino.CellPatterns import cell_pattern, sample_cell, top_chord_witnesses
from src.domino.ConstructMatrix import (
    ConstructionParams,
    ConstructionStep,
    _construct_matrix_iterative,
    construct_matrix,
    construct_matrix_rightwards,
    instrumented_permutation,
    run_construction,
)
from src.domino.DominoAssignment import DominoAssignment, random_assignment
from src.domino.RecoverParams import recover_params
from src.domino.SignRules import check_sign_rules, extract_assignment, pair_minors
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, NotInCellImageError, SignRuleViolation
from src.utils.RandomClass import RandomClass

DIAGRAMS_7 = [d for n in range(4, 8) for k in range(0, n - 3) for d in enumerate_diagrams(n, k)]
DIAGRAMS_8 = DIAGRAMS_7 + [d for k in range(0, 5) for d in enumerate_diagrams(8, k)]

S = (2, 3, 5)
U = (7, 11, 13)
V = (17, 19, 23)
W = (29, 31, 37)
PARAMS = ConstructionParams(S, U, V, W)


# Matrices finales conocidas

def test_three_chords_final_matrix(three_chords):
    s1, s2, s3 = S
    u1, u2, u3 = U
    v1, v2, v3 = V
    w1, w2, w3 = W
    expected = RationalMatrix.from_lists([
        [u1, 1, 0, 0, 0, 0, 0, 0, 0, 0, v1, w1 * v1, 0, s1],
        [u1 * s2, s2, u2, 1, 0, v2, w2 * v2, 0, 0, 0, 0, 0, 0, 0],
        [-u1 * s3, -s3, 0, 0, 0, 0, 0, u3, 1, v3, w3 * v3, 0, 0, 0],
    ])
    assert construct_matrix(three_chords, PARAMS) == expected


def test_three_chords_state_after_third_tail(three_chords):
    builder = run_construction(three_chords, PARAMS, record=True)
    position = builder.steps.index(ConstructionStep("y", 8, param=("u", 3)))
    state = builder.snapshots[position]
    v1, w1, s1, s3 = V[0], W[0], S[0], S[2]
    assert list(state.rows) == [1, 3]
    assert {c: state.get(1, c) for c in state.support(1)} == {2: 1, 11: -v1, 12: -w1 * v1, 14: -s1}
    assert {c: state.get(3, c) for c in state.support(3)} == {2: s3, 8: U[2], 9: 1, 10: V[2], 11: W[2] * V[2]}


def test_sticky_cell_final_matrix(sticky_cell):
    s1, s2, s3 = S
    u1, u2, u3 = U
    v1, v2, v3 = V
    w1, w2, w3 = W
    expected = RationalMatrix.from_lists([
        [u1, 1, 0, 0, 0, v1, w1 * v1 + w3 * v1, s1],
        [u1 * s2, s2 + u2, 1, v2, w2 * v2, 0, 0, 0],
        [-u1 * s3, -s3, 0, u3, 1 + w2 * u3, v3, w3 * v3, 0],
    ])
    matrix = construct_matrix(sticky_cell, PARAMS)
    assert matrix == expected
    # x_6 parte en dos pasos: las w de las cuerdas con la misma cabeza se suman
    assert matrix.get(1, 7) / matrix.get(1, 6) == W[0] + W[2]


def test_single_chord_row():
    diagram = ChordDiagram.of(6, [(1, 3)])
    params = ConstructionParams((7,), (2,), (3,), (5,))
    assert construct_matrix(diagram, params) == RationalMatrix.from_lists([[2, 1, 3, 15, 0, 7]])
    assert construct_matrix_rightwards(diagram, params) == RationalMatrix.from_lists([[6, 3, 1, 5, 0, 35]])


def test_empty_diagram_gives_empty_matrix():
    diagram = ChordDiagram(7)
    for matrix in (construct_matrix(diagram, ConstructionParams()), construct_matrix_rightwards(diagram, ConstructionParams())):
        assert matrix.k == 0
        assert list(matrix.cols) == list(range(1, 8))


def test_params_reject_nonpositive_values():
    with pytest.raises(InvalidIndexError):
        ConstructionParams((1,), (0,), (1,), (1,))
    with pytest.raises(InvalidIndexError):
        ConstructionParams((1, 2), (1,), (1,), (1,))
    with pytest.raises(InvalidIndexError):
        construct_matrix(ChordDiagram.of(6, [(1, 3)]), ConstructionParams())


def test_params_json_and_random_determinism():
    params = ConstructionParams.random(3, RandomClass(11))
    assert ConstructionParams.from_json(params.to_json()) == params
    assert params == ConstructionParams.random(3, RandomClass(11))
    assert PARAMS.to_json()["2"] == {"s": "3", "u": "11", "v": "19", "w": "31"}


# Formas equivalentes y permutación instrumentada

@pytest.mark.parametrize("diagram", DIAGRAMS_8, ids=lambda d: d.to_text())
def test_iterative_form_matches_recursive(diagram):
    params = ConstructionParams.random(diagram.k, RandomClass(3))
    recursive = run_construction(diagram, params)
    iterative = _construct_matrix_iterative(diagram, params)
    assert iterative.steps == recursive.steps
    assert iterative.matrix == recursive.matrix


@pytest.mark.parametrize("diagram", DIAGRAMS_8, ids=lambda d: d.to_text())
def test_instrumented_permutation_is_pi(diagram):
    assert instrumented_permutation(diagram) == to_permutation(diagram)


def test_three_chords_instrumented_permutation(three_chords):
    sigma = instrumented_permutation(three_chords, PARAMS)
    assert sigma.two_line() == (2, 11, 4, 6, 5, 7, 1, 9, 10, 12, 3, 14, 13, 8)
    assert sigma.white_fixed == frozenset()


@pytest.mark.parametrize("diagram", DIAGRAMS_8, ids=lambda d: d.to_text())
def test_rightwards_gives_same_cell(diagram):
    matrix = construct_matrix_rightwards(diagram, ConstructionParams.random(diagram.k, RandomClass(5)))
    assert matrix.is_nonnegative()
    assert matrix.nonzero_pattern() == cell_pattern(diagram)


@pytest.mark.parametrize("diagram", DIAGRAMS_7, ids=lambda d: d.to_text())
def test_rightwards_points_have_positive_preimage(diagram):
    rightwards = construct_matrix_rightwards(diagram, ConstructionParams.random(diagram.k, RandomClass(9)))
    matched = recover_params(diagram, rightwards)
    assert construct_matrix(diagram, matched).same_row_span(rightwards)


# Patrones de la celda

@pytest.mark.parametrize("diagram", DIAGRAMS_7, ids=lambda d: d.to_text())
def test_samples_are_nonnegative_with_a_fixed_pattern(diagram):
    first, second = sample_cell(diagram, 1), sample_cell(diagram, 2)
    assert first.is_nonnegative() and second.is_nonnegative()
    assert first.nonzero_pattern() == second.nonzero_pattern() == cell_pattern(diagram)


def test_sample_is_deterministic(three_chords):
    assert sample_cell(three_chords, 42) == sample_cell(three_chords, 42)
    assert sample_cell(three_chords, 42) != sample_cell(three_chords, 43)


@pytest.mark.parametrize("diagram", DIAGRAMS_8, ids=lambda d: d.to_text())
def test_top_chords_have_single_marker_witnesses(diagram):
    witnesses = top_chord_witnesses(diagram)
    assert set(witnesses) == set(diagram.top_chords())
    for l, by_marker in witnesses.items():
        assert len(by_marker) == 5
        assert all(index in cell_pattern(diagram) for index in by_marker.values())


# Reglas de signos

@pytest.mark.parametrize("diagram", DIAGRAMS_8, ids=lambda d: d.to_text())
def test_constructed_matrices_satisfy_sign_rules(diagram):
    matrix = sample_cell(diagram, 7)
    assignment = check_sign_rules(matrix, diagram)
    assert assignment.beta == (Fraction(1),) * diagram.k
    assert assignment.to_matrix(diagram).same_row_span(matrix)


def test_sticky_cell_extraction_reads_the_sticky_alpha(sticky_cell):
    assignment = extract_assignment(construct_matrix(sticky_cell, PARAMS), sticky_cell)
    # Fila 2: alpha_2 + epsilon_2·beta_1 = s2 + u2 con beta_1 = 1
    assert assignment.alpha[:2] == (Fraction(U[0]), Fraction(U[1]))
    assert assignment.epsilon[1] == S[1]
    # La fila 3 se escala por beta_3 = 1 + w2·u3
    assert assignment.epsilon[2] == Fraction(-S[2], 1 + W[1] * U[2])


def test_eight_chords_sign_table(eight_chords):
    assignment = check_sign_rules(sample_cell(eight_chords, 2024), eight_chords)
    negative = {
        (name, l)
        for name in ("alpha", "beta", "gamma", "delta", "epsilon")
        for l in range(1, 9)
        if assignment.value(name, l) < 0
    }
    assert negative == {("epsilon", 1), ("epsilon", 3), ("gamma", 4), ("delta", 4), ("gamma", 7), ("delta", 7)}

    def ratio(top: str, bottom: str, l: int) -> Fraction:
        return assignment.value(top, l) / assignment.value(bottom, l)

    assert ratio("delta", "gamma", 2) < ratio("beta", "alpha", 3)
    assert ratio("delta", "gamma", 3) < ratio("delta", "gamma", 1) < ratio("beta", "alpha", 4)
    assert ratio("delta", "gamma", 4) < ratio("beta", "alpha", 6)
    assert ratio("delta", "gamma", 8) < ratio("delta", "gamma", 7) < ratio("delta", "gamma", 6)
    assert all(value > 0 for _, _, _, value in pair_minors(assignment, eight_chords))


def test_flipped_gamma_breaks_rule_two(sticky_cell):
    assignment = check_sign_rules(sample_cell(sticky_cell, 3), sticky_cell)
    flipped = assignment.replace("gamma", 2, -assignment.gamma[1])
    with pytest.raises(SignRuleViolation) as info:
        check_sign_rules(flipped.to_matrix(sticky_cell), sticky_cell)
    assert info.value.rule == 2 and info.value.chord == 2
    assert info.value.witness() == {"rule": 2, "chord": 2}


def test_wrong_support_is_reported(sticky_cell):
    matrix = sample_cell(sticky_cell, 3)
    broken = matrix.with_entries({(2, 8): 1})
    with pytest.raises(SignRuleViolation) as info:
        check_sign_rules(broken, sticky_cell)
    assert info.value.rule == "support"


@pytest.mark.parametrize("diagram", DIAGRAMS_7, ids=lambda d: d.to_text())
def test_direct_domino_matrices_lie_in_the_cell(diagram):
    assignment = random_assignment(diagram, RandomClass(17))
    matrix = assignment.to_matrix(diagram)
    assert matrix.is_nonnegative()
    assert matrix.nonzero_pattern() == cell_pattern(diagram)
    assert check_sign_rules(matrix, diagram).to_matrix(diagram).same_row_span(matrix)


def test_assignment_json(eight_chords):
    assignment = random_assignment(eight_chords, RandomClass(1))
    data = assignment.to_json()
    assert set(data["1"]) == {"alpha", "beta", "gamma", "delta", "epsilon"}
    assert DominoAssignment.from_json(data) == assignment


def test_hatted_values_are_positive(eight_chords):
    hatted = random_assignment(eight_chords, RandomClass(8)).hatted(eight_chords)
    assert all(value > 0 for values in hatted.values() for value in values)


# Recuperación de parámetros

def test_recover_single_chord_reads_parameters():
    diagram = ChordDiagram.of(6, [(1, 3)])
    point = RationalMatrix.from_lists([[2, 1, 3, 15, 0, 7]])
    assert recover_params(diagram, point) == ConstructionParams((7,), (2,), (3,), (5,))
    # Cambiar la escala de la fila no cambia el punto
    assert recover_params(diagram, point.scale_row(1, Fraction(-3, 2))) == ConstructionParams((7,), (2,), (3,), (5,))


def test_recover_rejects_points_outside_the_cell():
    diagram = ChordDiagram.of(6, [(1, 3)])
    with pytest.raises(NotInCellImageError):
        recover_params(diagram, RationalMatrix.from_lists([[2, 1, 3, 15, 0, -7]]))
    with pytest.raises(NotInCellImageError):
        recover_params(diagram, RationalMatrix.from_lists([[2, 1, 3, 15, 1, 7]]))


def test_recover_three_chords(three_chords):
    assert recover_params(three_chords, construct_matrix(three_chords, PARAMS)) == PARAMS


@pytest.mark.parametrize("diagram", DIAGRAMS_7, ids=lambda d: d.to_text())
def test_recover_roundtrip(diagram):
    for seed in (1, 2):
        params = ConstructionParams.random(diagram.k, RandomClass(seed))
        assert recover_params(diagram, construct_matrix(diagram, params)) == params


@pytest.mark.slow
@pytest.mark.parametrize("diagram", enumerate_diagrams(8, 2) + enumerate_diagrams(8, 3), ids=lambda d: d.to_text())
def test_recover_roundtrip_ten_seeds(diagram):
    for seed in range(10):
        params = ConstructionParams.random(diagram.k, RandomClass(seed))
        assert recover_params(diagram, construct_matrix(diagram, params)) == params


@given(integers(min_value=0, max_value=2**32))
@settings(max_examples=25, deadline=None)
def test_recover_roundtrip_on_sticky_cell(seed):
    sticky_cell = ChordDiagram.of(8, [(1, 6), (2, 4), (4, 6)])
    params = ConstructionParams.random(3, RandomClass(seed))
    point = construct_matrix(sticky_cell, params)
    assert recover_params(sticky_cell, point) == params
