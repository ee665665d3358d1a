
import pytest
from hypothesis import given, settings
from hypothesis.strategies import fractions, lists

from src.ampl.PositiveZ import make_positive_Z, z_panel
from src.ampl.Twistors import amap
from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.domino.CellPatterns import sample_cell
from src.domino.SignRules import check_sign_rules, extract_assignment
from src.grassmannian.RationalMatrix import RationalMatrix
from src.inverse.IdentifyCell import accepting_cells, identify_cell, surjectivity_experiment
from src.inverse.InvertPoint import combine, intersection_vector, invert_point
from src.utils.ExceptionsClass import DegenerateIntersectionError, InvalidIndexError, NotInCellImageError

DIAGRAMS = [d for n in range(4, 8) for k in range(0, n - 3) for d in enumerate_diagrams(n, k)]


def _y(row):
    return RationalMatrix.from_lists([row], rows=[1], cols=range(1, len(row) + 1))


# Intersección con cinco vectores

@settings(max_examples=30, deadline=None)
@given(lists(fractions(min_value=-5, max_value=5, max_denominator=7), min_size=5, max_size=5))
def test_intersection_recovers_a_combination(coefficients):
    z = make_positive_Z(5, 1)
    rows = [z.row(j) for j in range(1, 6)]
    if all(c == 0 for c in coefficients):
        return
    y = _y(combine(coefficients, rows))
    scale = z.minor(range(1, 6))
    assert intersection_vector(y, rows) == [scale * c for c in coefficients]


def test_intersection_reports_degenerate_spans():
    z = make_positive_Z(5, 1)
    rows = [z.row(1), z.row(2), z.row(3), z.row(4), combine([1, 1], [z.row(1), z.row(2)])]
    with pytest.raises(DegenerateIntersectionError):
        intersection_vector(_y(list(z.row(1))), rows)
    with pytest.raises(InvalidIndexError):
        intersection_vector(_y(list(z.row(1))), rows[:4])


# Inversión

@pytest.mark.parametrize("diagram", DIAGRAMS, ids=lambda d: d.to_text())
def test_invert_point_roundtrip(diagram):
    for z in z_panel(diagram.n, diagram.k, 2, seed=8):
        for seed in (1, 2):
            point = sample_cell(diagram, seed)
            reconstruction = invert_point(diagram, amap(point, z), z)
            assert reconstruction.matrix == extract_assignment(point, diagram).to_matrix(diagram)
            check_sign_rules(reconstruction.matrix, diagram)


def test_top_chord_trace_uses_its_five_markers():
    diagram = ChordDiagram.of(6, [(1, 3)])
    z = make_positive_Z(6, 1)
    reconstruction = invert_point(diagram, amap(sample_cell(diagram, 5), z), z)
    (row,) = reconstruction.trace
    assert row.basis == ("1", "2", "3", "4", "6")
    assert all(c != 0 for c in row.coefficients)
    assert dict(row.row)[2] == 1
    assert reconstruction.to_json()["trace"][0]["chord"] == 1


def test_child_rows_use_the_parent_tail(sticky_cell):
    z = z_panel(8, 3, 2, seed=2)[1]
    reconstruction = invert_point(sticky_cell, amap(sample_cell(sticky_cell, 3), z), z)
    assert reconstruction.trace[1].basis[0].endswith("*Z2")
    assert len(reconstruction.trace) == 3


GRANDCHILD_OF_STICKY = ChordDiagram.of(8, [(1, 6), (2, 6), (4, 6)])


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_child_of_a_sticky_chord_is_recovered(seed):
    # La fila 3 hereda epsilon·(alpha_2, beta_2), no la entrada alpha_2 + epsilon_2·beta_1 de la fila 2
    for z in z_panel(8, 3, 3, seed=seed):
        point = sample_cell(GRANDCHILD_OF_STICKY, seed)
        reconstruction = invert_point(GRANDCHILD_OF_STICKY, amap(point, z), z)
        assert reconstruction.matrix.same_row_span(point)
        assert reconstruction.matrix == extract_assignment(point, GRANDCHILD_OF_STICKY).to_matrix(GRANDCHILD_OF_STICKY)
        assert identify_cell(amap(point, z), z, 8, 3) == GRANDCHILD_OF_STICKY


def test_long_sticky_chain_is_recovered(eight_chords):
    z = z_panel(18, 8, 1, seed=0)[0]
    point = sample_cell(eight_chords, 4)
    reconstruction = invert_point(eight_chords, amap(point, z), z)
    assert reconstruction.matrix.same_row_span(point)
    check_sign_rules(reconstruction.matrix, eight_chords)


def test_vanishing_required_twistor_is_rejected():
    diagram = ChordDiagram.of(6, [(1, 3)])
    z = make_positive_Z(6, 1)
    y = _y(combine([1, 1], [z.row(1), z.row(2)]))
    with pytest.raises(NotInCellImageError):
        invert_point(diagram, y, z)


def test_invert_point_checks_shapes():
    diagram = ChordDiagram.of(6, [(1, 3)])
    with pytest.raises(InvalidIndexError):
        invert_point(diagram, _y([1, 2, 3, 4, 5]), make_positive_Z(7, 1))


# Identificación de celdas

@pytest.mark.parametrize("n, k", [(6, 1), (7, 1), (7, 2), (7, 3)])
def test_each_sample_is_accepted_by_its_own_cell_only(n, k):
    z = z_panel(n, k, 2, seed=6)[1]
    for diagram in enumerate_diagrams(n, k):
        y = amap(sample_cell(diagram, 4), z)
        assert accepting_cells(y, z, n, k) == [diagram]
        assert identify_cell(y, z, n, k) == diagram


def test_identify_cell_for_k_0():
    z = make_positive_Z(6, 0)
    y = RationalMatrix.empty(range(1, 5))
    assert identify_cell(y, z, 6, 0) == ChordDiagram(6)


@pytest.mark.parametrize("n, k", [(6, 1), (7, 2)])
def test_surjectivity_on_interior_points(n, k):
    report = surjectivity_experiment(n, k, seed=0, points=12)
    assert report.points == 12
    assert report.boundary == []
    assert sum(report.cells.values()) == 12
    assert report.to_json()["points"] == 12


@pytest.mark.slow
def test_invert_point_roundtrip_for_n_8():
    for k in range(0, 5):
        for diagram in enumerate_diagrams(8, k):
            for z in z_panel(8, k, 3, seed=0):
                for seed in range(10):
                    point = sample_cell(diagram, seed)
                    reconstruction = invert_point(diagram, amap(point, z), z)
                    assert reconstruction.matrix == extract_assignment(point, diagram).to_matrix(diagram)
