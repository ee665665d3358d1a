import pytest

from src.boundaries.BoundaryPermutations import boundary_permutation, edited_permutation, positroid_permutation
from src.boundaries.BoundaryPoints import boundary_point, check_boundary_assignment
from src.boundaries.Pairing import boundary_table, classify_boundary, pair_boundaries, sa_witness
from src.boundaries.Shifts import defined_shifts, shift
from src.boundaries.VarLedger import VarElement, eliminated_identities, single, var_set, var_tilde, var_values
from src.chords.ChordDiagram import ChordDiagram, enumerate_diagrams
from src.chords.Permutations import to_permutation
from src.domino.CellPatterns import sample_cell
from src.domino.SignRules import extract_assignment
from src.grassmannian.RationalMatrix import RationalMatrix
from src.utils.ExceptionsClass import InvalidIndexError, OutOfScopeError, UndefinedShiftError

SMALL = [d for n in range(4, 8) for k in range(1, n - 3) for d in enumerate_diagrams(n, k)]
EIGHT = [d for k in range(1, 5) for d in enumerate_diagrams(8, k)]
SINGLE = ChordDiagram.of(6, [(1, 3)])


def _ids(diagram):
    return diagram.to_text()


# Libro de variables

def test_single_chord_var_is_the_five_hatted_variables():
    assert [str(s) for s in var_set(SINGLE)] == ["eps_hat_1", "alpha_1", "beta_1", "gamma_hat_1", "delta_hat_1"]
    assert var_tilde(SINGLE) == var_set(SINGLE)


def test_sticky_cell_exclusions(sticky_cell):
    stars = var_set(sticky_cell)
    assert VarElement("eta", (1, 3)) in stars
    assert VarElement("theta", (2, 3)) in stars
    for gone in ("delta_hat_1", "gamma_hat_3", "gamma_hat_2", "beta_3"):
        assert VarElement.parse(gone) not in stars
    assert len(var_tilde(sticky_cell)) == 17
    assert len(stars) == 13


def test_eight_chords_var_sizes(eight_chords):
    stars = var_set(eight_chords)
    pairs = {str(s) for s in stars if s.kind in ("eta", "theta")}
    assert pairs == {"eta_1,3", "eta_6,7", "eta_7,8", "theta_1,4", "theta_2,3", "theta_4,6"}
    tilde = {str(s) for s in var_tilde(eight_chords)}
    assert {"eta_6,8", "theta_3,4"} <= tilde
    assert len(tilde) == 48
    assert len(stars) == 34
    excluded = {str(s) for s in var_tilde(eight_chords) if s not in stars and s.kind not in ("eta", "theta")}
    assert excluded == {
        "delta_hat_1", "gamma_hat_3", "delta_hat_6", "gamma_hat_7", "delta_hat_7", "gamma_hat_8",
        "gamma_hat_1", "beta_4", "gamma_hat_2", "beta_3", "gamma_hat_4", "beta_6",
    }


def test_var_element_text_form():
    assert VarElement.parse("eta_1,3") == VarElement("eta", (1, 3))
    assert VarElement.parse("gamma_hat_2") == single("gamma_hat", 2)
    assert str(VarElement("theta", (2, 3))) == "theta_2,3"
    assert VarElement("theta", (2, 3)).chord == 3
    assert VarElement("eta", (2, 3)).chord == 2
    with pytest.raises(InvalidIndexError):
        VarElement.parse("gamma")
    with pytest.raises(InvalidIndexError):
        VarElement("eta", (1,))


@pytest.mark.parametrize("diagram", SMALL + [ChordDiagram.of(8, [(1, 6), (2, 4), (4, 6)])], ids=_ids)
def test_var_tilde_is_positive_and_minors_are_consistent(diagram):
    for seed in (1, 2):
        values = var_values(extract_assignment(sample_cell(diagram, seed), diagram), diagram)
        assert all(v > 0 for v in values.values())
        for name, lhs, rhs in eliminated_identities(values, diagram):
            assert lhs == rhs, name


# Corrimientos

def test_short_tail_right_and_back():
    moved = shift(SINGLE, 1, "tail", "right")
    assert moved.kind == "tail-right-short"
    assert moved.target == ChordDiagram.of(6, [(2, 4)])
    back = shift(moved.target, moved.target_chord, *moved.inverse)
    assert back.target == SINGLE


def test_long_tail_right_and_back():
    diagram = ChordDiagram.of(8, [(1, 6)])
    moved = shift(diagram, 1, "tail", "right")
    assert (moved.kind, moved.target) == ("tail-right", ChordDiagram.of(8, [(2, 6)]))
    assert moved.inverse == ("tail", "left")
    assert shift(moved.target, 1, "tail", "left").target == diagram


def test_rolling_tail_right_pushes_the_ancestors():
    diagram = ChordDiagram.of(9, [(1, 6), (2, 6), (4, 6)])
    moved = shift(diagram, 3, "tail", "right")
    assert moved.kind == "tail-right-rolling"
    assert moved.target == ChordDiagram.of(9, [(1, 5), (2, 5), (5, 7)])
    assert moved.target_chord == 3


def test_head_left_onto_a_same_end_child():
    moved = shift(ChordDiagram.of(8, [(1, 6), (3, 6)]), 1, "head", "left")
    assert moved.kind == "head-left-child"
    assert moved.target == ChordDiagram.of(8, [(1, 3), (3, 6)])


@pytest.mark.parametrize(
    "diagram, l, end, direction",
    [
        (SINGLE, 1, "tail", "left"),
        (ChordDiagram.of(6, [(1, 4)]), 1, "head", "right"),
        (ChordDiagram.of(6, [(2, 4)]), 1, "tail", "right"),
        (ChordDiagram.of(8, [(1, 6), (2, 4)]), 2, "tail", "left"),
        (ChordDiagram.of(8, [(1, 6), (2, 6)]), 2, "head", "right"),
    ],
)
def test_undefined_shifts(diagram, l, end, direction):
    with pytest.raises(UndefinedShiftError):
        shift(diagram, l, end, direction)


def test_shift_rejects_bad_indices():
    with pytest.raises(InvalidIndexError):
        shift(SINGLE, 2, "tail", "left")
    with pytest.raises(InvalidIndexError):
        shift(SINGLE, 1, "tail", "up")


@pytest.mark.parametrize("diagram", SMALL, ids=_ids)
def test_every_defined_shift_is_undone_by_its_inverse(diagram):
    for moved in defined_shifts(diagram):
        assert moved.target.k == diagram.k
        assert moved.target != diagram
        back = shift(moved.target, moved.target_chord, *moved.inverse)
        assert back.target == diagram, moved.to_json()


# Permutaciones de frontera

def test_positroid_permutation_of_a_single_row():
    matrix = RationalMatrix.from_lists([[1, 1, 1, 1, 0, 1]], rows=[1], cols=range(1, 7))
    assert positroid_permutation(matrix).two_line() == (2, 3, 4, 6, 5, 1)


@pytest.mark.parametrize("diagram", SMALL, ids=_ids)
def test_interior_points_read_back_the_cell_permutation(diagram):
    assert positroid_permutation(sample_cell(diagram, 4)) == to_permutation(diagram)


@pytest.mark.parametrize(
    "name, images",
    [
        ("eps_hat_1", (2, 3, 4, 1, 5, 6)),
        ("alpha_1", (1, 3, 4, 6, 5, 2)),
        ("beta_1", (3, 2, 4, 6, 5, 1)),
        ("gamma_hat_1", (2, 4, 3, 6, 5, 1)),
        ("delta_hat_1", (2, 3, 6, 4, 5, 1)),
    ],
)
def test_single_chord_boundary_permutations(name, images):
    star = VarElement.parse(name)
    assert edited_permutation(SINGLE, star).two_line() == images
    assert boundary_permutation(SINGLE, star).two_line() == images


def test_gamma_of_a_sticky_child():
    diagram = ChordDiagram.of(8, [(1, 6), (2, 4)])
    star = single("gamma_hat", 2)
    expected = (3, 6, 5, 4, 1, 7, 8, 2)
    assert edited_permutation(diagram, star).two_line() == expected
    assert boundary_permutation(diagram, star).two_line() == expected
    assert edited_permutation(ChordDiagram.of(8, [(1, 6), (2, 5)]), single("delta_hat", 2)).two_line() == expected


def test_beta_edit_moves_the_children_heads():
    source = ChordDiagram.of(8, [(1, 6), (3, 5)])
    target = ChordDiagram.of(8, [(2, 6), (3, 5)])
    expected = (1, 6, 4, 5, 7, 2, 8, 3)
    assert edited_permutation(source, single("alpha", 1)).two_line() == expected
    assert edited_permutation(target, single("beta", 1)).two_line() == expected
    assert boundary_permutation(target, single("beta", 1)).two_line() == expected


def test_edited_form_misses_the_parent_chain_of_a_sticky_child():
    diagram = ChordDiagram.of(8, [(1, 6), (2, 5)])
    star = single("alpha", 2)
    expected = (2, 6, 5, 4, 7, 1, 8, 3)
    assert boundary_permutation(diagram, star).two_line() == expected
    assert edited_permutation(diagram, star).two_line() != expected
    label = classify_boundary(diagram, star)
    assert (label.status, label.case) == ("PAIRED", 1)
    assert label.partner == ChordDiagram.of(8, [(1, 6), (3, 5)])
    assert label.partner_star == single("beta", 2)
    assert boundary_permutation(label.partner, label.partner_star).two_line() == expected


def test_edited_form_misses_eps_hat_over_a_nested_chord():
    diagram = ChordDiagram.of(7, [(1, 5), (3, 5)])
    star = VarElement.parse("eps_hat_1")
    assert boundary_permutation(diagram, star).two_line() == (2, 5, 4, 6, 1, 3, 7)
    assert edited_permutation(diagram, star).two_line() == (2, 5, 4, 6, 3, 1, 7)


def test_rolling_pair_agrees_on_the_edited_form():
    diagram = ChordDiagram.of(9, [(1, 6), (2, 6), (4, 6)])
    partner = ChordDiagram.of(9, [(1, 5), (2, 5), (5, 7)])
    expected = (3, 6, 7, 4, 9, 1, 2, 8, 5)
    assert edited_permutation(diagram, single("alpha", 3)).two_line() == expected
    assert edited_permutation(partner, single("delta_hat", 3)).two_line() == expected
    label = classify_boundary(diagram, single("alpha", 3))
    assert (label.status, label.case, label.partner) == ("PAIRED", 3, partner)
    assert label.partner_star == single("delta_hat", 3)


def test_beta_of_a_sticky_child_is_out_of_scope(sticky_cell):
    star = single("beta", 2)
    assert star in var_set(sticky_cell)
    with pytest.raises(OutOfScopeError):
        boundary_permutation(sticky_cell, star)
    with pytest.raises(OutOfScopeError):
        edited_permutation(sticky_cell, star)


def test_boundary_permutation_rejects_foreign_elements(sticky_cell):
    with pytest.raises(InvalidIndexError):
        boundary_permutation(sticky_cell, single("delta_hat", 1))


# Clasificación y emparejamiento

def test_single_chord_labels():
    labels = {str(label.star): label for label in pair_boundaries(SINGLE)}
    assert {name: label.status for name, label in labels.items()} == {
        "eps_hat_1": "SA",
        "alpha_1": "PAIRED",
        "beta_1": "SA",
        "gamma_hat_1": "PAIRED",
        "delta_hat_1": "SA",
    }
    assert labels["alpha_1"].partner == ChordDiagram.of(6, [(2, 4)])
    assert labels["gamma_hat_1"].partner == ChordDiagram.of(6, [(1, 4)])
    assert labels["gamma_hat_1"].partner_star == single("delta_hat", 1)
    assert labels["alpha_1"].to_json()["partner_star"] == "delta_hat_1"


@pytest.mark.parametrize("diagram", SMALL, ids=_ids)
def test_pairing_is_total_and_symmetric(diagram):
    labels = pair_boundaries(diagram)
    assert [label.star for label in labels] == var_set(diagram)
    for label in labels:
        if label.star.kind == "eps_hat":
            assert label.status == "SA"
        if label.status != "PAIRED":
            continue
        back = classify_boundary(label.partner, label.partner_star)
        assert back.status == "PAIRED"
        assert (back.partner, back.partner_star) == (diagram, label.star)


@pytest.mark.parametrize("diagram", SMALL, ids=_ids)
def test_boundary_strata_are_proper_faces(diagram):
    interior = to_permutation(diagram)
    for star in var_set(diagram):
        if star.kind == "beta" and diagram.stat(star.chord).sticky_child:
            continue
        permutation = boundary_permutation(diagram, star)
        assert permutation.anti_excedance_count() == diagram.k
        assert permutation != interior


@pytest.mark.parametrize("diagram", SMALL, ids=_ids)
def test_boundary_points_vanish_only_on_their_element(diagram):
    for star in var_set(diagram):
        check_boundary_assignment(boundary_point(diagram, star, seed=3), diagram, star)


@pytest.mark.parametrize("diagram", SMALL, ids=_ids)
def test_sa_boundaries_have_witnesses(diagram):
    for label in pair_boundaries(diagram):
        if label.status == "SA":
            matrix, (i, j) = sa_witness(diagram, label.star)
            assert matrix.k == diagram.k
            assert 1 <= i < j <= diagram.n


def test_sa_witness_rejects_paired_elements():
    with pytest.raises(InvalidIndexError):
        sa_witness(SINGLE, single("alpha", 1))


def test_boundary_table_lists_every_element():
    rows = boundary_table(6, 1)
    assert len(rows) == sum(len(var_set(d)) for d in enumerate_diagrams(6, 1))
    assert {row["status"] for row in rows} == {"SA", "PAIRED"}
    assert boundary_table(6, 1, jobs=2) == rows


@pytest.mark.slow
@pytest.mark.parametrize("diagram", EIGHT, ids=_ids)
def test_pairing_holds_for_eight_markers(diagram):
    for label in pair_boundaries(diagram):
        if label.status == "PAIRED":
            back = classify_boundary(label.partner, label.partner_star)
            assert (back.partner, back.partner_star) == (diagram, label.star)
