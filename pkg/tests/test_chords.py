import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, sampled_from

from src.chords.ChordDiagram import Chord, ChordDiagram, cell_count, enumerate_diagrams
from src.chords.DecoratedPermutation import DecoratedPermutation
from src.chords.LatticeWalks import LatticeWalkPair, diagram_to_walks, enumerate_walks, walks_to_diagram
from src.chords.OplusDiagram import OplusDiagram, diagram_to_oplus, oplus_to_diagram, oplus_to_permutation
from src.chords.Permutations import algorithmic_permutation, sigma_factors, to_permutation
from src.utils.ExceptionsClass import InvalidDiagramError

SMALL_DIAGRAMS = [d for n in range(4, 10) for k in range(0, n - 3) for d in enumerate_diagrams(n, k)]


# Validación y formatos

def test_diagram_rejects_crossing_and_bad_chords():
    with pytest.raises(InvalidDiagramError):
        ChordDiagram.of(10, [(1, 5), (3, 7)])
    with pytest.raises(InvalidDiagramError):
        ChordDiagram.of(8, [(2, 3)])
    with pytest.raises(InvalidDiagramError):
        ChordDiagram.of(8, [(2, 7)])
    with pytest.raises(InvalidDiagramError):
        ChordDiagram.of(10, [(2, 5), (2, 7)])


def test_text_and_json_forms(three_chords):
    assert three_chords.to_text() == "n=14; 1-11, 3-6, 8-10"
    assert ChordDiagram.from_text("n=14; 8-10, 1-11,3-6") == three_chords
    assert three_chords.to_json() == {"n": 14, "chords": [[1, 11], [3, 6], [8, 10]]}
    assert ChordDiagram.from_json(three_chords.to_json()) == three_chords
    with pytest.raises(InvalidDiagramError):
        ChordDiagram.from_text("catorce")


# Enumeración

def test_enumerate_small_cases(three_chords):
    assert enumerate_diagrams(5, 1) == [ChordDiagram.of(5, [(1, 3)])]
    assert len(enumerate_diagrams(8, 2)) == 20
    assert three_chords in enumerate_diagrams(14, 3)
    assert enumerate_diagrams(6, 3) == []


@pytest.mark.parametrize("n", range(4, 11))
def test_cell_counts_match_closed_form(n):
    for k in range(0, n - 3):
        diagrams = enumerate_diagrams(n, k)
        assert len(diagrams) == cell_count(n, k)
        assert len(set(diagrams)) == len(diagrams)
        assert diagrams == sorted(diagrams, key=lambda d: d.chords)


# Estadísticas

def test_eight_chords_statistics(eight_chords):
    assert eight_chords.stat(2).sticky_child and eight_chords.stat(2).parent == 1
    assert eight_chords.stat(2).next_head_to_tail == 3
    assert eight_chords.stat(3).prev_head_to_tail == 2
    assert eight_chords.stat(7).same_end_child and eight_chords.stat(8).same_end_child
    assert eight_chords.top_chords() == (1, 4, 6)
    assert [eight_chords.stat(l).below for l in range(1, 9)] == [2, 0, 0, 1, 0, 2, 1, 0]
    assert eight_chords.stat(1).beyond is None
    assert eight_chords.stat(3).beyond == 1
    assert eight_chords.stat(1).behind == 7


def test_eight_chords_sign_parities(eight_chords):
    # Variables negativas: epsilon_1, epsilon_3, gamma_4, delta_4, gamma_7, delta_7
    negative_gamma = [l for l in range(1, 9) if eight_chords.stat(l).below % 2]
    negative_eps = [
        l
        for l in range(1, 9)
        if (eight_chords.stat(l).behind if eight_chords.stat(l).is_top else eight_chords.stat(l).beyond) % 2
    ]
    assert negative_gamma == [4, 7]
    assert negative_eps == [1, 3]


# Permutaciones

def test_three_chords_permutation(three_chords):
    pi = to_permutation(three_chords)
    assert pi.two_line() == (2, 11, 4, 6, 5, 7, 1, 9, 10, 12, 3, 14, 13, 8)
    assert pi.anti_excedances() == [7, 11, 14]


def test_three_chords_algorithmic_factors(three_chords):
    factors = [f.points for f in sigma_factors(three_chords)]
    assert factors == [(1, 2), (3, 4), (2, 4), (8, 9), (2, 9), (2, 14), (2, 11, 12), (9, 10, 11), (4, 6, 7)]


def test_sticky_factorization_starts_with_longer_transposition(sticky_cell):
    factors = [f.points for f in sigma_factors(sticky_cell)]
    assert factors == [(1, 3), (2, 3), (2, 3), (4, 5), (2, 5), (2, 8), (2, 6, 7), (5, 6, 7), (3, 4, 5)]
    assert algorithmic_permutation(sticky_cell) == to_permutation(sticky_cell)


def test_eight_chords_permutation(eight_chords):
    pi = to_permutation(eight_chords)
    assert pi.two_line() == (3, 8, 5, 12, 1, 18, 2, 9, 16, 6, 4, 17, 14, 7, 15, 10, 11, 13)
    assert pi.anti_excedance_count() == 8


def test_empty_diagram_gives_identity():
    pi = to_permutation(ChordDiagram(6))
    assert pi == DecoratedPermutation.identity(range(1, 7))
    assert pi.anti_excedances() == []


@pytest.mark.parametrize("diagram", SMALL_DIAGRAMS, ids=lambda d: d.to_text())
def test_all_permutation_rules_agree(diagram):
    pi = to_permutation(diagram)
    assert pi.anti_excedance_count() == diagram.k
    assert algorithmic_permutation(diagram) == pi
    assert algorithmic_permutation(diagram, rightwards=True) == pi
    assert oplus_to_permutation(diagram_to_oplus(diagram)) == pi


def test_cycle_product_order():
    # (1 2)(2 3): primero actúa (2 3)
    pi = DecoratedPermutation.from_cycles(range(1, 4), [(1, 2), (2, 3)])
    assert pi.two_line() == (2, 3, 1)
    assert pi.cycles() == [(1, 2, 3)]


# Caminos reticulares

def test_three_chords_walks(three_chords):
    walks = LatticeWalkPair(14, (2, 8, 10), (1, 3, 8))
    assert walks_to_diagram(walks) == three_chords
    assert diagram_to_walks(three_chords) == walks


def test_walks_reject_crossing_pairs():
    with pytest.raises(InvalidDiagramError):
        walks_to_diagram(LatticeWalkPair(8, (1, 2), (1, 3)))


def test_empty_walks_give_empty_diagram():
    assert walks_to_diagram(LatticeWalkPair(7, (), ())) == ChordDiagram(7)


@pytest.mark.parametrize("n", range(5, 10))
def test_walks_are_in_bijection_with_diagrams(n):
    for k in range(0, n - 3):
        walks = enumerate_walks(n, k)
        assert len(walks) == cell_count(n, k)
        images = [walks_to_diagram(w) for w in walks]
        assert sorted(images, key=lambda d: d.chords) == enumerate_diagrams(n, k)
        assert all(diagram_to_walks(d) == w for d, w in zip(images, walks))


# Diagramas ⊕

def test_three_chords_oplus(three_chords):
    oplus = diagram_to_oplus(three_chords)
    assert oplus.column_labels == (14, 13, 12, 11, 10, 9, 7, 6, 5, 4, 2)
    assert oplus.filling == ("⊕◯⊕⊕◯◯◯◯◯◯⊕", "⊕◯◯◯◯◯⊕⊕◯⊕", "⊕◯◯⊕⊕⊕")
    oplus.validate()
    assert oplus_to_diagram(oplus) == three_chords


def test_three_chords_pipe_flow(three_chords):
    pi = oplus_to_permutation(diagram_to_oplus(three_chords))
    assert [pi(1), pi(2), pi(3), pi(4), pi(14)] == [2, 11, 4, 6, 8]


def test_eight_chords_oplus(eight_chords):
    oplus = diagram_to_oplus(eight_chords)
    assert oplus.column_labels == (18, 17, 16, 15, 14, 12, 9, 8, 5, 3)
    assert oplus.filling == (
        "⊕◯◯◯◯⊕◯⊕◯⊕",
        "⊕◯◯◯◯◯◯⊕⊕⊕",
        "⊕◯◯◯◯⊕◯⊕⊕",
        "⊕◯⊕◯◯⊕◯⊕",
        "⊕◯◯◯◯⊕⊕⊕",
        "⊕⊕⊕◯◯⊕",
        "⊕⊕⊕◯◯⊕",
        "⊕⊕⊕◯⊕",
    )
    assert oplus_to_diagram(oplus) == eight_chords


def test_oplus_validation_rules():
    good = OplusDiagram(7, (1,), ("⊕◯⊕⊕◯⊕",))
    good.validate()
    with pytest.raises(InvalidDiagramError, match="Regla \\(a\\)"):
        OplusDiagram(7, (1,), ("⊕◯⊕◯◯⊕",)).validate()
    with pytest.raises(InvalidDiagramError, match="Regla \\(b\\)"):
        OplusDiagram(7, (1,), ("⊕◯⊕⊕⊕◯",)).validate()
    with pytest.raises(InvalidDiagramError, match="Regla \\(d\\)"):
        OplusDiagram(7, (1,), ("⊕⊕◯⊕◯⊕",)).validate()


def test_oplus_text_and_ascii_input(three_chords):
    oplus = diagram_to_oplus(three_chords)
    assert OplusDiagram(14, (8,), ("+oo+++",)).filling == (oplus.filling[2],)
    assert OplusDiagram.from_json(oplus.to_json()) == oplus
    assert oplus.to_text().splitlines()[1].startswith(" 1: ")


def test_rows_without_boxes_are_white_fixed_points():
    oplus = OplusDiagram(3, (3,), ("",))
    pi = oplus_to_permutation(oplus)
    assert pi.white_fixed == frozenset({3})
    assert pi.anti_excedances() == [3]


@given(sampled_from(SMALL_DIAGRAMS))
@settings(max_examples=60, deadline=None)
def test_oplus_roundtrip(diagram):
    oplus = diagram_to_oplus(diagram)
    oplus.validate()
    assert oplus_to_diagram(oplus) == diagram
    assert diagram_to_walks(diagram).is_noncrossing()


@given(integers(min_value=5, max_value=9), integers(min_value=0, max_value=4))
@settings(max_examples=30, deadline=None)
def test_chords_are_noncrossing_after_enumeration(n, k):
    for diagram in enumerate_diagrams(n, k):
        for a in diagram:
            assert isinstance(a, Chord)
            assert all(not a.crosses(b) for b in diagram)
