# Fixtures compartidas: diagramas de ejemplo

import pytest

from src.ampl.PositiveZ import z_panel
from src.chords.ChordDiagram import ChordDiagram


# Diagrama de tres cuerdas con n=14
@pytest.fixture
def three_chords() -> ChordDiagram:
    return ChordDiagram.of(14, [(1, 11), (3, 6), (8, 10)])


# Diagrama con un hijo pegajoso y cabeza en la cola siguiente
@pytest.fixture
def sticky_cell() -> ChordDiagram:
    return ChordDiagram.of(8, [(1, 6), (2, 4), (4, 6)])


# Diagrama grande con n=18 y k=8
@pytest.fixture
def eight_chords() -> ChordDiagram:
    return ChordDiagram.of(18, [(1, 6), (2, 4), (4, 6), (6, 10), (7, 9), (10, 16), (11, 16), (13, 16)])


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: barridos exhaustivos de verificación")


# Panel de tres matrices Z positivas para n=7, k=1
@pytest.fixture
def panel_7_1():
    return z_panel(7, 1, 3, seed=11)
