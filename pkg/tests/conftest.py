from fractions import Fraction

import pytest

from kummerlab.config import CYCLIC_SELECTION, build_config
from kummerlab.locus import humbert5_residual, preset_config
from kummerlab.plane import parametrize_conic


@pytest.fixture(scope="session")
def preset():
    return preset_config()


@pytest.fixture(scope="session")
def preset_residual(preset):
    return humbert5_residual(preset, CYCLIC_SELECTION)


@pytest.fixture(scope="session")
def preset_phi(preset, preset_residual):
    # canonical pipeline: parametrize the fitted conic from node q51
    return parametrize_conic(preset_residual.conic, preset.node(5, 1))


@pytest.fixture(scope="session")
def tangent_config():
    # fitted cyclic conic exactly tangent to line 6 (slot parameter -4)
    return build_config([Fraction(-3), Fraction(-1), Fraction(0),
                         Fraction(4), Fraction(-1, 2), Fraction(-4)])
