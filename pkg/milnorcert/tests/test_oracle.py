import pytest

from milnorcert.app.milnor.cyclo import zeta
from milnorcert.app.milnor.monodromy import build_diagram, milnor_dim
from milnorcert.app.milnor.oracle import (
    PRESENTATION_HEADER,
    euler_consistency,
    fox_h1,
    fox_jacobian,
    local_system_parameter,
    presentation_from_diagram,
)


@pytest.fixture
def braid_presentation(braid_lines):
    return presentation_from_diagram(build_diagram(braid_lines, seed=0))


def test_local_system_parameter():
    assert local_system_parameter(6, 3, 2) == zeta(3)
    assert local_system_parameter(6, 3, 4) == zeta(3, 2)
    assert local_system_parameter(12, 4, 0) == 1
    with pytest.raises(ValueError):
        local_system_parameter(6, 4, 1)
    with pytest.raises(ValueError):
        local_system_parameter(6, 3, 1)


def test_braid_presentation_shape(braid_presentation):
    pres = braid_presentation
    assert pres.generators == 5
    # two triple points and two double points off the last line
    assert sorted(pres.event_sizes) == [2, 2, 3, 3]
    assert pres.raw_relator_count == 6
    assert len(pres.relators) == 6
    assert pres.abelianized_rank() == 5


def test_fox_matches_monodromy(braid_lines, braid_presentation):
    assert fox_h1(braid_presentation, 3, 2) == 1
    assert fox_h1(braid_presentation, 3, 4) == 1
    assert fox_h1(braid_presentation, 2, 3) == milnor_dim(braid_lines, 2) == 0
    assert fox_h1(braid_presentation, 6, 1) == milnor_dim(braid_lines, 6) == 0


def test_trivial_character_gives_first_betti_number(braid_presentation):
    # H^1 of the complement itself: d - 1
    assert fox_h1(braid_presentation, 3, 0) == 5


def test_simplify_keeps_cohomology(braid_presentation):
    simple = braid_presentation.simplify()
    assert len(simple.relators) <= len(braid_presentation.relators)
    assert all(simple.relators)
    assert fox_h1(simple, 3, 2) == fox_h1(braid_presentation, 3, 2)


def test_fox_jacobian_shape(braid_presentation):
    jacobian = fox_jacobian(braid_presentation, zeta(3))
    assert len(jacobian) == 6
    assert all(len(row) == 5 for row in jacobian)


def test_euler_characteristic(braid_lines, braid_presentation):
    with_census = euler_consistency(braid_presentation, 3, 2, braid_lines)
    assert with_census.passed
    # chi(U) = 3 - 2 * 6 + (4 * 2 + 3 * 1)
    assert with_census.combinatorial == 2
    assert euler_consistency(braid_presentation, 3, 2).passed


def test_triangle(triangle):
    pres = presentation_from_diagram(build_diagram(triangle, seed=0))
    assert pres.generators == 2
    assert fox_h1(pres, 3, 1) == milnor_dim(triangle, 3) == 0


def test_dump(braid_presentation):
    text = braid_presentation.dump()
    lines = text.splitlines()
    assert lines[0] == PRESENTATION_HEADER
    assert lines[1] == "generators = x1 x2 x3 x4 x5"
    assert "relators = 6" in lines
    assert len(lines) == 4 + 6
