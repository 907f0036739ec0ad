import pytest

from milnorcert.app.milnor.arrangement import rank2_flats
from milnorcert.app.milnor.projection import pencil_chart, projection_genericity, random_point_on
from milnorcert.app.milnor.sweep import sweep_real
from milnorcert.app.milnor.wiring import (
    BraidedWiringDiagram,
    garside_word,
    replay_permutation,
    validate_diagram,
)


def test_garside_word():
    assert garside_word(1, 2) == (1,)
    assert garside_word(1, 3) == (1, 2, 1)
    assert garside_word(2, 3) == (2, 3, 2)
    assert len(garside_word(1, 5)) == 10


def test_random_centre_is_generic(braid_lines):
    center, attempts = random_point_on(braid_lines, 5, seed=0)
    assert attempts >= 1
    assert projection_genericity(braid_lines, 5, center)
    again, _ = random_point_on(braid_lines, 5, seed=0)
    assert again == center


def test_chart_values(braid_lines):
    center, _ = random_point_on(braid_lines, 5, seed=1)
    chart = pencil_chart(braid_lines, 5, center)
    assert chart.lines == [0, 1, 2, 3, 4]
    events = chart.events(rank2_flats(braid_lines))
    assert sorted(f.incident for f, _ in events) == [(0, 1, 3), (0, 2, 4), (1, 4), (2, 3)]
    for flat, value in events:
        i, j = flat.incident[:2]
        assert chart.slopes[i] * value + chart.intercepts[i] == chart.slopes[j] * value + chart.intercepts[j]


@pytest.mark.parametrize("side", ["left", "right"])
def test_sweep_braid_arrangement(braid_lines, side):
    center, _ = random_point_on(braid_lines, 5, seed=0)
    diagram = sweep_real(braid_lines, 5, center, side=side)
    assert diagram.method == "sweep"
    assert diagram.basepoint == side
    assert diagram.strands == 5
    assert diagram.is_real()
    assert len(diagram.events) == 4
    assert sorted(e.size for e in diagram.events) == [2, 2, 3, 3]
    assert replay_permutation(diagram) == diagram.final_order
    validate_diagram(diagram, braid_lines)


def test_sweep_needs_rational_input(hessian3):
    center, _ = random_point_on(hessian3, 11, seed=0)
    with pytest.raises(ValueError):
        sweep_real(hessian3, 11, center)


def test_replay_rejects_tampering(braid_lines):
    center, _ = random_point_on(braid_lines, 5, seed=0)
    diagram = sweep_real(braid_lines, 5, center)

    shifted = diagram.model_copy(deep=True)
    event = shifted.events[0]
    event.start = event.start % (5 - event.size + 1) + 1
    with pytest.raises(ValueError):
        replay_permutation(shifted)

    short = diagram.model_copy(update={"braids": diagram.braids[:-1]})
    with pytest.raises(ValueError):
        replay_permutation(short)

    dropped = diagram.model_copy(
        update={"events": diagram.events[1:], "braids": diagram.braids[1:]}
    )
    with pytest.raises(ValueError):
        validate_diagram(dropped, braid_lines)


def test_diagram_json_round_trip(braid_lines):
    center, _ = random_point_on(braid_lines, 5, seed=0)
    diagram = sweep_real(braid_lines, 5, center)
    again = BraidedWiringDiagram.model_validate_json(diagram.model_dump_json())
    assert again == diagram
