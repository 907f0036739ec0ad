import pytest

from milnorcert.app.milnor.cyclo import parse_cyclo
from milnorcert.app.milnor.errors import StabilizationError
from milnorcert.app.milnor.free_group import is_trivial_braid
from milnorcert.app.milnor.monodromy import milnor_dim
from milnorcert.app.milnor.oracle import fox_h1, presentation_from_diagram
from milnorcert.app.milnor.projection import random_point_on
from milnorcert.app.milnor.tracking import track_complex
from milnorcert.app.milnor.wiring import replay_permutation


def test_real_arrangement_without_rotation_gives_trivial_words(braid_lines):
    center, _ = random_point_on(braid_lines, 5, seed=0)
    diagram = track_complex(braid_lines, 5, center, rotate=False)
    assert diagram.method == "track"
    assert diagram.is_real()
    assert len(diagram.events) == 4
    assert replay_permutation(diagram) == diagram.final_order


@pytest.mark.parametrize("seed", [0, 1, 7])
def test_rotated_tracking_keeps_the_dimension(braid_lines, seed):
    center, _ = random_point_on(braid_lines, 5, seed=seed)
    diagram = track_complex(braid_lines, 5, center, seed=seed)
    assert diagram.seed == seed
    for word in diagram.braids:
        assert not word or not is_trivial_braid(word, diagram.strands)
    assert milnor_dim(braid_lines, 3, diagram=diagram) == 1
    assert fox_h1(presentation_from_diagram(diagram), 3, 2) == 1


def test_tracking_is_deterministic(braid_lines):
    center, _ = random_point_on(braid_lines, 5, seed=4)
    first = track_complex(braid_lines, 5, center, seed=4)
    second = track_complex(braid_lines, 5, center, seed=4)
    assert first == second


def test_single_refinement_cannot_stabilise(braid_lines):
    center, _ = random_point_on(braid_lines, 5, seed=0)
    with pytest.raises(StabilizationError) as info:
        track_complex(braid_lines, 5, center, refinements=1)
    assert info.value.refinements == 1


@pytest.mark.parametrize("seed", [0, 3])
def test_hessian_tracked_methods_agree(hessian3, seed):
    center, _ = random_point_on(hessian3, 11, seed=seed)
    diagram = track_complex(hessian3, 11, center, seed=seed)
    # 21 flats, five of them on the last line
    assert len(diagram.events) == 16
    assert replay_permutation(diagram) == diagram.final_order
    pres = presentation_from_diagram(diagram)
    monodromy = milnor_dim(hessian3, 4, diagram=diagram)
    fox = fox_h1(pres, 4, 3)
    assert monodromy == fox
    # the four classes of three lines form a 4-net
    assert monodromy >= 1
    assert fox >= 1
    assert milnor_dim(hessian3, 3, diagram=diagram) == 0


def test_singular_values_off_a_common_line_are_tracked(hessian3):
    center, _ = random_point_on(hessian3, 11, seed=1)
    diagram = track_complex(hessian3, 11, center, seed=1)
    values = [parse_cyclo(event.value, 3).to_complex() for event in diagram.events]
    # the detours must work when the path bends at a singular value
    bends = [
        (values[k + 1] - values[k]) / (values[k] - values[k - 1]) for k in range(1, len(values) - 1)
    ]
    assert any(abs(b.imag) > 1e-6 for b in bends)
    assert track_complex(hessian3, 11, center, seed=1) == diagram
