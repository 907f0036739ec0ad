import pytest

from milnorcert.app.milnor.cyclo import CycloNum, zeta
from milnorcert.app.milnor import monodromy
from milnorcert.app.milnor.errors import GenericityError, InvariantBreach, StabilizationError
from milnorcert.app.milnor.families import braid, hessian
from milnorcert.app.milnor.linalg import identity, mat_mul, rank
from milnorcert.app.milnor.monodromy import (
    EigenRep,
    build_diagram,
    event_profile,
    first_betti_number,
    global_generators,
    half_twist,
    invariant_dim,
    local_matrix,
    milnor_dim,
    product_diagnostic,
)
from milnorcert.app.milnor.wiring import garside_word


def _word_matrix(word, rep):
    out = identity(rep.dim, rep.m)
    for letter in word:
        out = mat_mul(out, half_twist(abs(letter), 1 if letter > 0 else -1, rep))
    return out


def _fixes_ones(matrix):
    return all(sum(row, CycloNum.zero(row[0].order)) == 1 for row in matrix)


def test_eigen_rep_validation():
    assert EigenRep.primitive(6, 3, k=5).t == zeta(6, 5)
    with pytest.raises(ValueError):
        EigenRep.primitive(6, 3, k=2)
    with pytest.raises(ValueError):
        EigenRep(4, zeta(4, 2), 3)
    with pytest.raises(ValueError):
        EigenRep(4, zeta(8), 3)
    assert EigenRep.primitive(5, 2).conjugate().t == zeta(5, 4)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("dim", range(2, 6))
def test_half_twist_relations(m, dim):
    rep = EigenRep.primitive(m, dim)
    twists = {i: half_twist(i, 1, rep) for i in range(1, dim)}
    for i, ti in twists.items():
        assert _fixes_ones(ti)
        assert _fixes_ones(half_twist(i, -1, rep))
        assert mat_mul(ti, half_twist(i, -1, rep)) == identity(dim, m)
        assert mat_mul(ti, ti) == local_matrix(i, 2, rep)
        for j, tj in twists.items():
            if j == i + 1:
                assert mat_mul(mat_mul(ti, tj), ti) == mat_mul(mat_mul(tj, ti), tj)
            elif j >= i + 2:
                assert mat_mul(ti, tj) == mat_mul(tj, ti)
    with pytest.raises(ValueError):
        half_twist(dim, 1, rep)


@pytest.mark.parametrize("start,size", [(1, 3), (2, 3), (1, 4)])
def test_full_twist_is_the_local_monodromy(start, size):
    rep = EigenRep.primitive(7, 4)
    delta = garside_word(start, size)
    assert _word_matrix(delta + delta, rep) == local_matrix(start, size, rep)


def test_local_matrix_rank_law():
    for m in range(2, 13):
        for q in range(2, 13):
            rep = EigenRep.primitive(m, q + 1)
            local = local_matrix(1, q, rep)
            assert _fixes_ones(local)
            delta = [[x - (1 if r == c else 0) for c, x in enumerate(row)] for r, row in enumerate(local)]
            if q % m:
                assert rank(delta) == q - 1, (m, q)
                assert invariant_dim([local], rep) == 1, (m, q)
            else:
                assert rank(delta) == 1, (m, q)
                assert invariant_dim([local], rep) == q - 1, (m, q)


@pytest.mark.parametrize("m", range(2, 13))
def test_local_matrix_on_the_whole_space(m):
    for q in range(2, 13):
        rep = EigenRep.primitive(m, q)
        expected = q - 1 if q % m == 0 else 0
        assert invariant_dim([local_matrix(1, q, rep)], rep) == expected, q


def test_invariant_dim_of_plain_matrices():
    rep = EigenRep.primitive(3, 4)
    assert invariant_dim([], rep) == 3
    assert invariant_dim([identity(4, 3)], rep) == 3
    assert invariant_dim([local_matrix(1, 4, rep)], rep) == 0
    assert invariant_dim([local_matrix(1, 3, rep)], rep) == 2
    doubled = [[2 * x for x in row] for row in identity(4, 3)]
    with pytest.raises(InvariantBreach):
        invariant_dim([doubled], rep)


def test_global_generators_fix_ones(braid_lines):
    diagram = build_diagram(braid_lines, seed=0)
    rep = EigenRep.primitive(3, 5)
    gens = global_generators(diagram, rep)
    assert len(gens) == len(diagram.events)
    for g in gens:
        assert _fixes_ones(g.matrix())
        assert invariant_dim([g], rep) == invariant_dim([g.matrix()], rep)
    assert product_diagnostic(gens, rep) >= 0


def test_event_profile(braid_lines):
    diagram = build_diagram(braid_lines, seed=0)
    profile = event_profile(diagram, EigenRep.primitive(3, 5))
    for entry in profile:
        assert entry.rank == 1
        assert entry.local_invariant_dim == 4 - entry.rank
        assert entry.expected == (6 - entry.q - 1, 4, entry.q - 1)


def test_braid_arrangement_dimensions(braid_lines):
    diagram = build_diagram(braid_lines, seed=0)
    assert diagram.method == "sweep"
    assert milnor_dim(braid_lines, 3, diagram=diagram) == 1
    assert milnor_dim(braid_lines, 3, k=2, diagram=diagram) == 1
    assert milnor_dim(braid_lines, 2, diagram=diagram) == 0
    assert milnor_dim(braid_lines, 6, diagram=diagram) == 0
    assert milnor_dim(braid_lines, 4) == 0
    assert first_betti_number(braid_lines, diagram=diagram) == 7


@pytest.mark.parametrize("d_index", [0, 3, 5])
def test_dimension_does_not_depend_on_the_line_at_infinity(braid_lines, d_index):
    assert milnor_dim(braid_lines, 3, d_index=d_index, seed=2) == 1


def test_vanishing_cases(triangle, generic6, pencil_plus_line):
    assert milnor_dim(triangle, 3) == 0
    for m in (2, 3, 6):
        assert milnor_dim(generic6, m) == 0
    assert first_betti_number(generic6) == 5
    assert milnor_dim(pencil_plus_line, 2) == 0
    assert milnor_dim(pencil_plus_line, 4) == 0


def test_rejects_bad_input(braid_lines):
    with pytest.raises(ValueError):
        milnor_dim(braid_lines, 1)
    with pytest.raises(ValueError):
        milnor_dim(braid(4), 2)
    with pytest.raises(ValueError):
        build_diagram(braid_lines, method="guess")


def _no_centre_on(bad_indices, monkeypatch):
    original = monodromy.random_point_on

    def patched(arrangement, d_index, seed, retries=None):
        if d_index in bad_indices:
            raise GenericityError(f"no generic projection centre on line {d_index}", 1)
        return original(arrangement, d_index, seed, retries)

    monkeypatch.setattr(monodromy, "random_point_on", patched)


def test_line_search_skips_lines_without_a_generic_centre(braid_lines, monkeypatch):
    _no_centre_on({5, 0}, monkeypatch)
    with pytest.raises(GenericityError):
        build_diagram(braid_lines, seed=0)
    diagram = build_diagram(braid_lines, d_index="search", seed=0)
    assert diagram.d_index == 1
    assert milnor_dim(braid_lines, 3, diagram=diagram) == 1
    assert milnor_dim(braid_lines, 3, d_index="search", seed=0) == 1


def test_line_search_prefers_the_last_line(braid_lines):
    assert build_diagram(braid_lines, d_index="search", seed=0).d_index == 5
    with pytest.raises(ValueError):
        build_diagram(braid_lines, d_index="first")


def test_line_search_gives_up_after_every_line(braid_lines, monkeypatch):
    _no_centre_on(set(range(6)), monkeypatch)
    with pytest.raises(GenericityError) as info:
        build_diagram(braid_lines, d_index="search", seed=0)
    assert sorted(info.value.diagnostics) == list(range(6))


def test_tracking_failure_reports_the_centres_tried(monkeypatch):
    def unstable(*args, **kwargs):
        raise StabilizationError("braid monodromy did not stabilise", 9)

    monkeypatch.setattr(monodromy, "track_complex", unstable)
    with pytest.raises(StabilizationError) as info:
        build_diagram(hessian(b=3), seed=0, retries=3)
    message = str(info.value)
    assert info.value.centres == 3
    assert message.count("refinements") == 1
    assert message.endswith("(3 projection centres tried)")
