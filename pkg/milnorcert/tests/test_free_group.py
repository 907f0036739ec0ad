import pytest

from milnorcert.app.milnor.free_group import (
    artin_images,
    braids_equivalent,
    conjugate,
    cyclic_reduce,
    format_word,
    inverse,
    is_trivial_braid,
    multiply,
    reduce,
    transport,
)


def test_free_reduction():
    assert reduce((1, -1, 2)) == (2,)
    assert reduce((1, 2, -2, -1, 3)) == (3,)
    assert cyclic_reduce((-1, 2, 3, 1)) == (2, 3)
    assert multiply((1, 2), (-2, 3)) == (1, 3)
    assert conjugate((2,), (1,)) == (1, 2, -1)
    assert inverse((1, 2, -3)) == (3, -2, -1)
    with pytest.raises(ValueError):
        reduce((1, 0))


def test_transport_moves_meridians():
    images = [(1,), (2,), (3,)]
    assert transport(images, 1) == [(2,), (-2, 1, 2), (3,)]
    assert transport(images, -2) == [(1,), (2, 3, -2), (2,)]
    # a letter followed by its inverse restores the meridians
    assert transport(transport(images, 2), -2) == images
    with pytest.raises(ValueError):
        transport(images, 3)


def test_braid_relations():
    assert braids_equivalent((1, 2, 1), (2, 1, 2), 3)
    assert braids_equivalent((1, 3), (3, 1), 4)
    assert not braids_equivalent((1, 2), (2, 1), 3)
    assert is_trivial_braid((1, 2, -2, -1), 3)
    assert is_trivial_braid((), 3)
    assert not is_trivial_braid((1, 1), 2)


def test_artin_action_preserves_the_product():
    images = artin_images((1, -2, 1, 2, 2), 3)
    assert multiply(*images) == (1, 2, 3)


def test_format_word():
    assert format_word(()) == "1"
    assert format_word((3, -1)) == "x3 x1^-1"
    assert format_word((2,), symbol="s") == "s2"
