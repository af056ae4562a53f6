import random

import pytest

from grothlat.permutations import (
    NotVexillaryError,
    Permutation,
    all_permutations,
    all_reduced_words,
    bounding_shape,
    demazure_product,
    diagram,
    diagram_shape,
    essential_set,
    flagging,
    is_vexillary,
    is_vexillary_by_essential_set,
    reduced_word,
    shift,
)


def test_lengths():
    assert Permutation([1, 2, 3]).length == 0
    assert Permutation.longest(4).length == 6
    assert Permutation([1, 4, 3, 2]).length == 3


def test_diagram_examples():
    assert diagram(Permutation.identity(3)) == frozenset()
    w = Permutation([1, 4, 3, 2])
    assert diagram(w) == {(2, 2), (2, 3), (3, 2)}
    assert essential_set(w) == {(2, 3), (3, 2)}


def test_vexillary_examples():
    assert not is_vexillary(Permutation([2, 1, 4, 3]))
    assert is_vexillary(Permutation.identity(4))
    assert is_vexillary(Permutation([8, 7, 1, 6, 2, 9, 5, 3, 4]))


def test_vexillary_criteria_agree_on_s5():
    for w in all_permutations(5):
        assert is_vexillary(w) == is_vexillary_by_essential_set(w)


def test_shapes_and_flags():
    w = Permutation([1, 4, 3, 2])
    assert diagram_shape(w) == (2, 1)
    assert bounding_shape(w) == (3, 3, 2)
    assert flagging(w) == (2, 3)
    big = Permutation([8, 7, 1, 6, 2, 9, 5, 3, 4])
    assert diagram_shape(big) == (7, 6, 4, 3, 2)
    assert bounding_shape(big) == (7, 6, 5, 5, 5, 5, 4)
    assert flagging(big) == (1, 2, 4, 6, 7)
    ident = Permutation.identity(3)
    assert diagram_shape(ident) == ()
    assert bounding_shape(ident) == ()
    assert flagging(ident) == ()


def test_flags_require_vexillary():
    with pytest.raises(NotVexillaryError):
        diagram_shape(Permutation([2, 1, 4, 3]))


def test_flag_shape_invariants():
    for w in all_permutations(4):
        if not is_vexillary(w):
            continue
        lam, big, flags = diagram_shape(w), bounding_shape(w), flagging(w)
        assert all(lam[i] <= big[i] for i in range(len(lam)))
        assert all(flags[i] <= flags[i + 1] for i in range(len(flags) - 1))
        assert all(flags[i] >= i + 1 for i in range(len(flags)))


def test_diagram_size_is_length():
    for w in all_permutations(4):
        assert len(diagram(w)) == w.length


def test_shift():
    w = Permutation([2, 1])
    assert shift(w, 0) == w
    assert shift(w, 2) == Permutation([1, 2, 4, 3])
    rng = random.Random(5)
    vex = [w for w in all_permutations(4) if is_vexillary(w) and w.length]
    for w in rng.sample(vex, 6):
        for k in (1, 2):
            wk = shift(w, k)
            assert diagram_shape(wk) == diagram_shape(w)
            assert flagging(wk) == tuple(f + k for f in flagging(w))


def test_demazure_product():
    assert demazure_product([1, 1], 2) == Permutation([2, 1])
    assert demazure_product([], 3) == Permutation.identity(3)
    assert demazure_product([1, 2, 1, 2], 3) == Permutation([3, 2, 1])


def test_demazure_recovers_reduced_words():
    for w in all_permutations(4):
        assert demazure_product(reduced_word(w), 4) == w


def test_all_reduced_words():
    words = set(all_reduced_words(Permutation.longest(3)))
    assert words == {(1, 2, 1), (2, 1, 2)}
    for word in words:
        assert demazure_product(word, 3) == Permutation.longest(3)


def test_parse_print():
    w = Permutation.parse("2413")
    assert w.word == (2, 4, 1, 3)
    assert str(w) == "2413"
    big = Permutation.parse("10,2,3,4,5,6,7,8,9,1")
    assert big(1) == 10
    assert str(big) == "10,2,3,4,5,6,7,8,9,1"
    with pytest.raises(ValueError):
        Permutation.parse("1231")


def test_composition_convention():
    # w * s_i swaps positions i, i+1 of the one-line word
    w = Permutation([3, 1, 2])
    assert w.right_mult(1) == Permutation([1, 3, 2])
    u, v = Permutation([2, 3, 1]), Permutation([3, 1, 2])
    assert (u * v)(1) == u(v(1))


def test_inverse_length():
    for w in all_permutations(4):
        assert w.length == w.inverse().length
