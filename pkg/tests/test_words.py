import itertools

import pytest

from nijenhuis.enumeration import words_up_to
from nijenhuis.words import (
    AdjacentBrackets,
    EmptyWord,
    InvalidLetter,
    compare,
    degree,
    diamond_factorize,
    is_basis_word,
    measures,
    validate_basis,
)

X, Y, Z = "x", "y", "z"
ONE = ()


def br(*content):
    return tuple(content)


def test_validate_alternating_word():
    w = validate_basis([X, [Y], Z])
    assert w == (X, (Y,), Z)
    assert measures(w).width == 3


def test_validate_rejects_adjacent_brackets():
    with pytest.raises(AdjacentBrackets) as info:
        validate_basis([[X], [Y]])
    assert info.value.path == ()
    assert info.value.index == 0


def test_validate_reports_nested_path():
    # x [ [1] [1] ]: the violation sits inside the bracket at position 1
    with pytest.raises(AdjacentBrackets) as info:
        validate_basis([X, [[], []]])
    assert info.value.path == (1,)
    assert info.value.index == 0


def test_validate_rejects_bad_letter():
    with pytest.raises(InvalidLetter):
        validate_basis(["1x"])
    with pytest.raises(InvalidLetter):
        validate_basis([X, ["x_y"]])


def test_validate_accepts_bracketed_unit():
    assert validate_basis([[]]) == ((),)


@pytest.mark.parametrize("w, expected", [
    ((br(X),), 2),
    ((X, br(X)), 3),
    ((X, Y, Z), 3),
    (ONE, 0),
    ((br(),), 1),
])
def test_degree(w, expected):
    assert measures(w).degree == expected


def test_breadth_and_width_differ():
    m = measures((X, Y, Z))
    assert (m.breadth, m.width) == (1, 3)


def test_unit_measures():
    m = measures(ONE)
    assert (m.degree, m.depth, m.breadth, m.width) == (0, 0, 0, 0)


def test_measures_of_nested_word():
    # x y [x [1]] z
    w = (X, Y, (X, ()), Z)
    m = measures(w)
    assert m.degree_letters == 4
    assert m.degree_brackets == 2
    assert m.degree == 6
    assert m.depth == 2
    assert m.breadth == 3
    assert m.width == 4


def test_width_zero_iff_unit():
    for w in words_up_to(["x", "y"], 3):
        m = measures(w)
        assert (m.width == 0) == (m.degree == 0) == (w == ONE)
        assert m.degree == m.degree_letters + m.degree_brackets


@pytest.mark.parametrize("w, factors", [
    ((X, (Y,), Z), ((X,), ((Y,),), (Z,))),
    ((X, Y, Z), ((X,), (Y,), (Z,))),
    (((X, ()),), (((X, ()),),)),
])
def test_factorize(w, factors):
    assert diamond_factorize(w) == factors


def test_factorize_unit_raises():
    with pytest.raises(EmptyWord):
        diamond_factorize(ONE)


def test_compare_examples():
    assert compare((X,), ((),)) == -1
    assert compare((X,), (X, X)) == -1
    w = (X, (X,))
    assert compare(w, w) == 0


def test_compare_is_strict_total_order():
    words = words_up_to(["x"], 3)
    for a, b in itertools.product(words, repeat=2):
        assert compare(a, b) == -compare(b, a)
        assert (compare(a, b) == 0) == (a == b)
    for a, b, c in itertools.product(words, repeat=3):
        if compare(a, b) < 0 and compare(b, c) < 0:
            assert compare(a, c) < 0


def test_compare_orders_bracket_contents_lexicographically():
    # [x [y]] < [[x] y] < [[x y]]
    a, b, c = ((X, (Y,)),), (((X,), Y),), (((X, Y),),)
    assert compare(a, b) < 0 and compare(b, c) < 0


def test_degree_counts_letters_and_brackets_everywhere():
    for w in words_up_to(["x"], 4):
        text = repr(w)
        assert degree(w) == text.count("'x'") + sum(1 for _ in _brackets(w))


def _brackets(w):
    for f in w:
        if type(f) is tuple:
            yield f
            yield from _brackets(f)


def test_is_basis_word():
    assert is_basis_word((X, (), X))
    assert not is_basis_word(((), ()))
