import itertools
from fractions import Fraction

import pytest

from nijenhuis.algebra import (
    bracket,
    diamond,
    eval_expression,
    evaluate,
    extend_hom,
    free_target,
    scalar_target,
)
from nijenhuis.elements import Element
from nijenhuis.enumeration import words_up_to
from nijenhuis.textio import parse
from nijenhuis.words import degree, is_basis_word

ONE = ()


def E(w):
    return Element.word(w)


def test_letters_concatenate(backend):
    assert diamond(E(("x",)), E(("y",))) == E(("x", "y"))


def test_bracket_bracket(backend):
    # [x] <> [y] = [x [y]] + [[x] y] - [[x y]]
    expected = Element({(("x", ("y",)),): 1, ((("x",), "y"),): 1, ((("x", "y"),),): -1})
    assert diamond(E((("x",),)), E((("y",),))) == expected


def test_bracketed_units(backend):
    assert diamond(E(((),)), E(((),))) == E((((),),),)


def test_bracket_with_bracketed_unit(backend):
    # [x] <> [1] = [x [1]]
    assert diamond(E((("x",),)), E(((),))) == E((("x", ()),))


def test_bracket_operator():
    assert bracket(E(("x",))) == E((("x",),))
    assert bracket(Element.one()) == E(((),))
    assert bracket(evaluate("2*x - y")) == Element({(("x",),): 2, (("y",),): -1})


def test_eval_nijenhuis_product():
    assert evaluate("N(x)*N(y)") == diamond(E((("x",),)), E((("y",),)))


def test_eval_nijenhuis_identity_vanishes():
    assert evaluate("N(x)*N(y) - N(N(x)*y) - N(x*N(y)) + N(N(x*y))") == Element.zero()


def test_eval_unit_law():
    assert evaluate("x*1*y") == E(("x", "y"))


def test_eval_tree_directly():
    assert eval_expression(parse("2/3*[x y] - 1")) == Element({(("x", "y"),): Fraction(2, 3), ONE: -1})


@pytest.fixture(scope="module")
def words3():
    return words_up_to(["x"], 3)


def test_unit_law(words3):
    for w in words3:
        assert diamond(Element.one(), E(w)) == E(w) == diamond(E(w), Element.one())


def test_associativity_two_letters(backend):
    words = words_up_to(["x", "y"], 2)
    for a, b, c in itertools.product(words, repeat=3):
        u, v, w = E(a), E(b), E(c)
        assert diamond(diamond(u, v), w) == diamond(u, diamond(v, w))


def test_nijenhuis_law(words3, backend):
    for a, b in itertools.product(words3, repeat=2):
        u, v = E(a), E(b)
        lhs = diamond(bracket(u), bracket(v))
        rhs = bracket(diamond(bracket(u), v)) + bracket(diamond(u, bracket(v))) - bracket(bracket(diamond(u, v)))
        assert lhs == rhs


def test_closure_and_degree_additivity(words3):
    for a, b in itertools.product(words3, repeat=2):
        for w in diamond(E(a), E(b)).terms:
            assert is_basis_word(w)
            assert degree(w) == degree(a) + degree(b)


def test_extend_hom_identity_operator():
    t = scalar_target({"x": 3}, "identity")
    assert extend_hom(evaluate("x [x]"), t) == 9


def test_extend_hom_zero_operator():
    t = scalar_target({"x": 5}, "zero")
    assert extend_hom(evaluate("[x] + x"), t) == 5


def test_extend_hom_unit():
    for t in (scalar_target({"x": 5}, "zero"), scalar_target({"x": 2}, "identity"), free_target()):
        assert extend_hom(Element.one(), t) == t.unit


def test_extend_hom_multiplicative(words3):
    targets = [scalar_target({"x": 3}, "identity"), scalar_target({"x": 5}, "zero")]
    for a, b in itertools.product(words3, repeat=2):
        for t in targets:
            assert extend_hom(diamond(E(a), E(b)), t) == extend_hom(E(a), t) * extend_hom(E(b), t)


def test_extend_hom_into_free_algebra_is_identity():
    t = free_target()
    for w in words_up_to(["x", "y"], 3):
        assert extend_hom(E(w), t) == E(w)


def test_extend_hom_substitution():
    # x -> [y] sends x x to [y] <> [y]
    t = free_target({"x": evaluate("[y]")})
    assert extend_hom(evaluate("x x"), t) == evaluate("[y] [y]")


def test_extend_hom_propagates_target_errors():
    t = scalar_target({"x": 1}, "identity")
    with pytest.raises(KeyError):
        extend_hom(evaluate("y"), t)
