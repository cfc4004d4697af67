import itertools
import random
from fractions import Fraction

import pytest

from nijenhuis.algebra import bracket, evaluate
from nijenhuis.coalgebra import identity
from nijenhuis.elements import Element, TensorElement, apply_right, combine, tensor_multiply
from nijenhuis.enumeration import words_up_to

ONE = ()
x, y = ("x",), ("y",)


def test_combine_cancels():
    assert combine(Element.word(x), Element.word(x), 1, -1) == Element.zero()
    assert not combine(Element.word(x), Element.word(x), 1, -1)


def test_combine_collects():
    assert combine(Element.word(x), Element.word(y), 2, 3) == Element({x: 2, y: 3})


def test_combine_rational():
    bx = (("x",),)
    half = Fraction(1, 2)
    assert combine(Element.word(bx), Element.word(bx), half, half) == Element.word(bx)


def test_zero_coefficients_dropped():
    assert len(Element({x: 0, y: 1})) == 1


def test_invalid_keys_rejected():
    with pytest.raises(ValueError):
        Element({((), ()): 1})


def _random_element(rng, words):
    return Element({rng.choice(words): rng.choice([-2, -1, Fraction(1, 2), 1, 3]) for _ in range(3)})


def test_combine_commutative_and_associative():
    rng = random.Random(7)
    words = words_up_to(["x", "y"], 2)
    for _ in range(200):
        a, b, c = (_random_element(rng, words) for _ in range(3))
        assert combine(a, b) == combine(b, a)
        assert combine(combine(a, b), c) == combine(a, combine(b, c))


def test_tensor_multiply_letters():
    got = tensor_multiply(TensorElement.pure(ONE, x), TensorElement.pure(ONE, y))
    assert got == TensorElement.pure(ONE, ("x", "y"))


def test_tensor_unit():
    t = TensorElement({(x, (("y",),)): 2, (ONE, x): -1})
    assert tensor_multiply(TensorElement.pure(ONE, ONE), t) == t
    assert tensor_multiply(t, TensorElement.pure(ONE, ONE)) == t


def test_tensor_multiply_brackets_expands_right_slot():
    got = tensor_multiply(TensorElement.pure(ONE, (x,)), TensorElement.pure(ONE, (y,)))
    expected = TensorElement({
        (ONE, (("x", ("y",)),)): 1,
        (ONE, ((("x",), "y"),)): 1,
        (ONE, ((("x", "y"),),)): -1,
    })
    assert got == expected


def test_tensor_multiply_associative():
    words = words_up_to(["x"], 2)
    pures = [TensorElement.pure(a, b) for a, b in itertools.product(words, repeat=2)]
    for s, t, u in itertools.product(pures, repeat=3):
        assert tensor_multiply(tensor_multiply(s, t), u) == tensor_multiply(s, tensor_multiply(t, u))


def test_apply_right_bracket():
    assert apply_right(TensorElement.pure(ONE, x), bracket) == TensorElement.pure(ONE, (x,))


def test_apply_right_identity():
    t = TensorElement({(x, ONE): 3, (ONE, (x,)): Fraction(-1, 2)})
    assert apply_right(t, identity) == t


def test_apply_right_zero():
    t = combine(TensorElement.pure(ONE, x), TensorElement.pure(ONE, x), 1, -1)
    assert apply_right(t, lambda e: evaluate("x y").scale(5)) == TensorElement.zero()


def test_equality_and_hash_are_canonical():
    a = Element({x: 1, y: 2})
    b = Element({y: Fraction(4, 2), x: 1})
    assert a == b and hash(a) == hash(b)


def test_items_follow_word_order():
    e = evaluate("[1] + x x + x + 1")
    assert [w for w, _ in e.items()] == [ONE, x, ((),), ("x", "x")]


def test_operators():
    a = evaluate("x + [y]")
    assert a - a == Element.zero()
    assert -a + a == Element.zero()
    assert 2 * a == a + a
    assert a * Element.one() == a
