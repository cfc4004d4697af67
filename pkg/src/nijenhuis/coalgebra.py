"""Coproduct, left counit and convolution."""

from fractions import Fraction

from . import kernel
from .algebra import diamond
from .elements import Element, TensorElement
from .words import UNIT


def coproduct(a):
    """The coproduct, computed by the recursion over the diamond factorization.

    Unit and letters are the base cases, a bracket applies the operator to
    the right leg of its content's coproduct, and longer words multiply the
    coproducts of their factors on the tensor square.
    """
    out = {}
    for w, c in a._terms.items():
        for key, k in kernel.coproduct_word(w).items():
            out[key] = out.get(key, 0) + c * k
    return TensorElement._raw({k: v for k, v in out.items() if v})


def counit(a):
    """Coefficient of the unit word."""
    return a.coefficient(UNIT)


def unit_counit(a):
    """``u(eps(a))``: the identity of the convolution algebra."""
    c = counit(a)
    return Element._raw({UNIT: c}) if c else Element.zero()


def identity(a):
    return a


def convolve(f, g, a):
    """``(f * g)(a)``: sum of ``f(a1) <> g(a2)`` over the coproduct of ``a``."""
    total = Element.zero()
    for (left, right), c in coproduct(a)._terms.items():
        term = diamond(f(Element._raw({left: 1})), g(Element._raw({right: 1})))
        total = total + term.scale(c)
    return total


def left_counit_image(t):
    """``(eps (x) id)(t)``, identifying ``k (x) H`` with ``H``."""
    out = {}
    for (left, right), c in t._terms.items():
        if left == UNIT:
            out[right] = out.get(right, 0) + c
    return Element._raw({k: v for k, v in out.items() if v})


def right_counit_image(t):
    """``(id (x) eps)(t)``, identifying ``H (x) k`` with ``H``."""
    out = {}
    for (left, right), c in t._terms.items():
        if right == UNIT:
            out[left] = out.get(left, 0) + c
    return Element._raw({k: v for k, v in out.items() if v})


def _triple(items):
    out = {}
    for key, c in items:
        out[key] = out.get(key, 0) + c
    return {k: Fraction(v) for k, v in out.items() if v}


def coproduct_left(t):
    """``(Delta (x) id)(t)`` as ``{(w1, w2, w3): coeff}``."""
    return _triple(((l1, l2, r), c * k)
                   for (l, r), c in t._terms.items()
                   for (l1, l2), k in kernel.coproduct_word(l).items())


def coproduct_right(t):
    """``(id (x) Delta)(t)`` as ``{(w1, w2, w3): coeff}``."""
    return _triple(((l, r1, r2), c * k)
                   for (l, r), c in t._terms.items()
                   for (r1, r2), k in kernel.coproduct_word(r).items())
