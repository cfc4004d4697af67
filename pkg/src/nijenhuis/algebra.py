"""The free Nijenhuis algebra: diamond product, operator, normal forms, and
homomorphisms out of it."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import kernel
from .elements import Element
from .textio import LetterRef, Op, Product, Sum, Unit, parse
from .words import UNIT, letter


def diamond(a, b):
    """Bilinear diamond product of two elements."""
    out = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            c = ca * cb
            for w, k in kernel.diamond_words(wa, wb).items():
                out[w] = out.get(w, 0) + c * k
    return Element._raw({w: c for w, c in out.items() if c})


def diamond_all(*elements):
    result = Element.one()
    for e in elements:
        result = diamond(result, e)
    return result


def bracket(a):
    """The Nijenhuis operator ``w -> [w]``, extended linearly."""
    return Element._raw({(w,): c for w, c in a._terms.items()})


def eval_expression(e):
    """Normal form of an expression tree in the alternating basis."""
    if isinstance(e, Unit):
        return Element.one()
    if isinstance(e, LetterRef):
        return Element._raw({letter(e.name): 1})
    if isinstance(e, Op):
        return bracket(eval_expression(e.child))
    if isinstance(e, Product):
        result = eval_expression(e.factors[0])
        for f in e.factors[1:]:
            result = diamond(result, eval_expression(f))
        return result
    if isinstance(e, Sum):
        out = Element.zero()
        for c, child in e.terms:
            out = out + eval_expression(child).scale(c)
        return out
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(text):
    """Parse and normalize ``text``."""
    return eval_expression(parse(text))


@dataclass(frozen=True)
class NijenhuisTarget:
    """A Nijenhuis algebra given by its operations, plus images of the letters.

    Any object with these attributes can be passed to :func:`extend_hom`;
    the caller is responsible for ``mul`` being associative and unital and
    ``nij`` satisfying the Nijenhuis identity.
    """

    zero: Any
    unit: Any
    add: Callable[[Any, Any], Any]
    scale: Callable[[Fraction, Any], Any]
    mul: Callable[[Any, Any], Any]
    nij: Callable[[Any], Any]
    letter_image: Callable[[str], Any]


def _hom_word(w, target):
    if not w:
        return target.unit
    value = None
    for f in w:
        img = target.letter_image(f) if type(f) is str else target.nij(_hom_word(f, target))
        value = img if value is None else target.mul(value, img)
    return value


def extend_hom(e, target):
    """Image of ``e`` under the unique homomorphism extending ``target.letter_image``."""
    total = target.zero
    for w, c in e.items():
        total = target.add(total, target.scale(c, _hom_word(w, target)))
    return total


def scalar_target(images, operator="identity"):
    """The rationals as a Nijenhuis algebra with ``N = id`` or ``N = 0``.

    Both operators satisfy the Nijenhuis identity on a commutative ring:
    with ``N = id`` every term reduces to ``uv``, with ``N = 0`` to zero.
    """
    if operator == "identity":
        nij = lambda u: u  # noqa: E731
    elif operator == "zero":
        nij = lambda u: Fraction(0)  # noqa: E731
    else:
        raise ValueError(f"unknown operator {operator!r}")
    images = {k: Fraction(v) for k, v in images.items()}
    return NijenhuisTarget(
        zero=Fraction(0),
        unit=Fraction(1),
        add=lambda u, v: u + v,
        scale=lambda c, u: c * u,
        mul=lambda u, v: u * v,
        nij=nij,
        letter_image=images.__getitem__,
    )


def free_target(substitution=None):
    """The free algebra itself as a target; letters map to ``substitution`` (default: themselves)."""
    substitution = substitution or {}

    def image(name):
        if name in substitution:
            return substitution[name]
        return Element._raw({(name,): 1})

    return NijenhuisTarget(
        zero=Element.zero(),
        unit=Element._raw({UNIT: 1}),
        add=lambda u, v: u + v,
        scale=lambda c, u: u.scale(c),
        mul=diamond,
        nij=bracket,
        letter_image=image,
    )
