"""Grading, connectedness and the right antipode."""

from .algebra import diamond
from .coalgebra import counit, coproduct
from .elements import Element
from .enumeration import check_alphabet, enumerate_basis
from .report import Counterexample, LawReport
from .textio import format_word
from .words import UNIT, degree


class NonGradedCoproduct(ArithmeticError):
    """A coproduct term outside ``H0 (x) Hn + sum_{p,q>0} Hp (x) Hq``."""

    def __init__(self, word, term):
        self.word = word
        self.term = term
        left, right = term
        super().__init__(f"coproduct of {format_word(word)} has ungraded term "
                         f"{format_word(left)} (x) {format_word(right)}")


def homogeneous_components(a):
    """``{degree: component}`` for the nonzero components of ``a``."""
    parts = {}
    for w, c in a._terms.items():
        parts.setdefault(degree(w), {})[w] = c
    return {n: Element._raw(parts[n]) for n in sorted(parts)}


def _antipode_word(w, cache):
    if w in cache:
        return cache[w]
    if not w:
        result = Element.one()
    else:
        n = degree(w)
        delta = coproduct(Element._raw({w: 1}))
        result = Element.zero()
        unit_part = {}
        for (left, right), c in delta._terms.items():
            p, q = degree(left), degree(right)
            if p == 0:
                if q != n:
                    raise NonGradedCoproduct(w, (left, right))
                unit_part[right] = c
            elif q > 0 and p + q == n:
                # id * S = u eps at w:  S(w) = -sum c * left <> S(right)
                result = result - diamond(Element._raw({left: 1}), _antipode_word(right, cache)).scale(c)
            else:
                raise NonGradedCoproduct(w, (left, right))
        if unit_part != {w: 1}:
            # the H0 part must be exactly 1 (x) w for the recursion to solve for S(w)
            raise NonGradedCoproduct(w, (UNIT, next(iter(k for k in unit_part if k != w), w)))
    cache[w] = result
    return result


def antipode(a):
    """Right antipode ``S`` with ``id * S = u eps``, solved degree by degree."""
    cache = {}
    total = Element.zero()
    for n, part in homogeneous_components(a).items():
        for w, c in part._terms.items():
            total = total + _antipode_word(w, cache).scale(c)
    return total


def check_connected(alphabet, max_degree):
    """Degree 0 is spanned by the unit alone and every positive-degree word has counit 0."""
    alphabet = check_alphabet(alphabet)
    buckets = enumerate_basis(alphabet, max_degree)
    space = {"alphabet": list(alphabet), "max_degree": max_degree, "arity": 1, "mode": "exhaustive"}
    checked = 0
    if buckets[0] != [UNIT]:
        return LawReport("connected", space, 1, False,
                         Counterexample(tuple(format_word(w) for w in buckets[0]), "degree-0 words", "1"))
    for n, bucket in enumerate(buckets):
        for w in bucket:
            checked += 1
            eps = counit(Element._raw({w: 1}))
            expected = 1 if n == 0 else 0
            if eps != expected:
                return LawReport("connected", space, checked, False,
                                 Counterexample((format_word(w),), str(eps), str(expected)))
    return LawReport("connected", space, checked, True)
