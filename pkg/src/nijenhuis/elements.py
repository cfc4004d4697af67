"""Exact rational linear combinations of basis words and of word pairs."""

from fractions import Fraction

from . import kernel
from .words import UNIT, sort_key, validate_basis


def scalar(c):
    """Exact rational in canonical form: ``int`` when integral, else ``Fraction``."""
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _collect(items):
    out = {}
    for key, c in items:
        if not c:
            continue
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]
    return out


class _LinearCombination:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self._terms = {self._check_key(k): scalar(c) for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: keys valid, values nonzero int or Fraction
        obj = cls.__new__(cls)
        obj._terms = {k: c if type(c) is int else scalar(c) for k, c in terms.items()}
        obj._hash = None
        return obj

    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    @staticmethod
    def _order(key):
        raise NotImplementedError

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: self._order(kv[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def coefficient(self, key):
        return Fraction(self._terms.get(key, 0))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._raw(_collect([*self._terms.items(), *other._terms.items()]))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._raw(_collect([*self._terms.items(), *((k, -c) for k, c in other._terms.items())]))

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def scale(self, c):
        c = scalar(c)
        if not c:
            return self._raw({})
        return self._raw({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented


class Element(_LinearCombination):
    """Finite rational combination of basis words.

    >>> Element({("x",): 2}) + Element.word(("y",))
    2*x + y
    """

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        w = validate_basis(key)
        if w != key:
            raise TypeError(f"not a canonical word: {key!r}")
        return w

    @staticmethod
    def _order(key):
        return sort_key(key)

    @classmethod
    def word(cls, w, c=1):
        return cls({w: c})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({UNIT: 1})

    def __mul__(self, other):
        if isinstance(other, Element):
            from .algebra import diamond

            return diamond(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        from .textio import print_canonical

        return print_canonical(self)


class TensorElement(_LinearCombination):
    """Finite rational combination of pairs ``(left, right)`` of basis words."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        left, right = key
        return (Element._check_key(left), Element._check_key(right))

    @staticmethod
    def _order(key):
        return (sort_key(key[0]), sort_key(key[1]))

    @classmethod
    def pure(cls, left, right, c=1):
        return cls({(left, right): c})

    @classmethod
    def zero(cls):
        return cls._raw({})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        from .textio import print_tensor

        return print_tensor(self)


def combine(a, b, ca=1, cb=1):
    """``ca*a + cb*b``, like terms collected."""
    ca, cb = scalar(ca), scalar(cb)
    return type(a)._raw(_collect([*((k, ca * c) for k, c in a._terms.items()),
                                  *((k, cb * c) for k, c in b._terms.items())]))


def tensor_multiply(s, t):
    """Componentwise diamond product on the tensor square."""
    # kernels are coefficient-agnostic, so Fractions pass straight through
    return TensorElement._raw(kernel.tensor_multiply(s._terms, t._terms))


def apply_right(t, f):
    """``(id (x) f)(t)`` for a linear map ``f`` on elements."""
    out = {}
    for (left, right), c in t._terms.items():
        for w, v in f(Element._raw({right: 1}))._terms.items():
            key = (left, w)
            out[key] = out.get(key, 0) + c * v
    return TensorElement._raw({k: v for k, v in out.items() if v})


def apply_left(t, f):
    """``(f (x) id)(t)``."""
    out = {}
    for (left, right), c in t._terms.items():
        for w, v in f(Element._raw({left: 1}))._terms.items():
            key = (w, right)
            out[key] = out.get(key, 0) + c * v
    return TensorElement._raw({k: v for k, v in out.items() if v})
