"""Bracketed words of the alternating basis.

Representation: a word is a ``tuple`` of factors; a letter factor is its name
(``str``) and a bracket factor is the tuple of its content word. So ``()`` is
the unit word, ``("x", ())`` is ``x[1]`` and ``(("x", ("y",)),)`` is
``[x [y]]``. Tuples are hashable and immutable, which is all the kernels need.
"""

import re
from dataclasses import dataclass

Word = tuple

UNIT = ()

_LETTER_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


class WordError(ValueError):
    pass


class InvalidLetter(WordError):
    def __init__(self, name, path):
        self.name = name
        self.path = tuple(path)
        super().__init__(f"invalid letter {name!r} at path {list(self.path)}")


class AdjacentBrackets(WordError):
    """Two consecutive bracket factors at nesting ``path``, positions ``index`` and ``index + 1``."""

    def __init__(self, path, index):
        self.path = tuple(path)
        self.index = index
        super().__init__(f"adjacent brackets at path {list(self.path)}, index {index}")


class EmptyWord(WordError):
    pass


def is_letter(factor):
    return type(factor) is str


def is_bracket(factor):
    return type(factor) is tuple


def is_letter_name(name):
    return isinstance(name, str) and _LETTER_RE.match(name) is not None


def letter(name):
    if not is_letter_name(name):
        raise InvalidLetter(name, ())
    return (name,)


def bracketed(w):
    """The one-factor word ``[w]``."""
    return (w,)


def validate_basis(factors, _path=()):
    """Check a raw factor sequence and return it as a canonical word.

    Letters are strings; brackets are any non-string sequence holding the
    raw content. Raises :class:`AdjacentBrackets` for the first pair of
    neighbouring brackets (depth-first) and :class:`InvalidLetter` for bad
    names.
    """
    out = []
    prev_bracket = False
    for i, f in enumerate(factors):
        if isinstance(f, str):
            if not is_letter_name(f):
                raise InvalidLetter(f, _path + (i,))
            out.append(f)
            prev_bracket = False
        else:
            if prev_bracket:
                raise AdjacentBrackets(_path, i - 1)
            out.append(validate_basis(f, _path + (i,)))
            prev_bracket = True
    return tuple(out)


def is_basis_word(w):
    try:
        return validate_basis(w) == w
    except WordError:
        return False


@dataclass(frozen=True)
class Measures:
    degree: int
    degree_letters: int
    degree_brackets: int
    depth: int
    breadth: int
    width: int


def degree(w):
    """Letters plus brackets, counted at every nesting level."""
    n = 0
    for f in w:
        n += 1 if type(f) is str else 1 + degree(f)
    return n


def depth(w):
    d = 0
    for f in w:
        if type(f) is not str:
            d = max(d, 1 + depth(f))
    return d


def _counts(w):
    letters = brackets = 0
    for f in w:
        if type(f) is str:
            letters += 1
        else:
            brackets += 1
            sub_l, sub_b = _counts(f)
            letters += sub_l
            brackets += sub_b
    return letters, brackets


def breadth(w):
    blocks = 0
    in_run = False
    for f in w:
        if type(f) is str:
            if not in_run:
                blocks += 1
            in_run = True
        else:
            blocks += 1
            in_run = False
    return blocks


def measures(w):
    letters, brackets = _counts(w)
    return Measures(
        degree=letters + brackets,
        degree_letters=letters,
        degree_brackets=brackets,
        depth=depth(w),
        breadth=breadth(w),
        width=len(w),
    )


def diamond_factorize(w):
    """The unique alternating sequence of one-factor words whose product is ``w``."""
    if not w:
        raise EmptyWord("the unit word has no diamond factorization")
    return tuple((f,) for f in w)


def _lex_key(w):
    return tuple((0, f) if type(f) is str else (1, _lex_key(f)) for f in w)


def sort_key(w):
    """Key realising :func:`compare`: degree, then width, then factors.

    Factors compare lexicographically: letters by name and before every
    bracket, brackets by their contents (again lexicographically, a proper
    prefix first).
    """
    return (degree(w), len(w), _lex_key(w))


def compare(a, b):
    ka, kb = sort_key(a), sort_key(b)
    return (ka > kb) - (ka < kb)

