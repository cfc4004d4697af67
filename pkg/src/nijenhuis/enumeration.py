"""Generation of the alternating basis by degree."""

from .words import is_letter_name, sort_key


class EmptyAlphabet(ValueError):
    pass


def check_alphabet(alphabet):
    alphabet = list(alphabet)
    if not alphabet:
        raise EmptyAlphabet("alphabet must contain at least one letter")
    seen = set()
    for a in alphabet:
        if not is_letter_name(a):
            raise ValueError(f"invalid letter name {a!r}")
        if a in seen:
            raise ValueError(f"duplicate letter {a!r}")
        seen.add(a)
    return tuple(sorted(alphabet))


class BasisEnumerator:
    """Per-alphabet cache of basis words, grown one degree at a time.

    A degree-``n`` word is a sequence of letters (degree 1 each) and
    brackets (degree 1 plus the content's degree) in which no two brackets
    are adjacent.
    """

    def __init__(self, alphabet):
        self.alphabet = check_alphabet(alphabet)
        self._by_degree = [[()]]
        self._tails = {}

    def _sequences(self, n, after_bracket):
        # all alternating factor sequences of total degree n
        key = (n, after_bracket)
        if key in self._tails:
            return self._tails[key]
        if n == 0:
            result = [()]
        else:
            result = [(a,) + rest for a in self.alphabet for rest in self._sequences(n - 1, False)]
            if not after_bracket:
                for d in range(1, n + 1):
                    for content in self._by_degree[d - 1]:
                        result.extend((content,) + rest for rest in self._sequences(n - d, True))
        self._tails[key] = result
        return result

    def degree(self, n):
        while len(self._by_degree) <= n:
            m = len(self._by_degree)
            self._by_degree.append(sorted(self._sequences(m, False), key=sort_key))
        return self._by_degree[n]

    def up_to(self, max_degree):
        return [self.degree(n) for n in range(max_degree + 1)]


_enumerators = {}


def _enumerator(alphabet):
    key = check_alphabet(alphabet)
    if key not in _enumerators:
        _enumerators[key] = BasisEnumerator(key)
    return _enumerators[key]


def enumerate_basis(alphabet, max_degree):
    """Lists of basis words of degree ``0..max_degree``, each in canonical order."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return [list(ws) for ws in _enumerator(alphabet).up_to(max_degree)]


def words_up_to(alphabet, max_degree):
    """All basis words of degree at most ``max_degree``, flattened in canonical order."""
    return [w for bucket in enumerate_basis(alphabet, max_degree) for w in bucket]


def dimension_series(alphabet, max_degree):
    return [len(ws) for ws in enumerate_basis(alphabet, max_degree)]
