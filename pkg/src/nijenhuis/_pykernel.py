"""Pure-Python word kernels.

A word is a tuple of factors. A factor is either a ``str`` (a letter) or a
tuple (a bracket, holding its content word). ``()`` is the unit word and
``((),)`` is the bracketed unit.

All functions return plain ``dict`` objects with ``int`` coefficients and no
zero entries. ``_ckernel.pyx`` mirrors this module line for line.
"""

_bdia_sign = -1


def set_bdia_sign(sign):
    """Test hook: sign of the ``[[u v]]`` term in the bracket-bracket rule."""
    global _bdia_sign
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or 1")
    _bdia_sign = sign


def get_bdia_sign():
    return _bdia_sign


def _accumulate(out, terms, scale):
    for key, c in terms.items():
        c = out.get(key, 0) + scale * c
        if c:
            out[key] = c
        else:
            del out[key]


def bracket_product(u, v):
    """Contents of ``[u] <> [v]`` as ``{content: coeff}``."""
    out = {}
    _accumulate(out, diamond_words(u, (v,)), 1)
    _accumulate(out, diamond_words((u,), v), 1)
    sign = _bdia_sign
    for w, c in diamond_words(u, v).items():
        key = (w,)
        c = out.get(key, 0) + sign * c
        if c:
            out[key] = c
        else:
            del out[key]
    return out


def diamond_words(a, b):
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    last = a[-1]
    first = b[0]
    if type(last) is str or type(first) is str:
        return {a + b: 1}
    head = a[:-1]
    tail = b[1:]
    return {head + (w,) + tail: c for w, c in bracket_product(last, first).items()}


def tensor_multiply(s, t):
    out = {}
    for (a, b), c1 in s.items():
        for (c, d), c2 in t.items():
            left = diamond_words(a, c)
            right = diamond_words(b, d)
            k = c1 * c2
            for l, cl in left.items():
                for r, cr in right.items():
                    key = (l, r)
                    v = out.get(key, 0) + k * cl * cr
                    if v:
                        out[key] = v
                    else:
                        del out[key]
    return out


def coproduct_word(w):
    if not w:
        return {((), ()): 1}
    if len(w) == 1:
        f = w[0]
        if type(f) is str:
            return {((), w): 1}
        # cocycle step: (id (x) N) applied to the content's coproduct
        return {(l, (r,)): c for (l, r), c in coproduct_word(f).items()}
    out = coproduct_word(w[:1])
    for i in range(1, len(w)):
        out = tensor_multiply(out, coproduct_word(w[i:i + 1]))
    return out
