# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same contract as ``_pykernel``."""

cdef int _bdia_sign = -1


def set_bdia_sign(int sign):
    global _bdia_sign
    if sign != -1 and sign != 1:
        raise ValueError("sign must be -1 or 1")
    _bdia_sign = sign


def get_bdia_sign():
    return _bdia_sign


cdef inline void _add(dict out, object key, object c):
    cdef object v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        del out[key]


cdef dict _bracket_product(tuple u, tuple v):
    cdef dict out = {}
    cdef object w, c
    for w, c in _diamond(u, (v,)).items():
        _add(out, w, c)
    for w, c in _diamond((u,), v).items():
        _add(out, w, c)
    for w, c in _diamond(u, v).items():
        _add(out, (w,), _bdia_sign * c)
    return out


cdef dict _diamond(tuple a, tuple b):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return {b: 1}
    if lb == 0:
        return {a: 1}
    cdef object last = a[la - 1]
    cdef object first = b[0]
    if type(last) is str or type(first) is str:
        return {a + b: 1}
    cdef tuple head = a[:la - 1]
    cdef tuple tail = b[1:]
    cdef dict out = {}
    cdef object w, c
    for w, c in _bracket_product(<tuple>last, <tuple>first).items():
        out[head + (w,) + tail] = c
    return out


def bracket_product(tuple u, tuple v):
    return _bracket_product(u, v)


def diamond_words(tuple a, tuple b):
    return _diamond(a, b)


cdef dict _tensor_multiply(dict s, dict t):
    cdef dict out = {}
    cdef dict left, right
    cdef object k, c1, c2, cl, cr, l, r
    cdef tuple p, q
    for p, c1 in s.items():
        for q, c2 in t.items():
            left = _diamond(<tuple>p[0], <tuple>q[0])
            right = _diamond(<tuple>p[1], <tuple>q[1])
            k = c1 * c2
            for l, cl in left.items():
                for r, cr in right.items():
                    _add(out, (l, r), k * cl * cr)
    return out


def tensor_multiply(dict s, dict t):
    return _tensor_multiply(s, t)


cdef dict _coproduct(tuple w):
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t i
    cdef object f, c
    cdef tuple p
    cdef dict out
    if n == 0:
        return {((), ()): 1}
    if n == 1:
        f = w[0]
        if type(f) is str:
            return {((), w): 1}
        out = {}
        for p, c in _coproduct(<tuple>f).items():
            out[(p[0], (p[1],))] = c
        return out
    out = _coproduct(w[:1])
    for i in range(1, n):
        out = _tensor_multiply(out, _coproduct(w[i:i + 1]))
    return out


def coproduct_word(tuple w):
    return _coproduct(w)
