"""Backend selection for the word kernels.

The compiled ``_ckernel`` extension is used when it imports; otherwise the
pure-Python ``_pykernel``. Setting ``NIJENHUIS_PURE_PYTHON=1`` forces the
fallback. Callers go through this module's attributes so that
:func:`set_backend` takes effect everywhere.
"""

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

_BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    _BACKENDS["cython"] = _ckernel

backend = ""
diamond_words = _pykernel.diamond_words
bracket_product = _pykernel.bracket_product
tensor_multiply = _pykernel.tensor_multiply
coproduct_word = _pykernel.coproduct_word


def available_backends():
    return sorted(_BACKENDS)


def set_backend(name):
    global backend, diamond_words, bracket_product, tensor_multiply, coproduct_word
    try:
        impl = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}") from None
    backend = name
    diamond_words = impl.diamond_words
    bracket_product = impl.bracket_product
    tensor_multiply = impl.tensor_multiply
    coproduct_word = impl.coproduct_word


def get_backend_module(name=None):
    return _BACKENDS[name or backend]


if os.environ.get("NIJENHUIS_PURE_PYTHON") or _ckernel is None:
    set_backend("python")
else:
    set_backend("cython")
