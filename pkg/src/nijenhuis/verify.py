"""Law suites: exhaustive or seeded-random checks of the algebraic identities.

Each law maps a tuple of basis words to ``(ok, lhs, rhs)``. A suite walks
the tuples in canonical order (or samples them) and stops at the first
failure, which is reported with both sides printed in canonical form.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import bracket, diamond, diamond_all, extend_hom, scalar_target
from .coalgebra import (
    convolve,
    coproduct,
    coproduct_left,
    coproduct_right,
    counit,
    identity,
    left_counit_image,
    right_counit_image,
    unit_counit,
)
from .elements import Element, TensorElement, apply_right, tensor_multiply
from .enumeration import check_alphabet, words_up_to
from .hopf import antipode
from .report import Counterexample, LawReport
from .textio import format_word, print_canonical, print_tensor
from .words import UNIT, degree, diamond_factorize

__all__ = ["LAWS", "SUITES", "Law", "LawReport", "UnknownLaw", "EmptySpace", "run_suite",
           "run_all", "check_linearity", "left_antipode_table"]


class UnknownLaw(KeyError):
    pass


class EmptySpace(ValueError):
    pass


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    check: Callable
    summary: str
    # negative laws pass when some instance breaks the identity
    negative: bool = False
    nonunit: bool = False


def _e(w):
    return Element._raw({w: 1})


def _show(x):
    if isinstance(x, Element):
        return print_canonical(x)
    if isinstance(x, TensorElement):
        return print_tensor(x)
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(v) for v in x) + ")"
    if isinstance(x, dict):
        if not x:
            return "0"
        parts = [f"{c}*({' (x) '.join(format_word(w) for w in key)})"
                 for key, c in sorted(x.items(), key=lambda kv: repr(kv[0]))]
        return " + ".join(parts)
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(str(v) for v in sorted(x)) + "}"
    return str(x)


def _equal(lhs, rhs):
    return lhs == rhs, lhs, rhs


def _nijenhuis(a, b):
    u, v = _e(a), _e(b)
    nu, nv = bracket(u), bracket(v)
    lhs = diamond(nu, nv)
    rhs = bracket(diamond(nu, v)) + bracket(diamond(u, nv)) - bracket(bracket(diamond(u, v)))
    return _equal(lhs, rhs)


def _associativity(a, b, c):
    u, v, w = _e(a), _e(b), _e(c)
    return _equal(diamond(diamond(u, v), w), diamond(u, diamond(v, w)))


def _unit(a):
    u, one = _e(a), Element.one()
    return _equal((diamond(one, u), diamond(u, one)), (u, u))


def _factorization(w):
    factors = diamond_factorize(w)
    joined = diamond_all(*(_e(f) for f in factors))
    keys = list(joined._terms)
    refactored = diamond_factorize(keys[0]) if len(keys) == 1 else ()
    return _equal((joined, tuple(map(_e, refactored))), (_e(w), tuple(map(_e, factors))))


def _delta_mult(a, b):
    u, v = _e(a), _e(b)
    return _equal(coproduct(diamond(u, v)), tensor_multiply(coproduct(u), coproduct(v)))


def _coassoc(w):
    d = coproduct(_e(w))
    return _equal(coproduct_left(d), coproduct_right(d))


def _cocycle(w):
    u = _e(w)
    return _equal(coproduct(bracket(u)), apply_right(coproduct(u), bracket))


def _left_counit(w):
    u = _e(w)
    return _equal(left_counit_image(coproduct(u)), u)


def _counit_alg(a, b):
    u, v = _e(a), _e(b)
    return _equal(counit(diamond(u, v)), counit(u) * counit(v))


def _grade_mul(a, b):
    degrees = frozenset(degree(w) for w in diamond(_e(a), _e(b))._terms)
    target = frozenset({degree(a) + degree(b)})
    return degrees <= target, degrees, target


def _grade_delta(w):
    n = degree(w)
    bad = {}
    for (left, right), c in coproduct(_e(w))._terms.items():
        p, q = degree(left), degree(right)
        if not ((p == 0 and q == n) or (p > 0 and q > 0 and p + q == n)):
            bad[(left, right)] = c
    return not bad, TensorElement._raw(bad), TensorElement.zero()


def _grade_bracket(w):
    degrees = frozenset(degree(v) for v in bracket(_e(w))._terms)
    target = frozenset({degree(w) + 1})
    return degrees == target, degrees, target


def _antipode(w):
    u = _e(w)
    return _equal(convolve(identity, antipode, u), unit_counit(u))


def _antipode_closed(w):
    u = _e(w)
    return _equal(antipode(u), unit_counit(u))


def _coproduct_closed(w):
    return _equal(coproduct(_e(w)), TensorElement._raw({(UNIT, w): 1}))


def _connected(w):
    eps = counit(_e(w))
    expected = Fraction(1 if w == UNIT else 0)
    ok = eps == expected and (degree(w) > 0 or w == UNIT)
    return ok, eps, expected


def _hom_targets(letters):
    images = {name: 2 * i + 3 for i, name in enumerate(sorted(letters))}
    return scalar_target(images, "identity"), scalar_target(images, "zero")


def _letters(w, acc):
    for f in w:
        if type(f) is str:
            acc.add(f)
        else:
            _letters(f, acc)
    return acc


def _hom(a, b):
    letters = _letters(b, _letters(a, set())) or {"x"}
    u, v = _e(a), _e(b)
    lhs, rhs = [], []
    for t in _hom_targets(letters):
        lhs += [extend_hom(diamond(u, v), t), extend_hom(bracket(u), t)]
        rhs += [extend_hom(u, t) * extend_hom(v, t), t.nij(extend_hom(u, t))]
    return _equal(tuple(lhs), tuple(rhs))


def _right_counit(w):
    u = _e(w)
    return _equal(right_counit_image(coproduct(u)), u)


LAWS = {law.name: law for law in [
    Law("nijenhuis", 2, _nijenhuis, "N(u) N(v) = N(N(u) v) + N(u N(v)) - N(N(u v))"),
    Law("associativity", 3, _associativity, "(u v) w = u (v w)"),
    Law("unit", 1, _unit, "1 u = u 1 = u"),
    Law("factorization", 1, _factorization, "joining the diamond factors gives w back, and refactors identically",
        nonunit=True),
    Law("delta_mult", 2, _delta_mult, "Delta(u v) = Delta(u) Delta(v)"),
    Law("coassoc", 1, _coassoc, "(Delta x id) Delta = (id x Delta) Delta"),
    Law("cocycle", 1, _cocycle, "Delta N = (id x N) Delta"),
    Law("left_counit", 1, _left_counit, "(eps x id) Delta(w) = 1 x w"),
    Law("counit_alg", 2, _counit_alg, "eps(u v) = eps(u) eps(v)"),
    Law("grade_mul", 2, _grade_mul, "deg of every term of u v is deg u + deg v"),
    Law("grade_delta", 1, _grade_delta, "Delta(Hn) in H0 x Hn + sum_{p,q>0, p+q=n} Hp x Hq"),
    Law("grade_bracket", 1, _grade_bracket, "N raises degree by exactly one"),
    Law("antipode", 1, _antipode, "(id * S)(w) = u eps(w)"),
    Law("antipode_closed", 1, _antipode_closed, "S(w) = u eps(w) (cross-check of two code paths)"),
    Law("coproduct_closed", 1, _coproduct_closed, "Delta(w) = 1 x w (cross-check of the recursion)"),
    Law("connected", 1, _connected, "H0 is spanned by 1 and eps vanishes in positive degree"),
    Law("hom", 2, _hom, "the extension to scalar Nijenhuis algebras is multiplicative and commutes with N"),
    Law("right_counit_fails", 1, _right_counit, "some w has (id x eps) Delta(w) != w", negative=True),
]}

SUITES = {
    "algebra": ("nijenhuis", "associativity", "unit", "factorization", "hom"),
    "coalgebra": ("coassoc", "delta_mult", "cocycle", "left_counit", "counit_alg"),
    "grading": ("grade_mul", "grade_delta", "grade_bracket", "connected"),
    "hopf": ("antipode", "antipode_closed", "coproduct_closed", "right_counit_fails"),
}


def default_degree(law):
    return 4 if LAWS[law].arity == 1 else 3


def _space(law, alphabet, max_degree, samples, seed):
    space = {"alphabet": list(alphabet), "max_degree": max_degree, "arity": law.arity,
             "mode": "exhaustive" if samples is None else "random"}
    if samples is not None:
        space["samples"] = samples
        space["seed"] = seed
    return space


def run_suite(law, alphabet, max_degree=None, samples=None, seed=0):
    """Check ``law`` on tuples of basis words of degree at most ``max_degree``.

    With ``samples=None`` every tuple is checked; otherwise ``samples``
    tuples are drawn with ``random.Random(seed)``.
    """
    try:
        spec = LAWS[law]
    except KeyError:
        raise UnknownLaw(law) from None
    alphabet = check_alphabet(alphabet)
    if max_degree is None:
        max_degree = default_degree(law)
    words = words_up_to(alphabet, max_degree)
    if spec.nonunit:
        words = [w for w in words if w]
    if not words or (samples is not None and samples <= 0):
        raise EmptySpace(f"no instances for {law} at degree <= {max_degree}")
    space = _space(spec, alphabet, max_degree, samples, seed)

    if samples is None:
        tuples = itertools.product(words, repeat=spec.arity)
    else:
        rng = random.Random(seed)
        tuples = (tuple(rng.choice(words) for _ in range(spec.arity)) for _ in range(samples))

    checked = 0
    for args in tuples:
        checked += 1
        ok, lhs, rhs = spec.check(*args)
        if spec.negative:
            if not ok:
                witness = Counterexample(tuple(map(format_word, args)), _show(lhs), _show(rhs))
                return LawReport(law, space, checked, True, witness=witness)
        elif not ok:
            ce = Counterexample(tuple(map(format_word, args)), _show(lhs), _show(rhs))
            return LawReport(law, space, checked, False, counterexample=ce)
    if spec.negative:
        ce = Counterexample((), "no witness found", "a word with (id x eps) Delta(w) != w")
        return LawReport(law, space, checked, False, counterexample=ce)
    return LawReport(law, space, checked, True)


def run_all(alphabet, max_degree=None, samples=None, seed=0, laws=None):
    return [run_suite(name, alphabet, max_degree, samples, seed) for name in (laws or LAWS)]


def check_linearity(f, alphabet, max_degree=2, samples=50, seed=0, name="map"):
    """Spot-check ``f(a u + b v) = a f(u) + b f(v)`` on random word pairs and coefficients."""
    alphabet = check_alphabet(alphabet)
    words = words_up_to(alphabet, max_degree)
    rng = random.Random(seed)
    coeffs = [Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1), Fraction(3)]
    space = {"alphabet": list(alphabet), "max_degree": max_degree, "arity": 2, "mode": "random",
             "samples": samples, "seed": seed}
    for i in range(samples):
        u, v = _e(rng.choice(words)), _e(rng.choice(words))
        a, b = rng.choice(coeffs), rng.choice(coeffs)
        lhs = f(u.scale(a) + v.scale(b))
        rhs = f(u).scale(a) + f(v).scale(b)
        if lhs != rhs:
            ce = Counterexample((print_canonical(u), print_canonical(v), str(a), str(b)), _show(lhs), _show(rhs))
            return LawReport(f"linearity:{name}", space, i + 1, False, counterexample=ce)
    return LawReport(f"linearity:{name}", space, samples, True)


def left_antipode_table(alphabet, max_degree=3):
    """``(S * id)(w)`` for each basis word; reported only, nothing is asserted."""
    return [(w, convolve(antipode, identity, _e(w))) for w in words_up_to(alphabet, max_degree)]
