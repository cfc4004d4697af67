"""Concrete syntax: parsing expressions, printing elements, JSON documents.

Grammar (whitespace-insensitive)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := rat ['*' wordseq] | wordseq
    wordseq := atom (['*'] atom)*
    atom    := letter | '1' | 'N(' expr ')' | '[' expr ']' | '(' expr ')'
    rat     := int ['/' int]

``N(...)`` and ``[...]`` both apply the operator.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .elements import Element, TensorElement
from .words import is_letter_name


# -- expression trees --------------------------------------------------------

@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class LetterRef:
    name: str


@dataclass(frozen=True)
class Op:
    child: object


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("empty product")


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (Fraction, expr)

    def __post_init__(self):
        if not self.terms:
            raise ValueError("empty sum")


RawExpr = Unit | LetterRef | Op | Product | Sum


# -- parser ------------------------------------------------------------------

class ParseError(ValueError):
    """Positioned diagnostic; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.message = message
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class ZeroDenominator(ParseError):
    pass


_PUNCT = set("+-*/()[]")
_ATOM_START = ("letter", "'1'", "'N('", "'['", "'('")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'num', 'ident', a punctuation char, or 'eof'
    text: str
    offset: int


def _tokenize(text):
    data = text.encode("utf-8")
    toks = []
    i, n = 0, len(data)
    while i < n:
        ch = chr(data[i])
        if ch.isspace():
            i += 1
        elif ch in _PUNCT:
            toks.append(_Tok(ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and chr(data[j]).isdigit():
                j += 1
            toks.append(_Tok("num", data[i:j].decode(), i))
            i = j
        elif data[i] < 128 and ch.isalpha():
            j = i
            while j < n and data[j] < 128 and chr(data[j]).isalnum():
                j += 1
            toks.append(_Tok("ident", data[i:j].decode(), i))
            i = j
        else:
            raise ParseError("unexpected character", i, ("letter", "number", "operator"))
    toks.append(_Tok("eof", "", n))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.toks[self.pos]

    def peek(self, k=1):
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def advance(self):
        t = self.tok
        self.pos += 1
        return t

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "eof" else f"unexpected {t.text!r}"
        raise ParseError(what, t.offset, expected)

    def expect(self, kind, expected=None):
        if self.tok.kind != kind:
            self.fail(expected or (f"'{kind}'",))
        return self.advance()

    def parse(self):
        e = self.expr()
        if self.tok.kind != "eof":
            self.fail(("'+'", "'-'", "'*'", *_ATOM_START, "end of input"))
        return e

    def expr(self):
        terms = []
        sign = 1
        signed = self.tok.kind in ("+", "-")
        if signed:
            sign = -1 if self.advance().kind == "-" else 1
        while True:
            c, node, explicit = self.term()
            terms.append((sign * c, node))
            if self.tok.kind not in ("+", "-"):
                break
            sign = -1 if self.advance().kind == "-" else 1
        if len(terms) == 1 and not signed and not explicit:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        """Return ``(coefficient, node, coefficient_was_written)``."""
        if self.tok.kind == "num" and not (self.tok.text == "1" and self._unit_atom_follows()):
            c = self.rat()
            if self.tok.kind == "*":
                self.advance()
                return c, self.wordseq(), True
            return c, Unit(), True
        return Fraction(1), self.wordseq(), False

    def _unit_atom_follows(self):
        # '1 x' and '1 [y]' read as the unit atom juxtaposed with more atoms
        nxt = self.peek()
        return nxt.kind in ("ident", "[", "(") or (nxt.kind == "num" and nxt.text == "1")

    def rat(self):
        num = self.advance()
        value = Fraction(int(num.text))
        if self.tok.kind == "/":
            self.advance()
            den = self.expect("num", ("integer",))
            if int(den.text) == 0:
                raise ZeroDenominator("zero denominator", den.offset, ("nonzero integer",))
            value /= int(den.text)
        return value

    def _at_atom(self):
        t = self.tok
        return t.kind in ("ident", "[", "(") or (t.kind == "num" and t.text == "1")

    def wordseq(self):
        atoms = [self.atom()]
        while True:
            if self.tok.kind == "*":
                self.advance()
                atoms.append(self.atom())
            elif self._at_atom():
                atoms.append(self.atom())
            else:
                break
        if len(atoms) == 1:
            return atoms[0]
        return Product(tuple(atoms))

    def atom(self):
        t = self.tok
        if t.kind == "ident":
            self.advance()
            if t.text == "N" and self.tok.kind == "(":
                self.advance()
                inner = self.expr()
                self.expect(")", ("')'", "'+'", "'-'", "'*'", *_ATOM_START))
                return Op(inner)
            return LetterRef(t.text)
        if t.kind == "num" and t.text == "1":
            self.advance()
            return Unit()
        if t.kind == "[":
            self.advance()
            inner = self.expr()
            self.expect("]", ("']'", "'+'", "'-'", "'*'", *_ATOM_START))
            return Op(inner)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", ("')'", "'+'", "'-'", "'*'", *_ATOM_START))
            return inner
        self.fail(_ATOM_START)


def parse(text):
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(text).parse()


# -- printing ----------------------------------------------------------------

def format_word(w):
    if not w:
        return "1"
    return " ".join(f if type(f) is str else f"[{format_word(f)}]" for f in w)


def _format_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(pieces):
    # pieces: (negative, body) pairs
    if not pieces:
        return "0"
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _text_term(c, body, unit):
    a = abs(c)
    if a == 1:
        return body
    if unit:
        return _format_coeff(a)
    return f"{_format_coeff(a)}*{body}"


def print_canonical(a):
    """Canonical text: terms in word order, unit coefficients elided."""
    return _join_terms([(c < 0, _text_term(c, format_word(w), not w)) for w, c in a.items()])


def print_tensor(t):
    pieces = []
    for (l, r), c in t.items():
        body = f"{format_word(l)} (x) {format_word(r)}"
        if abs(c) != 1:
            body = f"{_format_coeff(abs(c))}*({body})"
        pieces.append((c < 0, body))
    return _join_terms(pieces)


def _latex_word(w):
    if not w:
        return "1"
    out = ""
    for f in w:
        piece = f if type(f) is str else r"\lfloor" + _latex_sep(_latex_word(f)) + r"\rfloor"
        if out.endswith(r"\rfloor"):
            piece = _latex_sep(piece)
        out += piece
    return out


def _latex_sep(s):
    # a control word needs a space before a following letter or digit
    return " " + s if s[:1].isalnum() else s


def print_latex(a):
    pieces = []
    for w, c in a.items():
        body = _latex_word(w)
        m = abs(c)
        if m != 1:
            coeff = str(m.numerator) if m.denominator == 1 else rf"\frac{{{m.numerator}}}{{{m.denominator}}}"
            body = coeff if not w else coeff + body
        pieces.append((c < 0, body))
    return _join_terms(pieces)


# -- JSON --------------------------------------------------------------------

class SchemaError(ValueError):
    pass


def word_to_json(w):
    return [f if type(f) is str else {"N": word_to_json(f)} for f in w]


def word_from_json(doc, _path="word"):
    if not isinstance(doc, list):
        raise SchemaError(f"{_path}: expected an array")
    out = []
    for i, f in enumerate(doc):
        if isinstance(f, str):
            if not is_letter_name(f):
                raise SchemaError(f"{_path}[{i}]: invalid letter {f!r}")
            out.append(f)
        elif isinstance(f, dict) and set(f) == {"N"}:
            if out and type(out[-1]) is tuple:
                raise SchemaError(f"{_path}[{i}]: adjacent brackets")
            out.append(word_from_json(f["N"], f"{_path}[{i}].N"))
        else:
            raise SchemaError(f"{_path}[{i}]: expected a letter or {{\"N\": word}}")
    return tuple(out)


def _coeff_json(c):
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _dumps(doc):
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def element_to_doc(a):
    return {"terms": [{**_coeff_json(c), "word": word_to_json(w)} for w, c in a.items()]}


def tensor_to_doc(t):
    return {"terms": [{**_coeff_json(c), "left": word_to_json(l), "right": word_to_json(r)}
                      for (l, r), c in t.items()]}


def to_json(obj):
    """Compact JSON for an Element, TensorElement or LawReport."""
    if isinstance(obj, Element):
        return _dumps(element_to_doc(obj))
    if isinstance(obj, TensorElement):
        return _dumps(tensor_to_doc(obj))
    if hasattr(obj, "to_doc"):
        return _dumps(obj.to_doc())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _int_field(term, key, i):
    v = term.get(key)
    if not isinstance(v, str):
        raise SchemaError(f"terms[{i}].{key}: expected a decimal string")
    try:
        return int(v)
    except ValueError:
        raise SchemaError(f"terms[{i}].{key}: not an integer: {v!r}") from None


def from_json(text):
    """Inverse of :func:`to_json` for elements."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"terms"} or not isinstance(doc["terms"], list):
        raise SchemaError('expected {"terms": [...]}')
    terms = {}
    for i, term in enumerate(doc["terms"]):
        if not isinstance(term, dict) or set(term) != {"num", "den", "word"}:
            raise SchemaError(f"terms[{i}]: expected keys num, den, word")
        num, den = _int_field(term, "num", i), _int_field(term, "den", i)
        if den <= 0:
            raise SchemaError(f"terms[{i}].den: must be positive")
        w = word_from_json(term["word"], f"terms[{i}].word")
        if w in terms:
            raise SchemaError(f"terms[{i}]: duplicate word")
        terms[w] = Fraction(num, den)
    return Element(terms)
