"""Parser for the polynomial input grammar.

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | VAR ['^' ['-'] INT]

Variables are ``x, y`` (two variables) or ``x1 .. xn``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .arith import LaurentPoly
from .errors import ParseError, ZeroPolynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")
_INDEXED = re.compile(r"x([1-9]\d*)$")


@dataclass(frozen=True)
class PolyExpr:
    source: str
    poly: LaurentPoly
    variables: tuple


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _variable_layout(tokens, nvars=None):
    names = {v for k, v, _ in tokens if k == "var"}
    indexed = {n for n in names if _INDEXED.match(n)}
    plain = names - indexed
    bad = plain - {"x", "y"}
    if bad:
        name = sorted(bad)[0]
        pos = next(p for k, v, p in tokens if v == name)
        raise ParseError(f"unknown variable {name!r}", pos)
    if indexed and plain:
        raise ParseError("mix of x, y and indexed variables x1..xn")
    top = max((int(_INDEXED.match(v).group(1)) for v in indexed), default=0)
    if nvars is not None and top > nvars:
        raise ParseError(f"variable x{top} exceeds nvars={nvars}")
    if not indexed and nvars in (None, 2):
        return {"x": 0, "y": 1}, 2
    if plain:
        raise ParseError("x, y are only available with two variables")
    n = top if nvars is None else nvars
    return {f"x{i + 1}": i for i in range(n)}, n


class _Parser:
    def __init__(self, tokens, index, nvars):
        self.toks = tokens
        self.i = 0
        self.index = index
        self.n = nvars

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def int_(self):
        return int(self.take("num")[1])

    def poly(self):
        terms = {}
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take("op")[1] == "-" else 1
        while True:
            c, e = self.term()
            terms[e] = terms.get(e, 0) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if self.take()[1] == "-" else 1
                continue
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return terms

    def term(self):
        c_e = [Fraction(1), [0] * self.n]
        self.factor(c_e)
        while self.peek()[1] == "*":
            self.take("op", "*")
            self.factor(c_e)
        return c_e[0], tuple(c_e[1])

    def factor(self, c_e):
        kind, val, pos = self.peek()
        if kind == "num":
            num = self.int_()
            den = 1
            if self.peek()[1] == "/":
                self.take("op", "/")
                den = self.int_()
                if den == 0:
                    raise ParseError("zero denominator", pos)
            c_e[0] *= Fraction(num, den)
        elif kind == "var":
            self.take()
            k = 1
            if self.peek()[1] == "^":
                self.take("op", "^")
                neg = False
                if self.peek()[1] == "-":
                    self.take("op", "-")
                    neg = True
                k = -self.int_() if neg else self.int_()
            c_e[1][self.index[val]] += k
        else:
            raise ParseError(f"expected a number or variable, found {val or 'end of input'!r}", pos)


def parse_poly(text, nvars=None):
    """Parse ``text`` into a :class:`PolyExpr`; all-cancelling input raises
    :class:`ZeroPolynomial`.

    ``nvars`` fixes the ambient dimension when the text does not mention
    every variable.
    """
    if nvars is not None and nvars < 1:
        raise ValueError("nvars must be >= 1")
    tokens = _tokenize(text)
    if tokens[0][0] == "end":
        raise ParseError("empty polynomial", 0)
    index, n = _variable_layout(tokens, nvars)
    terms = _Parser(tokens, index, n).poly()
    poly = LaurentPoly(terms, n)
    if poly.is_zero():
        raise ZeroPolynomial(f"{text!r} is identically zero")
    return PolyExpr(text, poly, tuple(sorted(index, key=index.get)))
