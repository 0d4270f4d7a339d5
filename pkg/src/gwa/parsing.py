"""Text formats: algebra specifications and element expressions.

Spec grammar::

    spec   := KIND (param)*            KIND in gwa, lgwa, smith, witten, lebruyn
    param  := KEY '=' (RATIONAL | '"' expr '"')
    witten := 'witten' RATIONAL (',' RATIONAL){6}     (or eps1=... eps7=...)

Expression grammar, loosest binding first::

    expr   := unary (('+' | '-') unary)*
    unary  := '-' unary | term
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] INT)?
    atom   := 'h' | 'x' | 'y' | RATIONAL | '(' expr ')'
"""

import re
from dataclasses import dataclass

from .core import GwaElement, GwaPresentation, multiply, power
from .errors import ParseError, SemanticError
from .exactpoly import Fraction, LaurentPoly, Poly
from . import smith as _smith

MAX_EXPONENT = 256

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([hxy])|([-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str        # "num", "var", "op", "end"
    text: str
    pos: int


def tokenize(text, offset=0):
    tokens, i = [], 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", offset + i,
                             ("h", "x", "y", "number", "+", "-", "*", "^", "(", ")"))
        start = m.start(m.lastindex)
        kind = ("num", "var", "op")[m.lastindex - 1]
        tokens.append(Token(kind, m.group(m.lastindex), offset + start))
        i = m.end()
    tokens.append(Token("end", "", offset + len(text)))
    return tokens


# AST nodes are tuples: ("num", Fraction) ("var", name) ("neg", e)
# ("add", l, r) ("sub", l, r) ("mul", l, r) ("pow", base, n)

class _ExprParser:
    def __init__(self, text, offset=0):
        self.toks = tokenize(text, offset)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.take()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, got {tok.text or 'end of input'!r}",
                             tok.pos, (text,))
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos, ("+", "-", "*", "end"))
        return node

    def expr(self):
        node = self.unary()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            node = ("add" if op == "+" else "sub", node, self.unary())
        return node

    def unary(self):
        if self.peek().text == "-":
            self.take()
            return ("neg", self.unary())
        return self.term()

    def term(self):
        node = self.factor()
        while self.peek().text == "*":
            self.take()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek().text == "^":
            self.take()
            sign = 1
            if self.peek().text == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok.kind != "num" or "/" in tok.text:
                raise ParseError("exponent must be an integer literal", tok.pos, ("integer",))
            n = int(tok.text)
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", tok.pos)
            node = ("pow", node, sign * n, tok.pos)
        return node

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", tok.pos)
            return ("num", Fraction(int(num), int(den or 1)))
        if tok.kind == "var":
            return ("var", tok.text, tok.pos)
        if tok.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos,
                         ("h", "x", "y", "number", "("))


def parse_expr(text, offset=0):
    try:
        return _ExprParser(text, offset).parse()
    except RecursionError:
        raise ParseError("expression nested too deeply", offset) from None


def _evaluate(node, ring):
    tag = node[0]
    if tag == "num":
        return ring.const(node[1])
    if tag == "var":
        return ring.var(node[1], node[2])
    if tag == "neg":
        return ring.neg(_evaluate(node[1], ring))
    if tag == "pow":
        _, base, n, pos = node
        if n < 0:
            if base[0] != "var" or base[1] != "h" or not ring.laurent:
                raise ParseError("negative exponents are only allowed on h in lgwa specs", pos)
            return ring.h_power(n)
        return ring.pow(_evaluate(base, ring), n)
    left, right = _evaluate(node[1], ring), _evaluate(node[2], ring)
    return {"add": ring.add, "sub": ring.sub, "mul": ring.mul}[tag](left, right)


class _PolyRing:
    def __init__(self, laurent):
        self.laurent = laurent
        self.cls = LaurentPoly if laurent else Poly

    def const(self, c):
        return self.cls.constant(c)

    def var(self, name, pos):
        if name != "h":
            raise ParseError(f"{name!r} is not allowed in a polynomial", pos, ("h",))
        return self.cls.h()

    def h_power(self, n):
        return LaurentPoly.h(n)

    def neg(self, p):
        return -p

    def add(self, p, r):
        return p + r

    def sub(self, p, r):
        return p - r

    def mul(self, p, r):
        return p * r

    def pow(self, p, n):
        return p ** n


class _ElementRing:
    def __init__(self, A):
        self.A = A
        self.laurent = A.is_laurent

    def const(self, c):
        return GwaElement.scalar(self.A, c)

    def var(self, name, pos):
        return {"h": GwaElement.h, "x": GwaElement.x, "y": GwaElement.y}[name](self.A)

    def h_power(self, n):
        return GwaElement({0: LaurentPoly.h(n)})

    def neg(self, u):
        return -u

    def add(self, u, v):
        return u + v

    def sub(self, u, v):
        return u - v

    def mul(self, u, v):
        return multiply(self.A, u, v)

    def pow(self, u, n):
        return power(self.A, u, n)


def parse_poly(text, laurent=False, offset=0):
    return _evaluate(parse_expr(text, offset), _PolyRing(laurent))


def parse_element_expr(text, A):
    """Evaluate ``text`` in ``A``; the result is in graded normal form."""
    return _evaluate(parse_expr(text), _ElementRing(A))


# -- algebra specifications ---------------------------------------------------

KINDS = ("gwa", "lgwa", "smith", "witten", "lebruyn")
EPS_KEYS = tuple(f"eps{i}" for i in range(1, 8))
_KEYS = {
    "gwa": (("q", "h0"), ("a",)),
    "lgwa": (("q",), ("a",)),
    "smith": (("q",), ("f",)),
    "witten": (EPS_KEYS, ()),
    "lebruyn": (("alpha", "beta"), ()),
}
_REQUIRED = {
    "gwa": ("q", "a"), "lgwa": ("q", "a"), "smith": ("q", "f"),
    "witten": EPS_KEYS, "lebruyn": ("alpha", "beta"),
}
_DEFAULTS = {"h0": Fraction(0)}


@dataclass(frozen=True)
class AlgebraSpec:
    kind: str
    params: tuple       # sorted (key, value) pairs; values are Fraction/Poly/LaurentPoly

    def get(self, key):
        return dict(self.params)[key]

    def __str__(self):
        return print_algebra_spec(self)


class _SpecScanner:
    _WORD = re.compile(r"[A-Za-z][A-Za-z0-9]*")
    _RAT = re.compile(r"[-+]?\d+(?:/\d+)?")

    def __init__(self, text):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def at_end(self):
        self.skip()
        return self.i >= len(self.text)

    def word(self, expected):
        self.skip()
        m = self._WORD.match(self.text, self.i)
        if m is None:
            raise ParseError("expected a name", self.i, expected)
        self.i = m.end()
        return m.group(), m.start()

    def rational(self):
        self.skip()
        m = self._RAT.match(self.text, self.i)
        if m is None:
            raise ParseError("expected a rational number", self.i, ("rational",))
        num, _, den = m.group().partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", m.start())
        self.i = m.end()
        return Fraction(int(num), int(den or 1))

    def char(self, c):
        self.skip()
        if self.text[self.i:self.i + 1] != c:
            raise ParseError(f"expected {c!r}", self.i, (c,))
        self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i:self.i + 1]

    def quoted(self):
        self.char('"')
        end = self.text.find('"', self.i)
        if end < 0:
            raise ParseError("unterminated string", len(self.text), ('"',))
        body, start = self.text[self.i:end], self.i
        self.i = end + 1
        return body, start


def parse_algebra_spec(text):
    if not isinstance(text, str):
        raise ParseError("spec must be text", 0)
    s = _SpecScanner(text)
    kind, kpos = s.word(KINDS)
    if kind not in KINDS:
        raise ParseError(f"unknown algebra kind {kind!r}", kpos, KINDS)
    numeric, poly_keys = _KEYS[kind]
    params = {}
    s.skip()
    if kind == "witten" and s._RAT.match(s.text, s.i):
        values = [s.rational()]
        for _ in range(6):
            s.char(",")
            values.append(s.rational())
        params = dict(zip(EPS_KEYS, values))
    while not s.at_end():
        key, pos = s.word(numeric + poly_keys)
        if key not in numeric + poly_keys:
            raise ParseError(f"unknown parameter {key!r} for {kind}", pos, numeric + poly_keys)
        if key in params:
            raise ParseError(f"duplicate parameter {key!r}", pos)
        s.char("=")
        if key in poly_keys:
            body, start = s.quoted()
            params[key] = parse_poly(body, laurent=(kind == "lgwa"), offset=start)
        else:
            params[key] = s.rational()
    missing = [k for k in _REQUIRED[kind] if k not in params]
    if missing:
        raise ParseError(f"missing parameter(s) {', '.join(missing)} for {kind}",
                         len(text), tuple(missing))
    for k in numeric + poly_keys:
        if k not in params and k in _DEFAULTS:
            params[k] = _DEFAULTS[k]
    spec = AlgebraSpec(kind, tuple(sorted(params.items())))
    _semantic_check(spec)
    return spec


def _semantic_check(spec):
    p = dict(spec.params)
    if "q" in p and p["q"] == 0:
        raise SemanticError("q must be nonzero")
    if spec.kind == "smith" and p["f"].coeff(0) != 0:
        raise SemanticError("f(0)=0 required")
    for key in ("a",):
        if key in p and p[key].is_zero():
            raise SemanticError("a must be nonzero")


def _fmt_value(v):
    if isinstance(v, (Poly, LaurentPoly)):
        return f'"{v}"'
    return str(v)


def print_algebra_spec(spec):
    order = _KEYS[spec.kind][0] + _KEYS[spec.kind][1]
    p = dict(spec.params)
    if spec.kind == "witten":
        return "witten " + ",".join(str(p[k]) for k in EPS_KEYS)
    return " ".join([spec.kind] + [f"{k}={_fmt_value(p[k])}" for k in order if k in p])


# -- interpretation -----------------------------------------------------------

SMITH_KINDS = ("smith", "witten", "lebruyn")


def to_presentation(spec):
    p = dict(spec.params)
    if spec.kind == "gwa":
        return GwaPresentation(p["q"], p["h0"], p["a"])
    if spec.kind == "lgwa":
        return GwaPresentation.laurent(p["q"], p["a"])
    raise SemanticError(f"a {spec.kind} spec is a Smith algebra, not a GWA presentation")


def to_smith(spec):
    p = dict(spec.params)
    if spec.kind == "smith":
        return _smith.SmithPresentation.from_f(p["f"], p["q"])
    if spec.kind == "witten":
        params = _smith.WittenParams.from_sequence(p[k] for k in EPS_KEYS)
        return _smith.witten_to_smith(params).smith
    if spec.kind == "lebruyn":
        return _smith.lebruyn_to_smith(p["alpha"], p["beta"])
    raise SemanticError(f"a {spec.kind} spec is not a Smith algebra")


def parse_roots(text):
    """Comma-separated rationals, e.g. ``0,1/3,-2``."""
    s = _SpecScanner(text)
    roots = [s.rational()]
    while not s.at_end():
        s.char(",")
        roots.append(s.rational())
    return roots


__all__ = [
    "AlgebraSpec", "KINDS", "MAX_EXPONENT", "parse_algebra_spec",
    "parse_element_expr", "parse_expr", "parse_poly", "parse_roots",
    "print_algebra_spec", "to_presentation", "to_smith", "tokenize",
]
