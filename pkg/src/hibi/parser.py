"""Parser for ring/ideal documents and polynomial expressions.

Document grammar::

    document  := { statement }
    statement := "ring" "Q" "[" name {"," name} "]" ["order" ("degrevlex"|"deglex")] ";"
               | "ideal" name "=" poly {"," poly} ";"
               | "use" name ";"
    poly      := ["+"|"-"] term {("+"|"-") term}
    term      := factor {["*"|"/"] factor}
    factor    := atom ["^" integer]
    atom      := integer | variable | "(" poly ")"

``#`` starts a comment.  ``*`` may be omitted, and a run of letters such as
``XYZ`` is split into declared variables (longest name first).  Division
is only allowed by nonzero constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from hibi.groebner import Ideal, MPoly, Ring

_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],;=])")

MAX_EXPONENT = 1000


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg, self.line, self.col = msg, line, col


class UnknownVariableError(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | op | eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind:
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


@dataclass
class SourceDocument:
    ring: Ring
    ideals: dict = field(default_factory=dict)
    directives: list = field(default_factory=list)

    def ideal(self, name: str | None = None) -> Ideal:
        if name is None:
            for kind, arg in reversed(self.directives):
                if kind == "use":
                    name = arg
                    break
        if name is None:
            if not self.ideals:
                raise KeyError("document defines no ideal")
            name = list(self.ideals)[-1]
        if name not in self.ideals:
            raise KeyError(f"no ideal named {name!r}")
        return self.ideals[name]


class _Parser:
    def __init__(self, tokens, ring: Ring | None = None):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        where = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{msg} at {where}", tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "eof":
            self.i += 1
        return t

    def accept(self, text) -> bool:
        if self.tok.kind in ("op", "name") and self.tok.text == text:
            self.advance()
            return True
        return False

    def expect(self, text) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op", "name"):
            self.error(f"expected {text!r}")
        return self.advance()

    def expect_name(self) -> Token:
        if self.tok.kind != "name":
            self.error("expected a name")
        return self.advance()

    # -- polynomials
    def split_name(self, tok: Token) -> list:
        names = sorted(self.ring.variables, key=len, reverse=True)
        s, out = tok.text, []
        while s:
            for n in names:
                if s.startswith(n):
                    out.append(n)
                    s = s[len(n):]
                    break
            else:
                raise UnknownVariableError(f"unknown variable {tok.text!r}", tok.line, tok.col)
        return out

    def poly(self) -> MPoly:
        sign = -1 if self.tok.text == "-" and self.tok.kind == "op" else 1
        if self.tok.kind == "op" and self.tok.text in "+-":
            self.advance()
        acc = self.term() * sign
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            op = self.advance().text
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "name") or (t.kind == "op" and t.text == "(")

    def term(self) -> MPoly:
        acc = self.factor()
        while True:
            if self.accept("*"):
                acc = acc * self.factor()
            elif self.tok.kind == "op" and self.tok.text == "/":
                slash = self.advance()
                d = self.factor()
                if d.total_degree > 0 or d.is_zero():
                    self.error("division only by nonzero constants", slash)
                acc = acc * (1 / d.terms[self.ring.one()])
            elif self.starts_atom():
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> MPoly:
        base = self.atom()
        if self.accept("^"):
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        if self.tok.kind != "int":
            self.error("expected an integer exponent")
        tok = self.advance()
        if int(tok.text) > MAX_EXPONENT:
            self.error("exponent too large", tok)
        return int(tok.text)

    def atom(self) -> MPoly:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return self.ring.constant(int(t.text))
        if t.kind == "name":
            self.advance()
            out = self.ring.constant(1)
            names = self.split_name(t)
            # x^e binds to the last variable of a juxtaposed run
            for n in names[:-1]:
                out = out * self.ring.gen(n)
            last = self.ring.gen(names[-1])
            if self.tok.kind == "op" and self.tok.text == "^" and len(names) > 1:
                self.advance()
                last = last ** self.exponent()
            return out * last
        if self.accept("("):
            inner = self.poly()
            self.expect(")")
            return inner
        self.error("expected a polynomial term")

    # -- documents
    def document(self) -> SourceDocument:
        doc = None
        while self.tok.kind != "eof":
            kw = self.expect_name()
            if kw.text == "ring":
                if doc is not None:
                    self.error("only one ring per document", kw)
                doc = SourceDocument(self.ring_decl())
                self.ring = doc.ring
            elif doc is None:
                self.error("document must start with a ring declaration", kw)
            elif kw.text == "ideal":
                name = self.expect_name().text
                self.expect("=")
                gens = [self.poly()]
                while self.accept(","):
                    gens.append(self.poly())
                self.expect(";")
                for g in gens:
                    if g.is_zero():
                        raise ParseError("empty (zero) generator", kw.line, kw.col)
                doc.ideals[name] = Ideal(self.ring, tuple(gens))
            elif kw.text == "use":
                name = self.expect_name()
                if name.text not in doc.ideals:
                    raise ParseError(f"no ideal named {name.text!r}", name.line, name.col)
                doc.directives.append(("use", name.text))
                self.expect(";")
            else:
                self.error("expected 'ring', 'ideal' or 'use'", kw)
        if doc is None:
            self.error("document must start with a ring declaration")
        return doc

    def ring_decl(self) -> Ring:
        field_tok = self.expect_name()
        if field_tok.text != "Q":
            self.error("only the rationals Q are supported", field_tok)
        self.expect("[")
        names = [self.expect_name().text]
        while self.accept(","):
            names.append(self.expect_name().text)
        self.expect("]")
        order = "degrevlex"
        if self.accept("order"):
            o = self.expect_name()
            if o.text not in ("degrevlex", "deglex"):
                self.error("unknown monomial order", o)
            order = o.text
        self.expect(";")
        if len(set(names)) != len(names):
            self.error("duplicate variable name")
        return Ring(tuple(names), order)


def parse_document(text: str) -> SourceDocument:
    return _Parser(tokenize(text)).document()


def parse_polynomial(text: str, ring: Ring) -> MPoly:
    p = _Parser(tokenize(text), ring)
    out = p.poly()
    if p.tok.kind != "eof":
        p.error("unexpected token")
    return out


def _wrapped(toks) -> bool:
    """True if the whole token list (before eof) is one parenthesized group."""
    if len(toks) < 3 or toks[0].text != "(" or toks[-2].text != ")":
        return False
    depth = 0
    for k, t in enumerate(toks[:-1]):
        if t.kind == "op" and t.text in "()":
            depth += 1 if t.text == "(" else -1
            if depth == 0 and k < len(toks) - 2:
                return False
    return True


def parse_ideal(text: str, ring: Ring) -> Ideal:
    """Comma-separated generators, optionally wrapped in parentheses."""
    toks = tokenize(text)
    if _wrapped(toks):
        toks = toks[1:-2] + toks[-1:]
    p = _Parser(toks, ring)
    gens = [p.poly()]
    while p.accept(","):
        gens.append(p.poly())
    if p.tok.kind != "eof":
        p.error("unexpected token")
    if len(gens) == 1 and gens[0].is_zero():
        gens = []
    return Ideal(ring, tuple(gens))


def parse_univariate(text: str):
    """Parse a polynomial in one variable into a UniPolyQ; returns (poly, variable)."""
    from hibi.algebra import UniPolyQ

    names = {t.text for t in tokenize(text) if t.kind == "name"}
    if len(names) > 1:
        tok = next(t for t in tokenize(text) if t.kind == "name" and t.text != sorted(names)[0])
        raise ParseError("expected a univariate polynomial", tok.line, tok.col)
    var = names.pop() if names else "X"
    f = parse_polynomial(text, Ring((var,)))
    coeffs = [Fraction(0)] * (max(f.total_degree, 0) + 1)
    for (e,), c in f.terms.items():
        coeffs[e] = c
    return UniPolyQ(tuple(coeffs)), var


_SERIES = re.compile(r"^(?P<num>.*?)(?:/\(1-λ\)(?:\^(?P<d>\d+))?)?$")


def parse_series(text: str):
    """Inverse of ``report.format_series``."""
    from hibi.hilbert import PoincareSeries

    m = _SERIES.match(text.strip())
    num = m.group("num").strip()
    d = 0
    if "/(1-λ)" in text:
        d = int(m.group("d") or 1)
    if num.startswith("(") and num.endswith(")"):
        num = num[1:-1]
    try:
        q = parse_polynomial(num.replace("λ", "L"), Ring(("L",)))
    except ParseError as exc:
        raise ParseError(f"bad series numerator: {exc.msg}", 1, exc.col) from None
    coeffs = [0] * (max(q.total_degree, 0) + 1)
    for (e,), c in q.terms.items():
        if c.denominator != 1:
            raise ParseError("series coefficients must be integers", 1, 1)
        coeffs[e] = int(c)
    return PoincareSeries(tuple(coeffs), d)
