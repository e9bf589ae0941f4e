"""Text syntax for ring elements and matrices.

Grammar (whitespace insignificant, ``#`` starts a comment)::

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := ("-" | "+") unary | atom
    atom  := NUMBER | IDENT | "(" expr ")" | "[" expr ("," expr)+ "]"

NUMBER is an integer or a rational literal ``p/q`` (no spaces); there is no
division between ring elements.  ``[x1, ..., xm]`` is the left-normed
commutator.  A matrix body lists rows separated by ``;`` or newlines and
entries separated by ``,``.  A document starts with a ring declaration::

    ring: free a, b, c, d
    a, b
    c, d

Ring declarations: ``free <names>``, ``grassmann <k>``, ``rational``,
``u2`` (upper triangular 2x2 rationals, literals E11 E12 E22) and
``matrix <n>`` (n x n rationals, literals Eij).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import singledispatch

from .freealg import FreeAlgebra, NcPoly
from .grassmann import GrassmannAlgebra, GrassmannElem, mask_to_blade
from .matrix import MatrixRing, RingMatrix
from .rings import QQ, RationalField, Ring, left_normed
from .tpoly import TPoly


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, IDENT, OP, SEP, END
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)"
    r"|(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*()\[\],;])"
)


def tokenize(src: str, line: int = 1) -> list[Token]:
    """Newlines become row separators only outside parentheses and brackets."""
    tokens = []
    pos, col, depth = 0, 1, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind, text = m.lastgroup, m.group()
        if kind == "nl":
            if depth == 0:
                tokens.append(Token("SEP", "\n", line, col))
            line, col = line + 1, 1
        elif kind in ("ws", "comment"):
            col += len(text)
        else:
            if text in "([":
                depth += 1
            elif text in ")]":
                depth = max(depth - 1, 0)
            if kind == "op" and text == ";":
                tokens.append(Token("SEP", text, line, col))
            else:
                tokens.append(Token({"num": "NUM", "ident": "IDENT", "op": "OP"}[kind], text, line, col))
            col += len(text)
        pos = m.end()
    tokens.append(Token("END", "", line, col))
    return tokens


@singledispatch
def lookup_identifier(ring: Ring, name: str, tok: Token):
    raise ParseError(f"undeclared identifier {name!r}", tok.line, tok.col)


@lookup_identifier.register
def _(ring: FreeAlgebra, name, tok):
    if name not in ring.index:
        raise ParseError(f"undeclared identifier {name!r}", tok.line, tok.col)
    return ring.gen(name)


_GRASSMANN_GEN = re.compile(r"v([1-9]\d*)$")


@lookup_identifier.register
def _(ring: GrassmannAlgebra, name, tok):
    m = _GRASSMANN_GEN.match(name)
    if not m:
        raise ParseError(f"undeclared identifier {name!r}", tok.line, tok.col)
    i = int(m.group(1))
    if i > ring.rank:
        raise ParseError(f"{name} exceeds the rank of grassmann({ring.rank})", tok.line, tok.col)
    return ring.gen(i)


_MATRIX_UNIT = re.compile(r"E(?:(\d)(\d)|(\d+)_(\d+))$")


@lookup_identifier.register
def _(ring: MatrixRing, name, tok):
    m = _MATRIX_UNIT.match(name)
    if not m or ring.base != QQ:
        raise ParseError(f"undeclared identifier {name!r}", tok.line, tok.col)
    i, j = (int(g) for g in (m.groups()[:2] if m.group(1) else m.groups()[2:]))
    if not (1 <= i <= ring.n and 1 <= j <= ring.n):
        raise ParseError(f"{name} is outside {ring.n}x{ring.n} matrices", tok.line, tok.col)
    if ring.upper and i > j:
        raise ParseError(f"{name} is not upper triangular", tok.line, tok.col)
    return ring.unit(i - 1, j - 1)


class Parser:
    def __init__(self, tokens: list[Token], ring: Ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, msg: str):
        tok = self.tok
        found = "end of input" if tok.kind == "END" else repr(tok.text)
        raise ParseError(f"{msg}, found {found}", tok.line, tok.col)

    def expr(self):
        acc = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.at("*"):
            self.advance()
            acc = acc * self.unary()
        return acc

    def unary(self):
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.atom()

    def atom(self):
        tok = self.tok
        if tok.kind == "NUM":
            self.advance()
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", tok.line, tok.col)
            return self.ring.from_rational(Fraction(int(num), int(den or 1)))
        if tok.kind == "IDENT":
            self.advance()
            return lookup_identifier(self.ring, tok.text, tok)
        if self.at("("):
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if self.at("["):
            self.advance()
            items = [self.expr()]
            while self.at(","):
                self.advance()
                items.append(self.expr())
            if len(items) < 2:
                self.fail("a commutator needs at least two entries")
            self.expect("]")
            return left_normed(items)
        self.fail("expected a number, identifier, '(' or '['")

    def skip_separators(self):
        while self.tok.kind == "SEP":
            self.advance()

    def matrix_rows(self):
        rows = []
        self.skip_separators()
        while self.tok.kind != "END":
            row_tok = self.tok
            row = [self.expr()]
            while self.at(","):
                self.advance()
                row.append(self.expr())
            rows.append((row_tok, row))
            if self.tok.kind not in ("SEP", "END"):
                self.fail("expected ',' or a row separator")
            self.skip_separators()
        return rows


def parse_element(src: str, ring: Ring):
    """Parse one expression into an element of ``ring``."""
    p = Parser([t for t in tokenize(src) if t.kind != "SEP" or t.text == ";"], ring)
    if p.tok.kind == "END":
        p.fail("empty expression")
    value = p.expr()
    if p.tok.kind != "END":
        p.fail("unexpected trailing input")
    return value


def parse_ring_decl(text: str) -> Ring:
    """Ring from a declaration such as ``free a, b``, ``grassmann:4`` or ``rational``."""
    kind, _, rest = text.strip().replace(":", " ", 1).partition(" ")
    kind, rest = kind.strip().lower(), rest.strip()
    if kind == "free":
        names = [x for x in re.split(r"[\s,]+", rest) if x]
        if not names:
            raise ParseError("free ring declaration needs generator names")
        bad = [x for x in names if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", x)]
        if bad:
            raise ParseError(f"invalid generator names {bad}")
        return FreeAlgebra(names)
    if kind == "grassmann":
        if not rest.isdigit():
            raise ParseError(f"grassmann needs a rank, got {rest!r}")
        return GrassmannAlgebra(int(rest))
    if kind == "rational" and not rest:
        return QQ
    if kind == "u2" and not rest:
        return MatrixRing(2, QQ, upper=True)
    if kind in ("matrix", "upper") and rest.isdigit() and int(rest) >= 1:
        return MatrixRing(int(rest), QQ, upper=kind == "upper")
    raise ParseError(f"unknown ring declaration {text.strip()!r}")


@dataclass(frozen=True)
class SourceDoc:
    ring: Ring
    body: str
    body_line: int = 1


def parse_source(text: str) -> SourceDoc:
    lines = text.split("\n")
    for idx, raw in enumerate(lines):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.lower().startswith("ring"):
            raise ParseError("document must start with a 'ring:' declaration", idx + 1, 1)
        decl = line[4:].lstrip(" :")
        try:
            ring = parse_ring_decl(decl)
        except ParseError as e:
            raise ParseError(e.msg, idx + 1, 1) from None
        return SourceDoc(ring, "\n".join(lines[idx + 1:]), idx + 2)
    raise ParseError("empty document")


def parse_matrix(src, ring: Ring | None = None) -> RingMatrix:
    """Parse a matrix from a :class:`SourceDoc`, a full document, or a bare body plus ``ring``."""
    if isinstance(src, SourceDoc):
        doc = src
    elif ring is not None:
        doc = SourceDoc(ring, src)
    else:
        doc = parse_source(src)
    p = Parser(tokenize(doc.body, doc.body_line), doc.ring)
    rows = p.matrix_rows()
    if not rows:
        raise ParseError("no matrix rows", doc.body_line, 1)
    width = len(rows[0][1])
    for tok, row in rows:
        if len(row) != width:
            raise ParseError(f"ragged rows: expected {width} entries, got {len(row)}", tok.line, tok.col)
    if width != len(rows):
        raise ParseError(f"matrix is not square: {len(rows)} rows of {width} entries", rows[0][0].line, 1)
    return RingMatrix(doc.ring, [row for _, row in rows])


def _join_terms(terms) -> str:
    """terms: (coefficient Fraction, monomial text or '') in print order."""
    parts = []
    for c, mono in terms:
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


@singledispatch
def format_element(e) -> str:
    raise TypeError(f"no text form for {type(e).__name__}")


@format_element.register
def _(e: Fraction) -> str:
    return str(e)


@format_element.register
def _(e: int) -> str:
    return str(e)


@format_element.register
def _(e: NcPoly) -> str:
    names = e.ring.names
    return _join_terms((c, "*".join(names[i] for i in w)) for w, c in e.sorted_terms())


@format_element.register
def _(e: GrassmannElem) -> str:
    return _join_terms((c, "*".join(f"v{i}" for i in mask_to_blade(m))) for m, c in e.sorted_terms())


def _unit_name(i: int, j: int, n: int) -> str:
    return f"E{i + 1}{j + 1}" if n <= 9 else f"E{i + 1}_{j + 1}"


@format_element.register
def _(e: RingMatrix) -> str:
    if e.ring != QQ:
        raise TypeError("only matrices over the rationals have an element text form")
    return _join_terms((x, _unit_name(i, j, e.n)) for i, j, x in e.entries() if x)


@format_element.register
def _(e: TPoly) -> str:
    parts = []
    for k in range(e.degree, -1, -1):
        c = e.coeffs[k]
        if not c:
            continue
        s = format_element(c)
        single = " + " not in s and " - " not in s
        neg = single and s.startswith("-")
        body = s[1:] if neg else s
        tpow = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not single:
            body = f"({body})"
            text = f"{body}*{tpow}" if tpow else body
        elif not tpow:
            text = body
        elif body == "1":
            text = tpow
        else:
            text = f"{body}*{tpow}"
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append((" - " if neg else " + ") + text)
    return "".join(parts) if parts else "0"


@singledispatch
def ring_decl(ring: Ring) -> str:
    raise TypeError(f"no declaration syntax for {ring!r}")


@ring_decl.register
def _(ring: FreeAlgebra):
    return "free " + ", ".join(ring.names)


@ring_decl.register
def _(ring: GrassmannAlgebra):
    return f"grassmann {ring.rank}"


@ring_decl.register
def _(ring: RationalField):
    return "rational"


@ring_decl.register
def _(ring: MatrixRing):
    if ring.base != QQ:
        raise TypeError(f"no declaration syntax for {ring!r}")
    if ring.upper:
        return "u2" if ring.n == 2 else f"upper {ring.n}"
    return f"matrix {ring.n}"


def format_matrix(A: RingMatrix) -> str:
    """Matrix body: one row per line, entries separated by ', '."""
    return "\n".join(", ".join(format_element(x) for x in row) for row in A.rows)


def format_document(A: RingMatrix) -> str:
    return f"ring: {ring_decl(A.ring)}\n{format_matrix(A)}\n"
