"""Expression language for the algebra: lexer, parser, canonical renderer.

The star operator is syntactically non-associative on purpose: ``a*b*c``
is a parse error (E_CHAIN_STAR), because the algebra gives the two
readings different values and the surface language refuses to pick one
silently.  Chains must be parenthesized: ``(a*b)*c`` or ``a*(b*c)``.

Scalar literals (rationals, i, c0, y0, s2) may prefix a factor with ``*``
and those chains are fine: scalar action is associative.

Grammar:

    expr   := term (('+'|'-') term)*
    term   := factor | factor '*' factor
    factor := atom | scalar '*' factor | func '(' args ')' | '(' expr ')'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from gmpy2 import mpq

from ..scalar_ring import C0, CoeffElem, GQ_I, S2, Y0


class ExprError(Exception):
    """Parse or evaluation error with a stable code and source location."""

    def __init__(self, code: str, message: str, line: int = 0, col: int = 0):
        super().__init__("%s at %d:%d: %s" % (code, line, col, message))
        self.code = code
        self.line = line
        self.col = col
        self.message = message


E_CHAIN_STAR = "E_CHAIN_STAR"
E_UNKNOWN_IDENT = "E_UNKNOWN_IDENT"
E_ARITY = "E_ARITY"
E_SYNTAX = "E_SYNTAX"
E_TYPE = "E_TYPE"
E_DOMAIN = "E_DOMAIN"


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str          # NUM, IDENT, PUNCT, END
    text: str
    line: int
    col: int


_PUNCT = "+-*/(),"


def tokenize(src: str) -> List[Token]:
    out: List[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(Token("NUM", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(Token("IDENT", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            out.append(Token("PUNCT", ch, line, start_col))
            col += 1
            i += 1
            continue
        raise ExprError(E_SYNTAX, "unexpected character %r" % ch, line, start_col)
    out.append(Token("END", "", line, col))
    return out


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScalarLit(Node):
    text: str = ""


@dataclass(frozen=True)
class Atom(Node):
    name: str = ""


@dataclass(frozen=True)
class ScalarMul(Node):
    scalar: Node = None
    factor: Node = None


@dataclass(frozen=True)
class Star(Node):
    lhs: Node = None
    rhs: Node = None


@dataclass(frozen=True)
class Chain(Node):
    # first item sign is always '+'
    items: Tuple[Tuple[str, Node], ...] = ()


@dataclass(frozen=True)
class Call(Node):
    fn: str = ""
    args: Tuple[Node, ...] = ()


ATOMS = tuple(["e%d" % k for k in range(8)] + ["S%d" % k for k in range(8)]
              + ["L", "Lbar"])
SCALAR_IDENTS = ("i", "c0", "y0", "s2")
FUNCS = {"conj": 1, "tr": 1, "norm2": 1, "assoc": 3, "split3": 3,
         "eps4": 4, "Psi0": 2}


def scalar_value(text: str) -> CoeffElem:
    if text == "i":
        return CoeffElem.from_gauss(GQ_I)
    if text == "c0":
        return C0
    if text == "y0":
        return Y0
    if text == "s2":
        return S2
    return CoeffElem.from_rational(mpq(text))


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_punct(self, ch: str) -> Token:
        t = self.peek()
        if t.kind != "PUNCT" or t.text != ch:
            raise ExprError(E_SYNTAX, "expected %r, found %r" % (ch, t.text or "end"),
                            t.line, t.col)
        return self.next()

    # expr := term (('+'|'-') term)*
    def parse_expr(self) -> Node:
        first = self.parse_term()
        items = [("+", first)]
        while True:
            t = self.peek()
            if t.kind == "PUNCT" and t.text in "+-":
                self.next()
                items.append((t.text, self.parse_term()))
            else:
                break
        if len(items) == 1:
            return first
        return Chain(line=first.line, col=first.col, items=tuple(items))

    # term := factor | factor '*' factor   (no chained star)
    def parse_term(self) -> Node:
        left = self.parse_factor()
        t = self.peek()
        if t.kind == "PUNCT" and t.text == "*":
            self.next()
            right = self.parse_factor()
            t2 = self.peek()
            if t2.kind == "PUNCT" and t2.text == "*":
                raise ExprError(
                    E_CHAIN_STAR,
                    "chained star is ambiguous in a non-associative algebra; "
                    "parenthesize as (a*b)*c or a*(b*c)", t2.line, t2.col)
            return Star(line=left.line, col=left.col, lhs=left, rhs=right)
        return left

    # factor := atom | scalar '*' factor | func '(' args ')' | '(' expr ')'
    def parse_factor(self) -> Node:
        t = self.peek()
        if t.kind == "NUM":
            self.next()
            text = t.text
            nxt = self.peek()
            if nxt.kind == "PUNCT" and nxt.text == "/":
                self.next()
                den = self.peek()
                if den.kind != "NUM":
                    raise ExprError(E_SYNTAX, "expected a denominator",
                                    den.line, den.col)
                self.next()
                if int(den.text) == 0:
                    raise ExprError(E_DOMAIN, "zero denominator", den.line, den.col)
                text = "%s/%s" % (text, den.text)
            lit = ScalarLit(line=t.line, col=t.col, text=text)
            return self._maybe_scalar_chain(lit)
        if t.kind == "IDENT":
            name = t.text
            if name in SCALAR_IDENTS:
                self.next()
                lit = ScalarLit(line=t.line, col=t.col, text=name)
                return self._maybe_scalar_chain(lit)
            if name in FUNCS:
                self.next()
                self.expect_punct("(")
                args: List[Node] = []
                if not (self.peek().kind == "PUNCT" and self.peek().text == ")"):
                    args.append(self.parse_expr())
                    while self.peek().kind == "PUNCT" and self.peek().text == ",":
                        self.next()
                        args.append(self.parse_expr())
                self.expect_punct(")")
                if len(args) != FUNCS[name]:
                    raise ExprError(E_ARITY, "%s takes %d argument(s), got %d"
                                    % (name, FUNCS[name], len(args)), t.line, t.col)
                return Call(line=t.line, col=t.col, fn=name, args=tuple(args))
            if name in ATOMS:
                self.next()
                return Atom(line=t.line, col=t.col, name=name)
            raise ExprError(E_UNKNOWN_IDENT, "unknown identifier %r" % name,
                            t.line, t.col)
        if t.kind == "PUNCT" and t.text == "(":
            self.next()
            inner = self.parse_expr()
            self.expect_punct(")")
            return inner
        raise ExprError(E_SYNTAX, "unexpected %r" % (t.text or "end of input"),
                        t.line, t.col)

    def _maybe_scalar_chain(self, lit: ScalarLit) -> Node:
        t = self.peek()
        if t.kind == "PUNCT" and t.text == "*":
            self.next()
            return ScalarMul(line=lit.line, col=lit.col, scalar=lit,
                             factor=self.parse_factor())
        return lit


def parse(src: str) -> Node:
    p = _Parser(tokenize(src))
    node = p.parse_expr()
    t = p.peek()
    if t.kind != "END":
        raise ExprError(E_SYNTAX, "trailing input %r" % t.text, t.line, t.col)
    return node


# ---------------------------------------------------------------------------
# canonical renderer (stable under parse -> render -> parse)
# ---------------------------------------------------------------------------

def _operand(node: Node) -> str:
    # sum chains are not factors; they must re-enter through parentheses
    s = render(node)
    return "(%s)" % s if isinstance(node, Chain) else s


def render(node: Node, top: bool = False) -> str:
    if isinstance(node, ScalarLit):
        return node.text
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, ScalarMul):
        return "%s*%s" % (render(node.scalar), _operand(node.factor))
    if isinstance(node, Star):
        body = "%s*%s" % (_operand(node.lhs), _operand(node.rhs))
        return body if top else "(%s)" % body
    if isinstance(node, Chain):
        out = render(node.items[0][1])
        for sign, item in node.items[1:]:
            out += " %s %s" % (sign, render(item))
        return out
    if isinstance(node, Call):
        return "%s(%s)" % (node.fn, ", ".join(render(a, top=True)
                                              for a in node.args))
    raise TypeError("unknown node %r" % (node,))


def render_source(node: Node) -> str:
    """Render a full expression (star nodes keep their defining parens)."""
    return render(node, top=False)
