"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant, multiplication always explicit):

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    atom   := NUMBER | RATIONAL | VARIABLE | '(' expr ')'

Precedence is power > unary minus > multiply > add/subtract; '^' is
right-associative and its exponent must be a non-negative integer literal
(a literal tower like 2^3 is folded immediately and capped).  Rational
literals are single tokens of the form p/q with no embedded spaces.
Variables are a prefix from {u, y, a, c} followed by a maximal run of
digits; all variables in one expression must share a single prefix.  All
failures are ExprSyntaxError with a character offset, never a crash.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly
from .errors import ExprSyntaxError, PreconditionError

MAX_EXPONENT = 9999

_PREFIXES = "uyac"
_OPS = "+-*^()"


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    prefix: str
    index: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "var", one of the operator characters, "end"
    value: object
    pos: int


def _is_digit(ch):
    return "0" <= ch <= "9"


def _tokenize(src):
    tokens = []
    n = len(src)
    i = 0
    prefix_seen = None
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        start = i
        if _is_digit(ch):
            while i < n and _is_digit(src[i]):
                i += 1
            numerator = int(src[start:i])
            if i < n and src[i] == "/":
                if i + 1 >= n or not _is_digit(src[i + 1]):
                    raise ExprSyntaxError(
                        "expected digits after '/' in a rational literal", i + 1, {"digit"}
                    )
                i += 1
                dstart = i
                while i < n and _is_digit(src[i]):
                    i += 1
                denominator = int(src[dstart:i])
                if denominator == 0:
                    raise ExprSyntaxError("zero denominator in rational literal", dstart)
                tokens.append(_Token("num", Fraction(numerator, denominator), start))
            else:
                tokens.append(_Token("num", Fraction(numerator), start))
            continue
        if ch in _PREFIXES:
            i += 1
            if i >= n or not _is_digit(src[i]):
                raise ExprSyntaxError(
                    f"expected a variable index after {ch!r}", i, {"digit"}
                )
            dstart = i
            while i < n and _is_digit(src[i]):
                i += 1
            index = int(src[dstart:i])
            if index == 0:
                raise ExprSyntaxError("variable indices start at 1", dstart)
            if prefix_seen is None:
                prefix_seen = ch
            elif ch != prefix_seen:
                raise ExprSyntaxError(
                    f"mixed variable prefixes: {prefix_seen!r} and {ch!r}", start
                )
            tokens.append(_Token("var", (ch, index), start))
            continue
        if ch in _OPS:
            tokens.append(_Token(ch, ch, start))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", start)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, expected=()):
        tok = self.peek()
        raise ExprSyntaxError(message, tok.pos, expected)

    def parse(self):
        e = self.expr()
        if self.peek().kind != "end":
            self.fail("unexpected trailing input", {"+", "-", "*", "^", "end of input"})
        return e

    def expr(self):
        e = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self):
        e = self.unary()
        while self.peek().kind == "*":
            self.advance()
            e = Mul(e, self.unary())
        return e

    def unary(self):
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            return Pow(base, self.exponent())
        return base

    def exponent(self):
        tok = self.peek()
        if tok.kind != "num":
            self.fail("exponent must be a non-negative integer literal", {"integer"})
        if tok.value.denominator != 1:
            self.fail("exponent must be a non-negative integer literal", {"integer"})
        self.advance()
        value = int(tok.value)
        if self.peek().kind == "^":
            # literal towers fold right-associatively: a^2^3 is a^(2^3)
            self.advance()
            tail = self.exponent()
            if value > 1 and tail > 0:
                bits = tail * value.bit_length()
                if bits > 64 or value**tail > MAX_EXPONENT:
                    raise ExprSyntaxError("exponent too large", tok.pos)
                value = value**tail
            else:
                value = value**tail
        if value > MAX_EXPONENT:
            raise ExprSyntaxError("exponent too large", tok.pos)
        return value

    def atom(self):
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Num(tok.value)
        if tok.kind == "var":
            self.advance()
            prefix, index = tok.value
            return Var(prefix, index)
        if tok.kind == "(":
            self.advance()
            e = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'", {")"})
            self.advance()
            return e
        self.fail("expected a number, a variable, or '('", {"number", "variable", "("})


def parse_expr(src):
    """Parse an expression into an AST; raises ExprSyntaxError on bad input."""
    return _Parser(_tokenize(src)).parse()


def expr_prefix(expr):
    """The shared variable prefix of an expression, or None for constants."""
    if isinstance(expr, Var):
        return expr.prefix
    if isinstance(expr, (Add, Sub, Mul)):
        return expr_prefix(expr.left) or expr_prefix(expr.right)
    if isinstance(expr, Neg):
        return expr_prefix(expr.operand)
    if isinstance(expr, Pow):
        return expr_prefix(expr.base)
    return None


def lower_to_poly(expr, nvars, prefix):
    """Expand an AST into a sparse polynomial in the given ring."""
    if isinstance(expr, Num):
        return MultiPoly.constant(nvars, prefix, expr.value)
    if isinstance(expr, Var):
        if expr.prefix != prefix:
            raise PreconditionError(
                f"expected variables with prefix {prefix!r}, found {expr.prefix!r}"
            )
        if expr.index > nvars:
            raise PreconditionError(
                f"variable index out of range: {expr.prefix}{expr.index} in a ring with {nvars} variables"
            )
        return MultiPoly.variable(nvars, prefix, expr.index)
    if isinstance(expr, Neg):
        return -lower_to_poly(expr.operand, nvars, prefix)
    if isinstance(expr, Add):
        return lower_to_poly(expr.left, nvars, prefix) + lower_to_poly(expr.right, nvars, prefix)
    if isinstance(expr, Sub):
        return lower_to_poly(expr.left, nvars, prefix) - lower_to_poly(expr.right, nvars, prefix)
    if isinstance(expr, Mul):
        return lower_to_poly(expr.left, nvars, prefix) * lower_to_poly(expr.right, nvars, prefix)
    if isinstance(expr, Pow):
        return lower_to_poly(expr.base, nvars, prefix) ** expr.exponent
    raise PreconditionError(f"unknown expression node {type(expr).__name__}")
