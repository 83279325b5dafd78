"""Recursive-descent parser for the CLI expression syntax.

Grammar (whitespace insensitive, identifiers case insensitive):

    expr     := term (("+" | "-") term)*
    term     := unary ("*" unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    atom     := rational | IDENT | IDENT "(" expr ("," expr)* ")" | "(" expr ")"
    rational := INT ("/" INT)?

Precedence is ^ over unary minus over * over binary +/-; +, - and * are left
associative.  Exponents and the trailing integer arguments of rc, rcd, tv,
q and eis must be nonnegative integer literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .calculus import Bracket, Derivation, bracket, derive
from .forms import DWP, E1, E2, E4, WP, QJForm, ScaledJForm, e6_form, eisenstein_in_generators, q_coefficient


class ParseError(ValueError):
    """Syntax error, carrying the byte offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class EvalError(ValueError):
    """A structurally valid expression that cannot be evaluated."""


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


Expr = Union[Lit, Var, Neg, Add, Sub, Mul, Pow, Call]

_VARIABLES = ("wp", "dwp", "e1", "e2", "e4", "e6")
# function name -> (number of form arguments, number of trailing integer arguments)
_FUNCTIONS = {
    "dz": (1, 0),
    "dtau": (1, 0),
    "ob": (1, 0),
    "d": (1, 0),
    "delta": (1, 0),
    "rc": (2, 1),
    "rcd": (2, 1),
    "tv": (2, 1),
    "q": (1, 2),
    "eis": (0, 1),
}

_SYMBOLS = "+-*^(),/"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j].lower(), i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {shown!r}", tok[2])
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek()[0] == "*":
            self.advance()
            node = Mul(node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            node = Pow(node, self._integer_literal("exponent"))
        return node

    def _integer_literal(self, role: str) -> int:
        # A nonnegative integer literal, optionally parenthesized; a
        # parenthesized rational parses but is rejected with a clear message.
        tok = self.peek()
        if tok[0] == "num":
            value = self._rational()
        elif tok[0] == "(":
            self.advance()
            inner = self.peek()
            if inner[0] == "num":
                value = self._rational()
            elif inner[0] == "-":
                self.advance()
                value = -self._rational()
            else:
                raise ParseError(f"{role} must be a nonnegative integer literal", inner[2])
            self.expect(")")
        elif tok[0] == "-":
            self.advance()
            value = -self._rational()
        else:
            raise ParseError(f"{role} must be a nonnegative integer literal", tok[2])
        if value.denominator != 1:
            raise ParseError(f"non-integer {role}: {value}", tok[2])
        if value < 0:
            raise ParseError(f"negative {role}: {value}", tok[2])
        return int(value)

    def _rational(self) -> Fraction:
        tok = self.expect("num")
        numerator = int(tok[1])
        if self.peek()[0] == "/":
            self.advance()
            dtok = self.peek()
            if dtok[0] != "num":
                raise ParseError("malformed rational: missing denominator", dtok[2])
            self.advance()
            denominator = int(dtok[1])
            if denominator == 0:
                raise ParseError("malformed rational: zero denominator", dtok[2])
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def atom(self) -> Expr:
        tok = self.peek()
        if tok[0] == "num":
            return Lit(self._rational())
        if tok[0] == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok[0] == "ident":
            self.advance()
            name = tok[1]
            if self.peek()[0] == "(":
                if name not in _FUNCTIONS:
                    raise ParseError(f"unknown function {name!r}", tok[2])
                self.advance()
                args: list = [self.expr()]
                while self.peek()[0] == ",":
                    self.advance()
                    args.append(self.expr())
                self.expect(")")
                return self._make_call(name, args, tok[2])
            if name not in _VARIABLES:
                raise ParseError(f"unknown identifier {name!r}", tok[2])
            return Var(name)
        shown = tok[1] or "end of input"
        raise ParseError(f"unexpected {shown!r}", tok[2])

    def _make_call(self, name: str, args: list, position: int) -> Call:
        n_forms, n_ints = _FUNCTIONS[name]
        if len(args) != n_forms + n_ints:
            raise ParseError(
                f"{name} takes {n_forms + n_ints} argument(s), got {len(args)}", position
            )
        converted = list(args[:n_forms])
        for arg in args[n_forms:]:
            if not isinstance(arg, Lit) or arg.value.denominator != 1 or arg.value < 0:
                raise ParseError(
                    f"the trailing argument(s) of {name} must be nonnegative integer literals",
                    position,
                )
            converted.append(int(arg.value))
        return Call(name, tuple(converted))


def parse(text: str) -> Expr:
    """Parse an expression; raises :class:`ParseError` with a byte offset."""
    return _Parser(text).parse()


_VARIABLE_FORMS = {
    "wp": WP,
    "dwp": DWP,
    "e1": E1,
    "e2": E2,
    "e4": E4,
}

_DERIVATION_CALLS = {
    "dz": Derivation.DZ,
    "dtau": Derivation.DTAU,
    "ob": Derivation.OB,
    "d": Derivation.DJAC,
    "delta": Derivation.DELTA,
}

_BRACKET_CALLS = {
    "rc": Bracket.RC_TAU,
    "rcd": Bracket.RC_D,
    "tv": Bracket.TV,
}


def _form_operand(value: QJForm | ScaledJForm, context: str) -> QJForm:
    if isinstance(value, ScaledJForm):
        raise EvalError(f"q(...) results cannot be used inside {context}")
    return value


def evaluate(expr: Expr) -> QJForm | ScaledJForm:
    """Evaluate an AST to a form; q(...) may appear only at top level."""
    if isinstance(expr, Lit):
        return QJForm.constant(expr.value)
    if isinstance(expr, Var):
        if expr.name == "e6":
            return e6_form()
        return _VARIABLE_FORMS[expr.name]
    if isinstance(expr, Neg):
        return -1 * _form_operand(evaluate(expr.operand), "negation")
    if isinstance(expr, Add):
        return _form_operand(evaluate(expr.left), "addition") + _form_operand(
            evaluate(expr.right), "addition"
        )
    if isinstance(expr, Sub):
        return _form_operand(evaluate(expr.left), "subtraction") - _form_operand(
            evaluate(expr.right), "subtraction"
        )
    if isinstance(expr, Mul):
        return _form_operand(evaluate(expr.left), "multiplication") * _form_operand(
            evaluate(expr.right), "multiplication"
        )
    if isinstance(expr, Pow):
        return _form_operand(evaluate(expr.base), "powers") ** expr.exponent
    if isinstance(expr, Call):
        if expr.fn in _DERIVATION_CALLS:
            f = _form_operand(evaluate(expr.args[0]), expr.fn)
            return derive(_DERIVATION_CALLS[expr.fn], f)
        if expr.fn in _BRACKET_CALLS:
            f = _form_operand(evaluate(expr.args[0]), expr.fn)
            g = _form_operand(evaluate(expr.args[1]), expr.fn)
            return bracket(_BRACKET_CALLS[expr.fn], f, g, expr.args[2])
        if expr.fn == "q":
            f = _form_operand(evaluate(expr.args[0]), "q")
            return q_coefficient(f, expr.args[1], expr.args[2])
        if expr.fn == "eis":
            try:
                return eisenstein_in_generators(expr.args[0])
            except ValueError as exc:
                raise EvalError(str(exc)) from exc
    raise EvalError(f"cannot evaluate node {expr!r}")


def parse_and_evaluate(text: str) -> QJForm | ScaledJForm:
    return evaluate(parse(text))
