"""Expression parser and line-oriented job files.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | IDENT | '(' expr ')'

Rational literals are written ``p/q``. Multiplication is always explicit.
Division by a non-constant is only accepted when rational functions are
requested.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParseError, UnknownVariable
from .polycore import Polynomial, RationalFunction, VarSet

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "end"
    text: str
    column: int


def tokenize(text: str, line: int = 1):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start + 1))
        pos = m.end()
    tokens.append(Token("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text, varset, allow_fractions, line):
        self.tokens = tokenize(text, line)
        self.i = 0
        self.varset = varset
        self.allow_fractions = allow_fractions
        self.line = line

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, self.line, tok.column)

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, *ops):
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self):
        if self.tok.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.at("+", "-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.at("*", "/"):
            op = self.take()
            rhs_tok = self.tok
            rhs = self.unary()
            if op.text == "*":
                value = value * rhs
            else:
                value = self.divide(value, rhs, rhs_tok)
        return value

    def divide(self, value, rhs, tok):
        if isinstance(rhs, Polynomial) and rhs.is_constant():
            c = rhs.constant_value()
            if not c:
                raise self.error("division by zero", tok)
            return value * (1 / c)
        if not self.allow_fractions:
            raise self.error("division by a non-constant polynomial", tok)
        if isinstance(rhs, RationalFunction) and rhs.is_zero():
            raise self.error("division by zero", tok)
        return RationalFunction.coerce(value) / rhs

    def unary(self):
        if self.at("-"):
            self.take()
            return -self.unary()
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            caret = self.take()
            if self.at("-"):
                raise self.error("negative exponents are not allowed")
            if self.tok.kind != "int":
                if self.tok.kind == "end":
                    raise self.error("dangling '^'", caret)
                raise self.error("exponent must be a nonnegative integer literal")
            exp = int(self.take().text)
            if self.at("/") and self.tokens[self.i + 1].kind == "int":
                raise self.error("fractional exponents are not allowed")
            if self.at("^"):
                raise self.error("chained exponents are ambiguous; use parentheses")
            return base**exp
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            return Polynomial.const(self.varset, int(t.text))
        if t.kind == "ident":
            self.take()
            if t.text not in self.varset.names:
                raise UnknownVariable(
                    f"undeclared variable {t.text!r} (line {self.line}, column {t.column}); "
                    f"declared: {', '.join(self.varset.names)}"
                )
            return Polynomial.var(self.varset, t.text)
        if self.at("("):
            self.take()
            value = self.expr()
            if not self.at(")"):
                raise self.error("expected ')'")
            self.take()
            return value
        if t.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {t.text!r}")


def identifiers(text: str):
    """Identifiers in order of first appearance."""
    seen = []
    for t in tokenize(text):
        if t.kind == "ident" and t.text not in seen:
            seen.append(t.text)
    return seen


def _resolve_varset(text, varset):
    if varset is not None:
        return varset if isinstance(varset, VarSet) else VarSet.of(varset)
    names = identifiers(text)
    return VarSet(tuple(names) or ("x",))


def parse_polynomial(text: str, varset: Optional[VarSet] = None, line: int = 1) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial`.

    Without ``varset`` the variables are taken in order of first appearance.
    """
    vs = _resolve_varset(text, varset)
    value = _Parser(text, vs, False, line).parse()
    return value


def parse_rational_function(text: str, varset: Optional[VarSet] = None, line: int = 1):
    """Like :func:`parse_polynomial` but ``/`` may divide by any nonzero expression."""
    vs = _resolve_varset(text, varset)
    return RationalFunction.coerce(_Parser(text, vs, True, line).parse())


def parse_rational(text: str, line: int = 1, column: int = 1) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text.strip()!r}", line, column) from None


# -- job files ---------------------------------------------------------------

_SECTION = re.compile(r"^\[([A-Za-z_][A-Za-z0-9_]*)\]$")


@dataclass
class JobFile:
    """Sectioned text: ``[section]`` headers, one entry per line, ``#`` comments."""

    sections: dict = field(default_factory=dict)
    path: str = "<job>"

    def has(self, name):
        return name in self.sections

    def lines(self, name):
        return self.sections.get(name, [])

    def varset(self, name="vars") -> Optional[VarSet]:
        entries = self.lines(name)
        if not entries:
            return None
        names = []
        for lineno, text in entries:
            names.extend(a for a in re.split(r"[\s,]+", text) if a)
        try:
            return VarSet(tuple(names))
        except ValueError as exc:
            raise ParseError(str(exc), entries[0][0], 1) from None

    def polynomials(self, name, varset):
        return [parse_polynomial(text, varset, lineno) for lineno, text in self.lines(name)]

    def rational_functions(self, name, varset):
        return [parse_rational_function(text, varset, lineno) for lineno, text in self.lines(name)]

    def points(self, name):
        out = []
        for lineno, text in self.lines(name):
            parts = [a for a in re.split(r"[\s,]+", text.strip("() ")) if a]
            out.append(tuple(parse_rational(a, lineno) for a in parts))
        return out

    def integer(self, name) -> Optional[int]:
        entries = self.lines(name)
        if not entries:
            return None
        lineno, text = entries[0]
        try:
            return int(text)
        except ValueError:
            raise ParseError(f"expected an integer in [{name}]", lineno, 1) from None


def parse_job(text: str, path: str = "<job>") -> JobFile:
    job = JobFile(path=path)
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1)
            if current in job.sections:
                raise ParseError(f"duplicate section [{current}]", lineno, 1)
            job.sections[current] = []
            continue
        if current is None:
            raise ParseError("content before the first [section] header", lineno, 1)
        job.sections[current].append((lineno, line))
    return job


def read_job(path: str) -> JobFile:
    with open(path, encoding="utf-8") as fh:
        return parse_job(fh.read(), str(path))
