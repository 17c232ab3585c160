"""
Expression Parser

This module provides the tokenizer and recursive-descent parser for the
family-definition expression language:

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := base ('^' uint)?
    base     := rational | ident | '(' expr ')' | '-' factor
    rational := int ('/' uint)?

Identifiers are x, n or a declared parameter. Implicit multiplication and
non-integer exponents are rejected.

Unary minus takes a whole factor rather than a bare base, so the exponent
binds first: -x^2 is -(x^2), never (-x)^2.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

from .ast_nodes import ExprAst, NodeKind
from .errors import ParseError


RESERVED_IDENTIFIERS = ("x", "n")

_TOKEN_SPEC = [
    ('INT', r'\d+'),
    ('IDENT', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('OP', r'[-+*/^()]'),
    ('SKIP', r'[ \t\r\n]+'),
    ('MISMATCH', r'.'),
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(source: str) -> List[Token]:
    """
    Split source text into tokens.

    Raises:
        ParseError: On a character outside the language
    """
    tokens = []
    for match in _TOKEN_RE.finditer(source):
        kind = match.lastgroup
        if kind == 'SKIP':
            continue
        if kind == 'MISMATCH':
            raise ParseError(f"Malformed token {match.group()!r}", source, match.start())
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token('END', '', len(source)))
    return tokens


class ExpressionParser:
    """
    Recursive-descent parser over a fixed set of identifiers.

    One instance may parse many sources; parse state is local to each call.
    """

    def __init__(self, declared_params: Iterable[str] = ()):
        self.identifiers = frozenset(RESERVED_IDENTIFIERS) | frozenset(declared_params)
        self.logger = logging.getLogger(self.__class__.__name__)

    def parse(self, source: str) -> ExprAst:
        """
        Parse one expression.

        Args:
            source: Expression text

        Returns:
            The expression AST

        Raises:
            ParseError: For unknown identifiers, malformed tokens, unbalanced
                parentheses or exponents that are not nonnegative integers
        """
        if not isinstance(source, str):
            raise ParseError(f"Expression must be a string, got {type(source).__name__}")
        state = _ParseState(source, tokenize(source), self.identifiers)
        if state.peek().kind == 'END':
            raise ParseError("Empty expression", source, 0)
        ast = state.expr()
        token = state.peek()
        if token.kind != 'END':
            if token.text == ')':
                raise ParseError("Unbalanced parenthesis", source, token.position)
            raise ParseError(f"Unexpected token {token.text!r}", source, token.position)
        self.logger.debug(f"Parsed expression: {source}")
        return ast


class _ParseState:
    """Cursor over a token list; one method per grammar rule."""

    def __init__(self, source: str, tokens: List[Token], identifiers: frozenset):
        self.source = source
        self.tokens = tokens
        self.identifiers = identifiers
        self.index = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, text: str) -> Optional[Token]:
        token = self.peek()
        if token.kind == 'OP' and token.text == text:
            return self.advance()
        return None

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, self.source, token.position)

    def expr(self) -> ExprAst:
        node = self.term()
        while True:
            if self.accept('+'):
                node = ExprAst.binary(NodeKind.ADD, node, self.term())
            elif self.accept('-'):
                node = ExprAst.binary(NodeKind.SUBTRACT, node, self.term())
            else:
                return node

    def term(self) -> ExprAst:
        node = self.factor()
        while True:
            if self.accept('*'):
                node = ExprAst.binary(NodeKind.MULTIPLY, node, self.factor())
            elif self.accept('/'):
                node = ExprAst.binary(NodeKind.DIVIDE, node, self.factor())
            else:
                return node

    def factor(self) -> ExprAst:
        node = self.base()
        caret = self.accept('^')
        if caret:
            token = self.peek()
            if token.kind != 'INT':
                raise self.error("Exponent must be a nonnegative integer literal", token)
            self.advance()
            node = ExprAst.power(node, int(token.text))
            if self.peek().kind == 'OP' and self.peek().text == '^':
                raise self.error("Chained exponent needs parentheses")
        return node

    def base(self) -> ExprAst:
        token = self.peek()
        if token.kind == 'INT':
            return self.rational()
        if token.kind == 'IDENT':
            self.advance()
            if token.text not in self.identifiers:
                raise self.error(f"Unknown identifier {token.text!r}", token)
            return ExprAst.identifier(token.text)
        if self.accept('('):
            node = self.expr()
            if not self.accept(')'):
                raise self.error("Unbalanced parenthesis: expected ')'")
            return node
        if self.accept('-'):
            # Unary minus applies to the whole factor: -x^2 is -(x^2).
            return ExprAst.negate(self.factor())
        if token.kind == 'END':
            raise self.error("Unexpected end of expression", token)
        raise self.error(f"Unexpected token {token.text!r}", token)

    def rational(self) -> ExprAst:
        numerator = int(self.advance().text)
        slash, denominator = self.peek(), self.peek(1)
        if slash.kind == 'OP' and slash.text == '/' and denominator.kind == 'INT':
            self.index += 2
            if int(denominator.text) == 0:
                raise ParseError("Zero denominator in rational literal", self.source, denominator.position)
            return ExprAst.rational(Fraction(numerator, int(denominator.text)))
        return ExprAst.rational(Fraction(numerator))


def parse(src: str, declared_params: Iterable[str] = ()) -> ExprAst:
    """Parse `src` with identifiers x, n and `declared_params`."""
    return ExpressionParser(declared_params).parse(src)
