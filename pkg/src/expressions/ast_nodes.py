"""
Expression AST

Node types produced by the parser. Nodes are immutable and compare
structurally, which is what the pretty-print round trip relies on.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple


class NodeKind(Enum):
    """Kinds of expression nodes."""
    RATIONAL = "rational"
    IDENTIFIER = "identifier"
    NEGATE = "negate"
    ADD = "+"
    SUBTRACT = "-"
    MULTIPLY = "*"
    DIVIDE = "/"
    POWER = "^"


BINARY_KINDS = (NodeKind.ADD, NodeKind.SUBTRACT, NodeKind.MULTIPLY, NodeKind.DIVIDE)


@dataclass(frozen=True)
class ExprAst:
    """
    One expression node.

    RATIONAL carries `value`, IDENTIFIER carries `name`, POWER carries its
    nonnegative integer `exponent`; operators carry their operands in
    `children`.
    """
    kind: NodeKind
    children: Tuple['ExprAst', ...] = ()
    value: Optional[Fraction] = None
    name: Optional[str] = None
    exponent: Optional[int] = None

    def __post_init__(self):
        if self.kind == NodeKind.RATIONAL and self.value is None:
            raise ValueError("rational node needs a value")
        if self.kind == NodeKind.IDENTIFIER and not self.name:
            raise ValueError("identifier node needs a name")
        if self.kind == NodeKind.POWER and (self.exponent is None or self.exponent < 0):
            raise ValueError("power node needs a nonnegative integer exponent")

    @classmethod
    def rational(cls, value: Fraction) -> 'ExprAst':
        return cls(NodeKind.RATIONAL, value=Fraction(value))

    @classmethod
    def identifier(cls, name: str) -> 'ExprAst':
        return cls(NodeKind.IDENTIFIER, name=name)

    @classmethod
    def negate(cls, operand: 'ExprAst') -> 'ExprAst':
        return cls(NodeKind.NEGATE, (operand,))

    @classmethod
    def binary(cls, kind: NodeKind, left: 'ExprAst', right: 'ExprAst') -> 'ExprAst':
        if kind not in BINARY_KINDS:
            raise ValueError(f"Not a binary operator: {kind}")
        return cls(kind, (left, right))

    @classmethod
    def power(cls, base: 'ExprAst', exponent: int) -> 'ExprAst':
        return cls(NodeKind.POWER, (base,), exponent=exponent)

    @property
    def is_atom(self) -> bool:
        return self.kind in (NodeKind.RATIONAL, NodeKind.IDENTIFIER)

    def identifiers(self) -> frozenset:
        if self.kind == NodeKind.IDENTIFIER:
            return frozenset([self.name])
        names = frozenset()
        for child in self.children:
            names |= child.identifiers()
        return names
