"""Evaluate the small arithmetic expressions used in branch and region tables.

Tables store bounds and values as strings such as ``"(5*n+4)/6"`` or
``"2*(i-1)-n"`` so they can be compared line by line with the written
construction. Only integer literals, names, ``+ - * /`` and unary minus are
accepted; division is exact and a non-integral result is an error.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


class NonIntegralBound(ValueError):
    """An expression evaluated to a fraction where an index or color was expected."""


@lru_cache(maxsize=None)
def _parse(expr: str) -> ast.expr:
    tree = ast.parse(expr, mode="eval").body
    for node in ast.walk(tree):
        if not isinstance(
            node,
            (ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name, ast.Load,
             ast.Add, ast.Sub, ast.Mult, ast.Div, ast.USub),
        ):
            raise ValueError(f"unsupported syntax in {expr!r}: {type(node).__name__}")
    return tree


def _eval(node: ast.expr, env: Mapping[str, int]) -> Fraction:
    if isinstance(node, ast.Constant):
        if not isinstance(node.value, int):
            raise ValueError(f"only integer literals allowed, got {node.value!r}")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp):
        return -_eval(node.operand, env)
    if isinstance(node, ast.BinOp):
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    raise ValueError(f"unsupported node {type(node).__name__}")


def evaluate(expr: str, **env: int) -> int:
    """Evaluate ``expr`` with the given integer bindings; the result must be an integer."""
    value = _eval(_parse(expr), env)
    if value.denominator != 1:
        raise NonIntegralBound(f"{expr!r} evaluates to {value} with {env}")
    return int(value)
