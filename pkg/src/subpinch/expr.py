"""A small arithmetic expression language for immersion component maps.

Expressions use ``+ - * / **``, unary minus, parentheses, numeric literals,
the constants ``pi`` and ``e``, the parameters ``u1 .. un`` and the functions
``sin cos tan exp log sqrt pow``.  Parsing goes through :mod:`ast` with a
whitelist, so nothing outside that grammar is ever evaluated.
"""

from __future__ import annotations

import ast
import math
import re

import numpy as np

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "exp": np.exp,
    "log": np.log,
    "sqrt": np.sqrt,
    "pow": np.power,
}
CONSTANTS = {"pi": math.pi, "e": math.e}

_BINOPS = {
    ast.Add: np.add,
    ast.Sub: np.subtract,
    ast.Mult: np.multiply,
    ast.Div: np.divide,
    ast.Pow: np.power,
}
_PARAM = re.compile(r"u([1-9][0-9]*)$")


class ExpressionError(ValueError):
    """Raised for expressions outside the supported grammar."""


def _compile(node, n):
    if isinstance(node, ast.Expression):
        return _compile(node.body, n)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) \
            and not isinstance(node.value, bool):
        v = float(node.value)
        return lambda u: v
    if isinstance(node, ast.Name):
        if node.id in CONSTANTS:
            v = CONSTANTS[node.id]
            return lambda u: v
        m = _PARAM.match(node.id)
        if m:
            k = int(m.group(1))
            if k > n:
                raise ExpressionError(f"parameter {node.id} exceeds dimension {n}")
            return lambda u: u[k - 1]
        raise ExpressionError(f"unknown name {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        arg = _compile(node.operand, n)
        if isinstance(node.op, ast.USub):
            return lambda u: -arg(u)
        return arg
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        op = _BINOPS[type(node.op)]
        left, right = _compile(node.left, n), _compile(node.right, n)
        return lambda u: op(left(u), right(u))
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        name = node.func.id
        if name not in FUNCTIONS or node.keywords:
            raise ExpressionError(f"unsupported function {name!r}")
        nargs = 2 if name == "pow" else 1
        if len(node.args) != nargs:
            raise ExpressionError(f"{name} takes {nargs} argument(s)")
        fn = FUNCTIONS[name]
        args = [_compile(a, n) for a in node.args]
        return lambda u: fn(*(a(u) for a in args))
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")


def compile_expression(text: str, n: int):
    """Compile ``text`` into a function of a parameter vector of length ``n``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
    return _compile(tree, n)


def compile_map(components, n: int):
    """Compile a list of component expressions into ``f: R^n -> R^m``.

    The returned function also accepts parameter arrays of shape ``(n, ...)``
    and then returns shape ``(m, ...)``.
    """
    if isinstance(components, str) or not components:
        raise ExpressionError("map must be a non-empty list of expressions")
    fns = [compile_expression(c, n) for c in components]

    def f(u):
        u = np.asarray(u, dtype=float)
        if u.shape[0] != n:
            raise ValueError(f"expected {n} parameters, got {u.shape[0]}")
        with np.errstate(all="raise"):
            try:
                vals = [np.broadcast_to(fn(u), u.shape[1:]) for fn in fns]
            except FloatingPointError as exc:
                raise ValueError(f"map evaluation failed at u={u.tolist()}: {exc}") from None
        return np.stack(vals).astype(float)

    return f
