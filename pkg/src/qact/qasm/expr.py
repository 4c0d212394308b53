from __future__ import annotations

import math
from collections.abc import Mapping

from qact.errors import DivisionByZeroError, DomainError, ExpressionError, UnboundNameError
from qact.qasm.ast import BinOp, Call, Name, Neg, Num, ParamExpr, Pi

PI = 3.141592653589793


def _checked(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise DomainError(f"{what} is not a finite real number")
    return value


def _call(func: str, x: float) -> float:
    if func == "ln":
        if x <= 0:
            raise DomainError(f"ln of nonpositive value {x!r}")
        return math.log(x)
    if func == "sqrt":
        if x < 0:
            raise DomainError(f"sqrt of negative value {x!r}")
        return math.sqrt(x)
    try:
        return {"sin": math.sin, "cos": math.cos, "tan": math.tan, "exp": math.exp}[func](x)
    except OverflowError:
        raise DomainError(f"{func}({x!r}) overflows") from None
    except ValueError:
        raise DomainError(f"{func}({x!r}) is undefined") from None


def _evaluate(expr: ParamExpr, bindings: Mapping[str, float]) -> float:
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Pi):
        return PI
    if isinstance(expr, Name):
        try:
            return float(bindings[expr.name])
        except KeyError:
            raise UnboundNameError(f"unbound name {expr.name!r}") from None
    if isinstance(expr, Neg):
        return -_evaluate(expr.operand, bindings)
    if isinstance(expr, Call):
        return _checked(_call(expr.func, _evaluate(expr.arg, bindings)), f"{expr.func}(...)")
    if isinstance(expr, BinOp):
        a = _evaluate(expr.left, bindings)
        b = _evaluate(expr.right, bindings)
        if expr.op == "+":
            r = a + b
        elif expr.op == "-":
            r = a - b
        elif expr.op == "*":
            r = a * b
        elif expr.op == "/":
            if b == 0:
                raise DivisionByZeroError("division by zero")
            r = a / b
        elif expr.op == "^":
            if a == 0 and b < 0:
                raise DivisionByZeroError("zero raised to a negative power")
            try:
                r = math.pow(a, b)
            except (ValueError, OverflowError):
                raise DomainError(f"{a!r} ^ {b!r} is not a real number") from None
        else:
            raise ExpressionError(f"unknown operator {expr.op!r}")
        return _checked(r, f"{a!r} {expr.op} {b!r}")
    raise TypeError(f"not a parameter expression: {expr!r}")


def eval_param_expr(expr: ParamExpr | str, bindings: Mapping[str, float] | None = None) -> float:
    """Evaluate a gate parameter expression to a double.

    ``expr`` may be an AST node or expression text. Every free name must
    appear in ``bindings``.
    """
    if isinstance(expr, str):
        from qact.qasm.parser import parse_expression

        expr = parse_expression(expr)
    return _evaluate(expr, bindings or {})

