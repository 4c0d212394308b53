"""Canonical OpenQASM 2.0 printer.

Output reparses to an equal AST. Binary operations are fully
parenthesised and literals use ``repr`` so floats survive exactly.
"""

from __future__ import annotations

from qact.qasm.ast import (
    Barrier,
    BinOp,
    Call,
    Conditional,
    GateApp,
    GateDef,
    Measure,
    Name,
    Neg,
    Num,
    OpaqueApp,
    Operand,
    ParamExpr,
    Pi,
    QasmProgram,
    Reset,
    Statement,
)


def format_expr(expr: ParamExpr) -> str:
    if isinstance(expr, Num):
        return repr(expr.value)
    if isinstance(expr, Pi):
        return "pi"
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Neg):
        return f"(-{format_expr(expr.operand)})"
    if isinstance(expr, Call):
        return f"{expr.func}({format_expr(expr.arg)})"
    if isinstance(expr, BinOp):
        return f"({format_expr(expr.left)} {expr.op} {format_expr(expr.right)})"
    raise TypeError(f"not a parameter expression: {expr!r}")


def _operand(o: Operand) -> str:
    return o.register if o.index is None else f"{o.register}[{o.index}]"


def _application(name: str, params: tuple[ParamExpr, ...], qubits: tuple[Operand, ...]) -> str:
    head = name
    if params:
        head += "(" + ", ".join(format_expr(p) for p in params) + ")"
    return f"{head} {', '.join(_operand(q) for q in qubits)};"


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, (GateApp, OpaqueApp)):
        return _application(stmt.name, stmt.params, stmt.qubits)
    if isinstance(stmt, Measure):
        return f"measure {_operand(stmt.qubit)} -> {_operand(stmt.clbit)};"
    if isinstance(stmt, Reset):
        return f"reset {_operand(stmt.qubit)};"
    if isinstance(stmt, Barrier):
        return f"barrier {', '.join(_operand(q) for q in stmt.qubits)};"
    if isinstance(stmt, Conditional):
        return f"if ({stmt.creg} == {stmt.value}) {format_statement(stmt.body)}"
    raise TypeError(f"not a statement: {stmt!r}")


def _gate_def(gd: GateDef) -> list[str]:
    head = ("opaque " if gd.opaque else "gate ") + gd.name
    if gd.param_names:
        head += "(" + ", ".join(gd.param_names) + ")"
    head += " " + ", ".join(gd.qubit_params)
    if gd.body is None:
        return [head + ";"]
    return [head + " {", *("  " + format_statement(item) for item in gd.body), "}"]


def format_program(program: QasmProgram) -> str:
    lines = [f"OPENQASM {program.version};"]
    lines += [f'include "{inc}";' for inc in program.includes]
    lines += [f"{d.kind} {d.name}[{d.size}];" for d in program.declarations]
    for gd in program.gate_defs:
        lines += _gate_def(gd)
    lines += [format_statement(s) for s in program.statements]
    return "\n".join(lines) + "\n"
