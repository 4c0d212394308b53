"""OpenQASM 2.0 front end: parsing, parameter evaluation and flattening."""

from qact.qasm.ast import BUILTIN_GATES, GateDef, QasmProgram
from qact.qasm.expr import PI, eval_param_expr
from qact.qasm.flatten import FlatCircuit, FlatOp, flatten
from qact.qasm.parser import parse_expression, parse_program
from qact.qasm.printer import format_program

__all__ = [
    "BUILTIN_GATES",
    "PI",
    "FlatCircuit",
    "FlatOp",
    "GateDef",
    "QasmProgram",
    "eval_param_expr",
    "flatten",
    "format_program",
    "parse_expression",
    "parse_program",
]
