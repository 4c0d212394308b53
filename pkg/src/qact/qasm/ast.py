"""AST node types for the supported OpenQASM 2.0 subset.

All nodes are frozen dataclasses so that two parses of the same source
compare equal. Source positions are kept out of equality on purpose: a
program printed and reparsed must equal the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

# (name, qubit arity, parameter count)
BUILTIN_GATES: dict[str, tuple[int, int]] = {
    "u1": (1, 1),
    "u2": (1, 2),
    "u3": (1, 3),
    "id": (1, 0),
    "x": (1, 0),
    "y": (1, 0),
    "z": (1, 0),
    "h": (1, 0),
    "s": (1, 0),
    "sdg": (1, 0),
    "t": (1, 0),
    "tdg": (1, 0),
    "rx": (1, 1),
    "ry": (1, 1),
    "rz": (1, 1),
    "cx": (2, 0),
    "cz": (2, 0),
    "cy": (2, 0),
    "ch": (2, 0),
    "swap": (2, 0),
    "crz": (2, 1),
    "cu1": (2, 1),
    "cu3": (2, 3),
    "ccx": (3, 0),
}

# OpenQASM 2.0 primitives, folded onto their qelib1 equivalents when flattening.
PRIMITIVE_ALIASES: dict[str, str] = {"U": "u3", "CX": "cx"}


# --- parameter expressions -------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: ParamExpr
    right: ParamExpr


@dataclass(frozen=True)
class Neg:
    operand: ParamExpr


@dataclass(frozen=True)
class Call:
    func: str  # sin cos tan exp ln sqrt
    arg: ParamExpr


ParamExpr = Union[Num, Pi, Name, BinOp, Neg, Call]


# --- statements ------------------------------------------------------------


@dataclass(frozen=True)
class Operand:
    """A whole register (``index is None``) or one element of it."""

    register: str
    index: int | None = None


@dataclass(frozen=True)
class GateApp:
    name: str
    params: tuple[ParamExpr, ...]
    qubits: tuple[Operand, ...]


@dataclass(frozen=True)
class OpaqueApp:
    name: str
    params: tuple[ParamExpr, ...]
    qubits: tuple[Operand, ...]


@dataclass(frozen=True)
class Measure:
    qubit: Operand
    clbit: Operand


@dataclass(frozen=True)
class Reset:
    qubit: Operand


@dataclass(frozen=True)
class Barrier:
    qubits: tuple[Operand, ...]


@dataclass(frozen=True)
class Conditional:
    creg: str
    value: int
    body: GateApp | OpaqueApp | Measure | Reset


Statement = Union[GateApp, OpaqueApp, Measure, Reset, Barrier, Conditional]


@dataclass(frozen=True)
class GateDef:
    name: str
    param_names: tuple[str, ...]
    qubit_params: tuple[str, ...]
    # None for opaque declarations
    body: tuple[GateApp | Barrier, ...] | None

    @property
    def opaque(self) -> bool:
        return self.body is None


@dataclass(frozen=True)
class Declaration:
    kind: str  # "qreg" | "creg"
    name: str
    size: int


@dataclass(frozen=True)
class QasmProgram:
    version: str = "2.0"
    includes: tuple[str, ...] = ()
    declarations: tuple[Declaration, ...] = ()
    gate_defs: tuple[GateDef, ...] = ()
    statements: tuple[Statement, ...] = field(default=())

    def gate(self, name: str) -> GateDef | None:
        for gd in self.gate_defs:
            if gd.name == name:
                return gd
        return None

    def register(self, name: str) -> Declaration | None:
        for decl in self.declarations:
            if decl.name == name:
                return decl
        return None
