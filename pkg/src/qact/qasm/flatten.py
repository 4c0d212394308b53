"""Expand a parsed program into a flat list of built-in gate applications."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from qact.errors import FlattenError
from qact.qasm.ast import (
    BUILTIN_GATES,
    PRIMITIVE_ALIASES,
    Barrier,
    Conditional,
    GateApp,
    GateDef,
    Measure,
    OpaqueApp,
    Operand,
    QasmProgram,
    Reset,
    Statement,
)
from qact.qasm.expr import eval_param_expr

OP_KINDS = ("builtin_gate", "opaque_gate", "measure", "reset", "barrier")


@dataclass(frozen=True)
class FlatOp:
    kind: str
    name: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()
    clbits: tuple[int, ...] = ()
    # clbits of the register an ``if`` statement tests; empty when unconditional
    cond_clbits: tuple[int, ...] = ()
    cond_value: int | None = None

    @property
    def conditional(self) -> bool:
        return self.cond_value is not None

    @property
    def is_gate(self) -> bool:
        return self.kind in ("builtin_gate", "opaque_gate")

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "name": self.name,
            "params": list(self.params),
            "qubits": list(self.qubits),
            "clbits": list(self.clbits),
            "conditional": self.conditional,
        }


@dataclass(frozen=True)
class FlatCircuit:
    num_qubits: int
    num_clbits: int
    ops: tuple[FlatOp, ...]

    def __post_init__(self) -> None:
        for op in self.ops:
            if op.kind not in OP_KINDS:
                raise ValueError(f"unknown op kind {op.kind!r}")
            if any(not 0 <= q < self.num_qubits for q in op.qubits):
                raise ValueError(f"{op.name} references a qubit outside 0..{self.num_qubits - 1}")
            if any(not 0 <= c < self.num_clbits for c in op.clbits + op.cond_clbits):
                raise ValueError(f"{op.name} references a clbit outside 0..{self.num_clbits - 1}")


class _Flattener:
    def __init__(self, program: QasmProgram):
        self.program = program
        self.qmap: dict[str, list[int]] = {}
        self.cmap: dict[str, list[int]] = {}
        nq = nc = 0
        for decl in program.declarations:
            if decl.kind == "qreg":
                self.qmap[decl.name] = list(range(nq, nq + decl.size))
                nq += decl.size
            else:
                self.cmap[decl.name] = list(range(nc, nc + decl.size))
                nc += decl.size
        self.num_qubits, self.num_clbits = nq, nc
        self.gates: dict[str, GateDef] = {gd.name: gd for gd in program.gate_defs}
        self.ops: list[FlatOp] = []

    def run(self) -> FlatCircuit:
        for stmt in self.program.statements:
            self.statement(stmt, (), None)
        return FlatCircuit(self.num_qubits, self.num_clbits, tuple(self.ops))

    def resolve(self, operand: Operand, regmap: dict[str, list[int]]) -> list[int]:
        indices = regmap[operand.register]
        return list(indices) if operand.index is None else [indices[operand.index]]

    def broadcast(self, operands: tuple[Operand, ...], regmap: dict[str, list[int]], what: str) -> list[list[int]]:
        """Expand register-wide operands index-wise; returns one operand row per application."""
        resolved = [self.resolve(o, regmap) for o in operands]
        sizes = {len(r) for o, r in zip(operands, resolved) if o.index is None}
        if len(sizes) > 1:
            raise FlattenError(f"{what} applied to registers of unequal sizes {sorted(sizes)}")
        n = sizes.pop() if sizes else 1
        return [[r[j] if o.index is None else r[0] for o, r in zip(operands, resolved)] for j in range(n)]

    def statement(self, stmt: Statement, cond_clbits: tuple[int, ...], cond_value: int | None) -> None:
        if isinstance(stmt, Conditional):
            self.statement(stmt.body, tuple(self.cmap[stmt.creg]), stmt.value)
        elif isinstance(stmt, Measure):
            qs = self.resolve(stmt.qubit, self.qmap)
            cs = self.resolve(stmt.clbit, self.cmap)
            if len(qs) != len(cs):
                raise FlattenError(
                    f"measure of {stmt.qubit.register!r} ({len(qs)} qubits) into "
                    f"{stmt.clbit.register!r} ({len(cs)} bits): unequal register sizes"
                )
            for q, c in zip(qs, cs):
                self.ops.append(FlatOp("measure", "measure", (q,), (), (c,), cond_clbits, cond_value))
        elif isinstance(stmt, Reset):
            for q in self.resolve(stmt.qubit, self.qmap):
                self.ops.append(FlatOp("reset", "reset", (q,), (), (), cond_clbits, cond_value))
        elif isinstance(stmt, Barrier):
            qubits: list[int] = []
            for o in stmt.qubits:
                qubits.extend(q for q in self.resolve(o, self.qmap) if q not in qubits)
            self.ops.append(FlatOp("barrier", "barrier", tuple(qubits)))
        elif isinstance(stmt, (GateApp, OpaqueApp)):
            params = [eval_param_expr(p) for p in stmt.params]
            for row in self.broadcast(stmt.qubits, self.qmap, stmt.name):
                self.apply(stmt.name, params, row, cond_clbits, cond_value)
        else:  # pragma: no cover
            raise TypeError(f"unexpected statement {stmt!r}")

    def apply(
        self,
        name: str,
        params: list[float],
        qubits: list[int],
        cond_clbits: tuple[int, ...],
        cond_value: int | None,
    ) -> None:
        builtin = PRIMITIVE_ALIASES.get(name, name)
        if builtin in BUILTIN_GATES:
            arity, nparams = BUILTIN_GATES[builtin]
            self.check_arity(name, arity, nparams, qubits, params)
            self.ops.append(
                FlatOp("builtin_gate", builtin, tuple(qubits), tuple(params), (), cond_clbits, cond_value)
            )
            return
        gd = self.gates[name]
        self.check_arity(name, len(gd.qubit_params), len(gd.param_names), qubits, params)
        if gd.body is None:
            self.ops.append(FlatOp("opaque_gate", name, tuple(qubits), tuple(params), (), cond_clbits, cond_value))
            return
        bindings = dict(zip(gd.param_names, params))
        wires = dict(zip(gd.qubit_params, qubits))
        for item in gd.body:
            mapped = [wires[o.register] for o in item.qubits]
            if isinstance(item, Barrier):
                self.ops.append(FlatOp("barrier", "barrier", tuple(mapped)))
                continue
            inner = [eval_param_expr(p, bindings) for p in item.params]
            self.apply(item.name, inner, mapped, cond_clbits, cond_value)

    @staticmethod
    def check_arity(name: str, arity: int, nparams: int, qubits: list[int], params: list[float]) -> None:
        if len(qubits) != arity:
            raise FlattenError(f"gate {name!r} takes {arity} qubit(s), applied to {len(qubits)}")
        if len(params) != nparams:
            raise FlattenError(f"gate {name!r} takes {nparams} parameter(s), given {len(params)}")


def flatten(program: QasmProgram) -> FlatCircuit:
    """Inline user gates and expand register shorthand.

    Registers map to contiguous global indices in declaration order.
    Conditionals survive as ``cond_value``/``cond_clbits`` on every op they
    expand to; opaque gates stay atomic.
    """
    return _Flattener(program).run()
