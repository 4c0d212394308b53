"""Test-only oracles and random generators."""

from __future__ import annotations

import random
from pathlib import Path

from qact.qasm import FlatCircuit, FlatOp
from qact.qasm.ast import BUILTIN_GATES

DATA = Path(__file__).parent / "data"
QASM_DIR = DATA / "qasm"
CARD_DIR = DATA / "cards"
GOLDEN_DIR = DATA / "golden"


def _wires(op: FlatOp) -> set[tuple[str, int]]:
    wires = {("q", q) for q in op.qubits}
    if op.kind != "barrier":
        wires |= {("c", c) for c in op.clbits + op.cond_clbits}
    return wires


def brute_force_depth(circuit: FlatCircuit) -> int:
    """Event scheduler: an op starts once every earlier op sharing a wire has
    finished; it finishes one slot later (barriers take no time).

    Scans all earlier ops for conflicts instead of tracking per-wire layers,
    so it shares no code path with ``compute_depth``.
    """
    ops = circuit.ops
    finish: list[int | None] = [None] * len(ops)
    preds = [[j for j in range(i) if _wires(ops[j]) & _wires(ops[i])] for i in range(len(ops))]
    pending = list(range(len(ops)))
    while pending:
        still = []
        for i in pending:
            if any(finish[j] is None for j in preds[i]):
                still.append(i)
                continue
            start = max((finish[j] for j in preds[i]), default=0)  # type: ignore[type-var]
            finish[i] = start if ops[i].kind == "barrier" else start + 1
        assert len(still) < len(pending)
        pending = still
    return max((f for f, op in zip(finish, ops) if op.kind != "barrier"), default=0)  # type: ignore[type-var]


_GATES_BY_ARITY = {
    k: sorted(name for name, (arity, _) in BUILTIN_GATES.items() if arity == k) for k in (1, 2, 3)
}


def random_flat_circuit(rng: random.Random, max_qubits: int = 6, max_ops: int = 40) -> FlatCircuit:
    nq = rng.randint(1, max_qubits)
    nc = rng.randint(0, 4)
    # classical registers as contiguous clbit ranges, for conditionals
    cregs: list[tuple[int, ...]] = []
    start = 0
    while start < nc:
        size = rng.randint(1, nc - start)
        cregs.append(tuple(range(start, start + size)))
        start += size
    ops = []
    for _ in range(rng.randint(0, max_ops)):
        kind = rng.choices(["gate", "measure", "reset", "barrier"], weights=[6, 2, 1, 1])[0]
        if kind == "measure" and nc == 0:
            kind = "gate"
        cond: tuple[tuple[int, ...], int | None] = ((), None)
        if kind != "barrier" and cregs and rng.random() < 0.2:
            reg = rng.choice(cregs)
            cond = (reg, rng.randint(0, 2 ** len(reg) - 1))
        if kind == "gate":
            arity = rng.randint(1, min(3, nq))
            name = rng.choice(_GATES_BY_ARITY[arity])
            nparams = BUILTIN_GATES[name][1]
            ops.append(
                FlatOp(
                    "builtin_gate",
                    name,
                    tuple(rng.sample(range(nq), arity)),
                    tuple(rng.uniform(-3, 3) for _ in range(nparams)),
                    (),
                    *cond,
                )
            )
        elif kind == "measure":
            ops.append(FlatOp("measure", "measure", (rng.randrange(nq),), (), (rng.randrange(nc),), *cond))
        elif kind == "reset":
            ops.append(FlatOp("reset", "reset", (rng.randrange(nq),), (), (), *cond))
        else:
            k = rng.randint(1, nq)
            ops.append(FlatOp("barrier", "barrier", tuple(sorted(rng.sample(range(nq), k)))))
    return FlatCircuit(nq, nc, tuple(ops))


def _rand_expr(rng: random.Random, names: list[str], depth: int = 0) -> str:
    r = rng.random()
    if depth > 2 or r < 0.35:
        leaf = rng.random()
        if names and leaf < 0.3:
            return rng.choice(names)
        if leaf < 0.5:
            return "pi"
        return repr(round(rng.uniform(0.1, 4.0), rng.randint(0, 6)))
    if r < 0.75:
        op = rng.choice(["+", "-", "*", "/"])
        right = _rand_expr(rng, names, depth + 1)
        if op == "/":
            right = f"(1.5 + {right} * {right})"
        return f"({_rand_expr(rng, names, depth + 1)} {op} {right})"
    if r < 0.85:
        return f"-{_rand_expr(rng, names, depth + 1)}"
    func = rng.choice(["sin", "cos", "exp", "sqrt"])
    arg = _rand_expr(rng, names, depth + 1)
    if func == "sqrt":
        arg = f"({arg})^2"
    if func == "exp":
        arg = f"sin({arg})"
    return f"{func}({arg})"


def random_program_source(rng: random.Random) -> str:
    """A random valid OpenQASM 2.0 program exercising most of the grammar."""
    lines = ["OPENQASM 2.0;"]
    if rng.random() < 0.7:
        lines.append('include "qelib1.inc";')
    qregs = [(f"q{i}", rng.randint(1, 4)) for i in range(rng.randint(1, 3))]
    cregs = [(f"c{i}", rng.randint(1, 3)) for i in range(rng.randint(0, 2))]
    for name, size in qregs:
        lines.append(f"qreg {name}[{size}];")
    for name, size in cregs:
        lines.append(f"creg {name}[{size}];")

    # gate name -> (qubit arity, param count)
    gates = {name: sig for name, sig in BUILTIN_GATES.items()}
    opaque: set[str] = set()
    for gi in range(rng.randint(0, 3)):
        gname = f"g{gi}"
        nparams = rng.randint(0, 2)
        nargs = rng.randint(1, 3)
        params = [f"p{j}" for j in range(nparams)]
        args = [f"a{j}" for j in range(nargs)]
        if rng.random() < 0.2:
            head = f"opaque {gname}" + (f"({', '.join(params)})" if params else "") + f" {', '.join(args)};"
            lines.append(head)
            opaque.add(gname)
            gates[gname] = (nargs, nparams)
            continue
        body = []
        candidates = [g for g, (ar, _) in gates.items() if ar <= nargs]
        for _ in range(rng.randint(1, 4)):
            if rng.random() < 0.1:
                body.append(f"barrier {', '.join(args)};")
                continue
            g = rng.choice(candidates)
            ar, np_ = gates[g]
            ps = [_rand_expr(rng, params) for _ in range(np_)]
            qs = rng.sample(args, ar)
            body.append(f"{g}" + (f"({', '.join(ps)})" if ps else "") + f" {', '.join(qs)};")
        head = f"gate {gname}" + (f"({', '.join(params)})" if params else "") + f" {', '.join(args)}"
        lines.append(head + " { " + " ".join(body) + " }")
        gates[gname] = (nargs, nparams)

    all_qubits = [(n, i) for n, s in qregs for i in range(s)]
    for _ in range(rng.randint(0, 15)):
        r = rng.random()
        prefix = ""
        if cregs and r < 0.15:
            cname, csize = rng.choice(cregs)
            prefix = f"if({cname}=={rng.randint(0, 2 ** csize - 1)}) "
        kind = rng.random()
        if kind < 0.1 and not prefix:
            picks = rng.sample(qregs, rng.randint(1, len(qregs)))
            lines.append(f"barrier {', '.join(n for n, _ in picks)};")
        elif kind < 0.2 and cregs:
            qn, qs = rng.choice(qregs)
            same = [c for c in cregs if c[1] == qs]
            if same and rng.random() < 0.5:
                lines.append(f"{prefix}measure {qn} -> {rng.choice(same)[0]};")
            else:
                cn, cs = rng.choice(cregs)
                lines.append(f"{prefix}measure {qn}[{rng.randrange(qs)}] -> {cn}[{rng.randrange(cs)}];")
        elif kind < 0.25:
            qn, qs = rng.choice(qregs)
            lines.append(f"{prefix}reset {qn}[{rng.randrange(qs)}];")
        else:
            usable = [g for g, (ar, _) in gates.items() if ar <= len(all_qubits)]
            g = rng.choice(usable)
            ar, np_ = gates[g]
            ps = [_rand_expr(rng, []) for _ in range(np_)]
            if ar == 1 and rng.random() < 0.3:
                qn, _ = rng.choice(qregs)
                operands = [qn]
            else:
                operands = [f"{n}[{i}]" for n, i in rng.sample(all_qubits, ar)]
            lines.append(prefix + g + (f"({', '.join(ps)})" if ps else "") + f" {', '.join(operands)};")
    return "\n".join(lines) + "\n"
