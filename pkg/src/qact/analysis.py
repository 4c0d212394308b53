"""Static resource metrics for flattened circuits."""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Any

from qact.qasm.flatten import FlatCircuit


@dataclass(frozen=True)
class CircuitMetrics:
    width: int
    num_qubits: int
    num_clbits: int
    depth: int
    gate_histogram: dict[str, int]
    counts_by_arity: dict[int, int]
    two_qubit_gate_count: int
    t_count: int
    measure_count: int
    has_opaque: bool
    uses_mid_circuit_control: bool
    log2_qv_required: int

    @property
    def total_gates(self) -> int:
        return sum(self.gate_histogram.values())

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        # JSON object keys are strings
        d["counts_by_arity"] = {str(k): v for k, v in sorted(self.counts_by_arity.items())}
        d["gate_histogram"] = dict(sorted(self.gate_histogram.items()))
        return d


def compute_depth(circuit: FlatCircuit) -> int:
    """Depth under greedy as-soon-as-possible layering.

    Every non-barrier op lands one layer above the latest layer on any wire
    it touches (its qubits, the clbits it writes, and the clbits its
    condition reads) and moves those wires up to its layer. A barrier lifts
    the qubits it spans to their common maximum without adding a layer.
    """
    qlayer = [0] * circuit.num_qubits
    clayer = [0] * circuit.num_clbits
    depth = 0
    for op in circuit.ops:
        if op.kind == "barrier":
            top = max((qlayer[q] for q in op.qubits), default=0)
            for q in op.qubits:
                qlayer[q] = top
            continue
        clbits = op.clbits + op.cond_clbits
        layer = 1 + max([qlayer[q] for q in op.qubits] + [clayer[c] for c in clbits], default=0)
        for q in op.qubits:
            qlayer[q] = layer
        for c in clbits:
            clayer[c] = layer
        depth = max(depth, layer)
    return depth


def qv_requirement(width: int, depth: int) -> int:
    """log2 of the quantum volume a width x depth circuit needs (square-circuit convention)."""
    if width < 0 or depth < 0:
        raise ValueError("width and depth must be nonnegative")
    return max(width, depth)


def compute_metrics(circuit: FlatCircuit) -> CircuitMetrics:
    histogram: Counter[str] = Counter()
    by_arity: Counter[int] = Counter()
    touched: set[int] = set()
    measured: set[int] = set()
    measure_count = 0
    has_opaque = False
    mid_circuit = False

    for op in circuit.ops:
        if op.kind == "barrier":
            continue
        touched.update(op.qubits)
        if op.conditional:
            mid_circuit = True
        if op.kind in ("measure", "reset"):
            measure_count += 1
            if op.kind == "measure":
                measured.update(op.qubits)
            continue
        histogram[op.name] += 1
        by_arity[len(op.qubits)] += 1
        has_opaque = has_opaque or op.kind == "opaque_gate"
        if measured.intersection(op.qubits):
            mid_circuit = True

    width = len(touched)
    depth = compute_depth(circuit)
    return CircuitMetrics(
        width=width,
        num_qubits=circuit.num_qubits,
        num_clbits=circuit.num_clbits,
        depth=depth,
        gate_histogram=dict(histogram),
        counts_by_arity=dict(by_arity),
        two_qubit_gate_count=by_arity.get(2, 0),
        t_count=histogram.get("t", 0) + histogram.get("tdg", 0),
        measure_count=measure_count,
        has_opaque=has_opaque,
        uses_mid_circuit_control=mid_circuit,
        log2_qv_required=qv_requirement(width, depth),
    )


def analyze_source(source: str) -> CircuitMetrics:
    """Parse, flatten and measure OpenQASM 2.0 text in one step."""
    from qact.qasm import flatten, parse_program

    return compute_metrics(flatten(parse_program(source)))
