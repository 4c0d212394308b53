"""Card scaffolding and attachment of analyzer output to usage details."""

from __future__ import annotations

import dataclasses
import hashlib

from qact.analysis import CircuitMetrics
from qact.card import QAC_VERSION, CircuitRef, Overview, QuantumAlgorithmCard, UsageDetails
from qact.errors import GeneratorError

PLACEHOLDER = "TODO"
SCAFFOLD_VERSION = "0.1.0"

# usage_details fields owned by the analyzer; everything else stays authored
DERIVED_FIELDS = ("qubits_required", "circuit_depth", "log2_qv_required", "uses_mid_circuit_control", "circuit_ref")


def scaffold_card(name: str) -> QuantumAlgorithmCard:
    if not name or not name.strip():
        raise GeneratorError("card name must be non-empty")
    return QuantumAlgorithmCard(
        overview=Overview(
            name=name,
            version=SCAFFOLD_VERSION,
            provider=PLACEHOLDER,
            maintainer=PLACEHOLDER,
            description=PLACEHOLDER,
            approach=PLACEHOLDER,
            complexity=PLACEHOLDER,
        ),
        qac_version=QAC_VERSION,
    )


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def attach_circuit(
    card: QuantumAlgorithmCard,
    metrics: CircuitMetrics,
    circuit_path: str,
    circuit_sha256: str,
) -> QuantumAlgorithmCard:
    """Return ``card`` with its usage details refreshed from ``metrics``.

    Derived numbers always overwrite what was there; authored inputs and
    outputs are kept. No other section is touched.
    """
    if metrics.width == 0:
        raise GeneratorError("refusing to attach a circuit that touches no qubits")
    base = card.usage_details or UsageDetails()
    usage = dataclasses.replace(
        base,
        qubits_required=metrics.width,
        circuit_depth=metrics.depth,
        log2_qv_required=metrics.log2_qv_required,
        uses_mid_circuit_control=metrics.uses_mid_circuit_control,
        circuit_ref=CircuitRef(circuit_path, circuit_sha256),
    )
    return dataclasses.replace(card, usage_details=usage)


def changed_fields(before: QuantumAlgorithmCard, after: QuantumAlgorithmCard) -> list[tuple[str, object, object]]:
    """(path, old, new) for each derived usage-details field that differs."""
    old = before.usage_details
    new = after.usage_details
    if old is None and new is None:
        return []
    if old is None:
        return [("usage_details", None, "added")] + [
            (f"usage_details.{f}", None, _show(getattr(new, f))) for f in DERIVED_FIELDS
        ]
    out = []
    for f in DERIVED_FIELDS:
        a, b = getattr(old, f), getattr(new, f)
        if a != b:
            out.append((f"usage_details.{f}", _show(a), _show(b)))
    return out


def _show(value: object) -> object:
    if isinstance(value, CircuitRef):
        return f"{value.path}@{value.sha256[:12]}"
    return value
