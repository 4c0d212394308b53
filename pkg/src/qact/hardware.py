"""Match card requirements against hardware backend profiles and rank them."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable

from qact.card import QuantumAlgorithmCard
from qact.errors import MatchError

CHECK_NAMES = ("qubits", "quantum_volume", "mid_circuit_control")


@dataclass(frozen=True)
class HardwareProfile:
    name: str
    num_qubits: int
    log2_quantum_volume: int
    native_gates: tuple[str, ...] = ()
    supports_mid_circuit_control: bool = False
    cost_per_shot: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "native_gates", tuple(self.native_gates))
        if not self.name:
            raise MatchError("profile name must be non-empty")
        if self.num_qubits < 1:
            raise MatchError(f"profile {self.name!r}: num_qubits must be >= 1")
        if self.log2_quantum_volume < 0:
            raise MatchError(f"profile {self.name!r}: log2_quantum_volume must be >= 0")
        if self.cost_per_shot is not None and not (math.isfinite(self.cost_per_shot) and self.cost_per_shot >= 0):
            raise MatchError(f"profile {self.name!r}: cost_per_shot must be a nonnegative number")


@dataclass(frozen=True)
class Check:
    name: str
    required: int | bool
    available: int | bool
    passed: bool


@dataclass(frozen=True)
class FitReport:
    backend: str
    checks: tuple[Check, ...]
    notes: tuple[str, ...] = ()
    estimated_cost: float | None = None
    fits: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "fits", all(c.passed for c in self.checks))

    def to_dict(self) -> dict[str, Any]:
        return {
            "backend": self.backend,
            "fits": self.fits,
            "checks": [
                {"name": c.name, "required": c.required, "available": c.available, "pass": c.passed}
                for c in self.checks
            ],
            "notes": list(self.notes),
            "estimated_cost": self.estimated_cost,
        }


def _profile_from_json(item: Any, i: int) -> HardwareProfile:
    where = f"profile[{i}]"
    if not isinstance(item, dict):
        raise MatchError(f"{where}: expected an object")
    allowed = {"name", "num_qubits", "log2_quantum_volume", "native_gates", "supports_mid_circuit_control", "cost_per_shot"}
    unknown = sorted(set(item) - allowed)
    if unknown:
        raise MatchError(f"{where}: unknown key(s) {unknown}")
    missing = sorted(allowed - {"cost_per_shot"} - set(item))
    if missing:
        raise MatchError(f"{where}: missing key(s) {missing}")

    def integer(key: str) -> int:
        v = item[key]
        if isinstance(v, bool) or not isinstance(v, int):
            raise MatchError(f"{where}.{key}: expected an integer")
        return v

    if not isinstance(item["name"], str):
        raise MatchError(f"{where}.name: expected a string")
    gates = item["native_gates"]
    if not isinstance(gates, list) or not all(isinstance(g, str) for g in gates):
        raise MatchError(f"{where}.native_gates: expected an array of strings")
    if not isinstance(item["supports_mid_circuit_control"], bool):
        raise MatchError(f"{where}.supports_mid_circuit_control: expected a boolean")
    cost = item.get("cost_per_shot")
    if cost is not None and (isinstance(cost, bool) or not isinstance(cost, (int, float))):
        raise MatchError(f"{where}.cost_per_shot: expected a number")
    return HardwareProfile(
        name=item["name"],
        num_qubits=integer("num_qubits"),
        log2_quantum_volume=integer("log2_quantum_volume"),
        native_gates=tuple(gates),
        supports_mid_circuit_control=item["supports_mid_circuit_control"],
        cost_per_shot=float(cost) if cost is not None else None,
    )


def parse_profiles(text: str) -> list[HardwareProfile]:
    """Read a profile file: a JSON array of backend objects with unique names."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatchError(f"{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, list):
        raise MatchError("profile file must be a JSON array")
    profiles = [_profile_from_json(item, i) for i, item in enumerate(doc)]
    seen: set[str] = set()
    for p in profiles:
        if p.name in seen:
            raise MatchError(f"duplicate profile name {p.name!r}")
        seen.add(p.name)
    return profiles


def match_card(
    card: QuantumAlgorithmCard,
    profile: HardwareProfile,
    shots: int | None = None,
    gates: Iterable[str] | None = None,
) -> FitReport:
    """Compare the card's usage requirements with one backend.

    All checks are boundary-inclusive. ``gates`` (the circuit's gate names,
    when known) only produces notes about gates the backend would have to
    transpile; it never fails a check.
    """
    usage = card.usage_details
    if usage is None:
        raise MatchError(f"card {card.overview.name!r} has no usage_details section to match")
    if shots is not None and shots < 1:
        raise MatchError("shots must be a positive integer")

    needs_control = usage.uses_mid_circuit_control
    checks = (
        Check("qubits", usage.qubits_required, profile.num_qubits, profile.num_qubits >= usage.qubits_required),
        Check(
            "quantum_volume",
            usage.log2_qv_required,
            profile.log2_quantum_volume,
            profile.log2_quantum_volume >= usage.log2_qv_required,
        ),
        Check(
            "mid_circuit_control",
            needs_control,
            profile.supports_mid_circuit_control,
            profile.supports_mid_circuit_control or not needs_control,
        ),
    )

    notes: list[str] = []
    if gates is not None:
        foreign = sorted(set(gates) - set(profile.native_gates))
        if foreign:
            notes.append(f"non-native gates require transpilation: {', '.join(foreign)}")
    cost = None
    if shots is not None:
        if profile.cost_per_shot is None:
            notes.append("no cost data for this backend")
        else:
            cost = profile.cost_per_shot * shots
    return FitReport(profile.name, checks, tuple(notes), cost)


def _rank_key(report: FitReport) -> tuple[bool, bool, float, str]:
    cost = report.estimated_cost
    return (not report.fits, cost is None, cost if cost is not None else 0.0, report.backend)


def rank_backends(
    card: QuantumAlgorithmCard,
    profiles: list[HardwareProfile],
    shots: int | None = None,
    gates: Iterable[str] | None = None,
) -> list[FitReport]:
    """One report per profile: fitting first, then cheapest, then by name."""
    if not profiles:
        raise MatchError("at least one hardware profile is required")
    gate_list = list(gates) if gates is not None else None
    return sorted((match_card(card, p, shots, gate_list) for p in profiles), key=_rank_key)
