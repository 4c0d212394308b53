"""Quantum Algorithm Card data model, canonical JSON form and validation.

A card has seven sections. Each is addressed to some subset of three
audiences: technology management and architects (T), software developers
(D) and operations (O). Only ``overview`` is mandatory in a document;
completeness for an audience is checked by :func:`validate_card`.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable

from qact.errors import CardFormatError

QAC_VERSION = "0.1"

SECTIONS: tuple[str, ...] = (
    "overview",
    "intended_use",
    "usage_details",
    "performance_metrics",
    "limitations",
    "references",
    "caveats",
)

SECTION_TITLES: dict[str, str] = {
    "overview": "Overview",
    "intended_use": "Intended use",
    "usage_details": "Usage details",
    "performance_metrics": "Performance metrics",
    "limitations": "Limitations",
    "references": "References",
    "caveats": "Caveats",
}

_SEMVER_RE = re.compile(r"^(0|[1-9]\d*)\.(0|[1-9]\d*)\.(0|[1-9]\d*)$")
_SHA256_RE = re.compile(r"^[0-9a-f]{64}$")


class Audience(str, Enum):
    T = "T"
    D = "D"
    O = "O"  # noqa: E741

    @property
    def description(self) -> str:
        return {
            "T": "technology management and architects",
            "D": "software developers",
            "O": "operations",
        }[self.value]


# Target column of the card element table, in section order.
_TARGETS: dict[str, frozenset[Audience]] = {
    "overview": frozenset({Audience.T, Audience.D, Audience.O}),
    "intended_use": frozenset({Audience.T}),
    "usage_details": frozenset({Audience.D, Audience.O}),
    "performance_metrics": frozenset({Audience.T, Audience.O}),
    "limitations": frozenset({Audience.T, Audience.D}),
    "references": frozenset({Audience.T, Audience.D}),
    "caveats": frozenset({Audience.D}),
}


def audience_sections(audience: Audience | str) -> list[str]:
    """Sections addressed to ``audience``, in card order."""
    audience = Audience(audience)
    return [s for s in SECTIONS if audience in _TARGETS[s]]


class Direction(str, Enum):
    HIGHER_IS_BETTER = "higher_is_better"
    LOWER_IS_BETTER = "lower_is_better"


@dataclass(frozen=True)
class Overview:
    name: str
    version: str
    provider: str
    maintainer: str
    description: str
    approach: str
    complexity: str


@dataclass(frozen=True)
class IntendedUse:
    tasks: tuple[str, ...]
    scenarios: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tasks", tuple(self.tasks))
        object.__setattr__(self, "scenarios", tuple(self.scenarios))


@dataclass(frozen=True)
class IoSpec:
    name: str
    type: str
    description: str


@dataclass(frozen=True)
class CircuitRef:
    path: str
    sha256: str


@dataclass(frozen=True)
class UsageDetails:
    inputs: tuple[IoSpec, ...] = ()
    outputs: tuple[IoSpec, ...] = ()
    qubits_required: int = 1
    circuit_depth: int = 0
    log2_qv_required: int = 0
    uses_mid_circuit_control: bool = False
    circuit_ref: CircuitRef | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))


@dataclass(frozen=True)
class MetricSpec:
    name: str
    description: str
    direction: Direction
    threshold: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "direction", Direction(self.direction))


@dataclass(frozen=True)
class Limitation:
    scenario: str
    failure_mode: str


@dataclass(frozen=True)
class Reference:
    citation: str
    url: str | None = None


@dataclass(frozen=True)
class QuantumAlgorithmCard:
    overview: Overview
    intended_use: IntendedUse | None = None
    usage_details: UsageDetails | None = None
    performance_metrics: tuple[MetricSpec, ...] | None = None
    limitations: tuple[Limitation, ...] | None = None
    references: tuple[Reference, ...] | None = None
    caveats: tuple[str, ...] | None = None
    qac_version: str = field(default=QAC_VERSION)

    def __post_init__(self) -> None:
        for name in ("performance_metrics", "limitations", "references", "caveats"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(value))

    def present_sections(self) -> list[str]:
        """Sections carrying content; an empty list counts as absent."""
        out = []
        for s in SECTIONS:
            value = getattr(self, s)
            if value is None or (isinstance(value, tuple) and not value):
                continue
            out.append(s)
        return out


@dataclass(frozen=True)
class ValidationReport:
    missing_sections: tuple[str, ...] = ()
    field_errors: tuple[tuple[str, str], ...] = ()
    audience: Audience | None = None

    @property
    def valid(self) -> bool:
        return not self.missing_sections and not self.field_errors

    def to_dict(self) -> dict[str, Any]:
        return {
            "audience": self.audience.value if self.audience else None,
            "valid": self.valid,
            "missing_sections": list(self.missing_sections),
            "field_errors": [{"path": p, "message": m} for p, m in self.field_errors],
        }

    def format(self) -> str:
        scope = f"audience {self.audience.value}" if self.audience else "all audiences"
        lines = [f"{'valid' if self.valid else 'INVALID'} ({scope})"]
        lines += [f"  missing section: {s}" for s in self.missing_sections]
        lines += [f"  {p}: {m}" for p, m in self.field_errors]
        return "\n".join(lines)


# --- serialization -----------------------------------------------------------


def _io_to_json(io: IoSpec) -> dict[str, Any]:
    return {"name": io.name, "type": io.type, "description": io.description}


def card_to_dict(card: QuantumAlgorithmCard) -> dict[str, Any]:
    """Plain JSON-ready mapping with keys in canonical order."""
    o = card.overview
    doc: dict[str, Any] = {
        "qac_version": card.qac_version,
        "overview": {
            "name": o.name,
            "version": o.version,
            "provider": o.provider,
            "maintainer": o.maintainer,
            "description": o.description,
            "approach": o.approach,
            "complexity": o.complexity,
        },
    }
    if card.intended_use is not None:
        doc["intended_use"] = {
            "tasks": list(card.intended_use.tasks),
            "scenarios": list(card.intended_use.scenarios),
        }
    if card.usage_details is not None:
        u = card.usage_details
        ud: dict[str, Any] = {
            "inputs": [_io_to_json(i) for i in u.inputs],
            "outputs": [_io_to_json(i) for i in u.outputs],
            "qubits_required": u.qubits_required,
            "circuit_depth": u.circuit_depth,
            "log2_qv_required": u.log2_qv_required,
            "uses_mid_circuit_control": u.uses_mid_circuit_control,
        }
        if u.circuit_ref is not None:
            ud["circuit_ref"] = {"path": u.circuit_ref.path, "sha256": u.circuit_ref.sha256}
        doc["usage_details"] = ud
    if card.performance_metrics is not None:
        metrics = []
        for m in card.performance_metrics:
            entry: dict[str, Any] = {"name": m.name, "description": m.description}
            if m.threshold is not None:
                entry["threshold"] = m.threshold
            entry["direction"] = m.direction.value
            metrics.append(entry)
        doc["performance_metrics"] = metrics
    if card.limitations is not None:
        doc["limitations"] = [{"scenario": x.scenario, "failure_mode": x.failure_mode} for x in card.limitations]
    if card.references is not None:
        refs = []
        for r in card.references:
            entry = {"citation": r.citation}
            if r.url is not None:
                entry["url"] = r.url
            refs.append(entry)
        doc["references"] = refs
    if card.caveats is not None:
        doc["caveats"] = list(card.caveats)
    return doc


def serialize_card(card: QuantumAlgorithmCard) -> str:
    """Canonical text: two-space indented UTF-8 JSON with a trailing newline."""
    return json.dumps(card_to_dict(card), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


# --- parsing -----------------------------------------------------------------


class _Reader:
    """Typed accessors over decoded JSON that report the offending path."""

    def fail(self, path: str, message: str) -> CardFormatError:
        return CardFormatError(f"{path}: {message}")

    def obj(self, value: Any, path: str, required: Iterable[str], optional: Iterable[str] = ()) -> dict[str, Any]:
        if not isinstance(value, dict):
            raise self.fail(path, f"expected an object, got {_json_type(value)}")
        required = tuple(required)
        allowed = set(required) | set(optional)
        unknown = [k for k in value if k not in allowed]
        if unknown:
            raise self.fail(path, f"unknown key(s) {', '.join(map(repr, unknown))}")
        missing = [k for k in required if k not in value]
        if missing:
            raise self.fail(path, f"missing key(s) {', '.join(map(repr, missing))}")
        for k, v in value.items():
            if v is None:
                raise self.fail(f"{path}.{k}", "null is not allowed; omit optional fields instead")
        return value

    def str_(self, value: Any, path: str) -> str:
        if not isinstance(value, str):
            raise self.fail(path, f"expected a string, got {_json_type(value)}")
        return value

    def int_(self, value: Any, path: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(path, f"expected an integer, got {_json_type(value)}")
        return value

    def bool_(self, value: Any, path: str) -> bool:
        if not isinstance(value, bool):
            raise self.fail(path, f"expected a boolean, got {_json_type(value)}")
        return value

    def real(self, value: Any, path: str) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self.fail(path, f"expected a number, got {_json_type(value)}")
        value = float(value)
        if not math.isfinite(value):
            raise self.fail(path, "number must be finite")
        return value

    def list_(self, value: Any, path: str) -> list[Any]:
        if not isinstance(value, list):
            raise self.fail(path, f"expected an array, got {_json_type(value)}")
        return value

    def str_list(self, value: Any, path: str) -> tuple[str, ...]:
        return tuple(self.str_(v, f"{path}[{i}]") for i, v in enumerate(self.list_(value, path)))


def _json_type(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, (int, float)):
        return "number"
    if isinstance(value, str):
        return "string"
    if isinstance(value, list):
        return "array"
    return "object"


def _no_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in pairs:
        if k in out:
            raise CardFormatError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _reject_constant(name: str) -> Any:
    raise CardFormatError(f"{name} is not valid JSON")


def _io_specs(r: _Reader, value: Any, path: str) -> tuple[IoSpec, ...]:
    out = []
    for i, item in enumerate(r.list_(value, path)):
        p = f"{path}[{i}]"
        d = r.obj(item, p, ("name", "type", "description"))
        out.append(IoSpec(r.str_(d["name"], f"{p}.name"), r.str_(d["type"], f"{p}.type"), r.str_(d["description"], f"{p}.description")))
    return tuple(out)


def card_from_dict(doc: Any) -> QuantumAlgorithmCard:
    """Build a card from decoded JSON, enforcing keys and field types."""
    r = _Reader()
    top = r.obj(doc, "$", ("qac_version", "overview"), SECTIONS[1:])
    version = r.str_(top["qac_version"], "qac_version")
    if version != QAC_VERSION:
        raise CardFormatError(f"qac_version: unsupported version {version!r} (expected {QAC_VERSION!r})")

    o = r.obj(top["overview"], "overview", ("name", "version", "provider", "maintainer", "description", "approach", "complexity"))
    overview = Overview(**{k: r.str_(v, f"overview.{k}") for k, v in o.items()})

    intended_use = None
    if "intended_use" in top:
        d = r.obj(top["intended_use"], "intended_use", ("tasks", "scenarios"))
        intended_use = IntendedUse(r.str_list(d["tasks"], "intended_use.tasks"), r.str_list(d["scenarios"], "intended_use.scenarios"))

    usage = None
    if "usage_details" in top:
        p = "usage_details"
        d = r.obj(
            top[p],
            p,
            ("inputs", "outputs", "qubits_required", "circuit_depth", "log2_qv_required", "uses_mid_circuit_control"),
            ("circuit_ref",),
        )
        ref = None
        if "circuit_ref" in d:
            c = r.obj(d["circuit_ref"], f"{p}.circuit_ref", ("path", "sha256"))
            ref = CircuitRef(r.str_(c["path"], f"{p}.circuit_ref.path"), r.str_(c["sha256"], f"{p}.circuit_ref.sha256"))
        usage = UsageDetails(
            inputs=_io_specs(r, d["inputs"], f"{p}.inputs"),
            outputs=_io_specs(r, d["outputs"], f"{p}.outputs"),
            qubits_required=r.int_(d["qubits_required"], f"{p}.qubits_required"),
            circuit_depth=r.int_(d["circuit_depth"], f"{p}.circuit_depth"),
            log2_qv_required=r.int_(d["log2_qv_required"], f"{p}.log2_qv_required"),
            uses_mid_circuit_control=r.bool_(d["uses_mid_circuit_control"], f"{p}.uses_mid_circuit_control"),
            circuit_ref=ref,
        )

    metrics = None
    if "performance_metrics" in top:
        metrics = []
        for i, item in enumerate(r.list_(top["performance_metrics"], "performance_metrics")):
            p = f"performance_metrics[{i}]"
            d = r.obj(item, p, ("name", "description", "direction"), ("threshold",))
            direction = r.str_(d["direction"], f"{p}.direction")
            try:
                direction_value = Direction(direction)
            except ValueError:
                raise r.fail(f"{p}.direction", f"expected 'higher_is_better' or 'lower_is_better', got {direction!r}") from None
            threshold = r.real(d["threshold"], f"{p}.threshold") if "threshold" in d else None
            metrics.append(MetricSpec(r.str_(d["name"], f"{p}.name"), r.str_(d["description"], f"{p}.description"), direction_value, threshold))

    limitations = None
    if "limitations" in top:
        limitations = []
        for i, item in enumerate(r.list_(top["limitations"], "limitations")):
            p = f"limitations[{i}]"
            d = r.obj(item, p, ("scenario", "failure_mode"))
            limitations.append(Limitation(r.str_(d["scenario"], f"{p}.scenario"), r.str_(d["failure_mode"], f"{p}.failure_mode")))

    references = None
    if "references" in top:
        references = []
        for i, item in enumerate(r.list_(top["references"], "references")):
            p = f"references[{i}]"
            d = r.obj(item, p, ("citation",), ("url",))
            url = r.str_(d["url"], f"{p}.url") if "url" in d else None
            references.append(Reference(r.str_(d["citation"], f"{p}.citation"), url))

    caveats = r.str_list(top["caveats"], "caveats") if "caveats" in top else None

    return QuantumAlgorithmCard(
        overview=overview,
        intended_use=intended_use,
        usage_details=usage,
        performance_metrics=metrics,
        limitations=limitations,
        references=references,
        caveats=caveats,
        qac_version=version,
    )


def parse_card(text: str | bytes) -> QuantumAlgorithmCard:
    """Parse a card document.

    Malformed JSON raises :class:`CardFormatError` with the line and column
    of the problem; schema violations name the offending path.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CardFormatError(f"card is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise CardFormatError(exc.msg, exc.lineno, exc.colno) from None
    return card_from_dict(doc)


# --- validation --------------------------------------------------------------


def _field_errors(card: QuantumAlgorithmCard) -> list[tuple[str, str]]:
    errors: list[tuple[str, str]] = []

    def nonempty(value: str, path: str) -> None:
        if not value.strip():
            errors.append((path, "must be a non-empty string"))

    if card.qac_version != QAC_VERSION:
        errors.append(("qac_version", f"must be {QAC_VERSION!r}"))
    o = card.overview
    nonempty(o.name, "overview.name")
    if not _SEMVER_RE.match(o.version):
        errors.append(("overview.version", f"{o.version!r} is not MAJOR.MINOR.PATCH"))

    if card.intended_use is not None:
        for attr in ("tasks", "scenarios"):
            items = getattr(card.intended_use, attr)
            if not items:
                errors.append((f"intended_use.{attr}", "must list at least one entry"))
            for i, item in enumerate(items):
                nonempty(item, f"intended_use.{attr}[{i}]")

    u = card.usage_details
    if u is not None:
        for attr in ("inputs", "outputs"):
            for i, io in enumerate(getattr(u, attr)):
                nonempty(io.name, f"usage_details.{attr}[{i}].name")
        if u.qubits_required < 1:
            errors.append(("usage_details.qubits_required", "must be >= 1"))
        if u.circuit_depth < 0:
            errors.append(("usage_details.circuit_depth", "must be >= 0"))
        if u.log2_qv_required < 0:
            errors.append(("usage_details.log2_qv_required", "must be >= 0"))
        if u.circuit_ref is not None:
            nonempty(u.circuit_ref.path, "usage_details.circuit_ref.path")
            if not _SHA256_RE.match(u.circuit_ref.sha256):
                errors.append(("usage_details.circuit_ref.sha256", "must be 64 lowercase hex characters"))

    seen: set[str] = set()
    for i, m in enumerate(card.performance_metrics or ()):
        nonempty(m.name, f"performance_metrics[{i}].name")
        if m.name in seen:
            errors.append((f"performance_metrics[{i}].name", f"duplicate metric name {m.name!r}"))
        seen.add(m.name)
        if m.threshold is not None and not math.isfinite(m.threshold):
            errors.append((f"performance_metrics[{i}].threshold", "must be finite"))
    for i, lim in enumerate(card.limitations or ()):
        nonempty(lim.scenario, f"limitations[{i}].scenario")
        nonempty(lim.failure_mode, f"limitations[{i}].failure_mode")
    for i, ref in enumerate(card.references or ()):
        nonempty(ref.citation, f"references[{i}].citation")
    for i, c in enumerate(card.caveats or ()):
        nonempty(c, f"caveats[{i}]")
    return errors


def validate_card(card: QuantumAlgorithmCard, audience: Audience | str | None = None) -> ValidationReport:
    """Check section completeness for ``audience`` (all seven sections if None)
    and every field-level invariant of the card."""
    aud = Audience(audience) if audience is not None else None
    required = audience_sections(aud) if aud is not None else list(SECTIONS)
    present = set(card.present_sections())
    return ValidationReport(
        missing_sections=tuple(s for s in required if s not in present),
        field_errors=tuple(_field_errors(card)),
        audience=aud,
    )
