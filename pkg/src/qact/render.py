"""Markdown rendering of cards, optionally filtered to one audience."""

from __future__ import annotations

from qact.card import (
    SECTION_TITLES,
    Audience,
    IoSpec,
    QuantumAlgorithmCard,
    audience_sections,
    validate_card,
)
from qact.errors import RenderError


def _cell(text: object) -> str:
    return str(text).replace("\\", "\\\\").replace("|", "\\|").replace("\n", " ")


def _inline(text: str) -> str:
    return " ".join(text.split())


def _overview(card: QuantumAlgorithmCard) -> list[str]:
    o = card.overview
    return [
        f"- **Provider:** {_inline(o.provider)}",
        f"- **Maintainer:** {_inline(o.maintainer)}",
        f"- **Description:** {_inline(o.description)}",
        f"- **Approach:** {_inline(o.approach)}",
        f"- **Complexity:** {_inline(o.complexity)}",
    ]


def _bullets(items: tuple[str, ...]) -> list[str]:
    return [f"- {_inline(x)}" for x in items]


def _intended_use(card: QuantumAlgorithmCard) -> list[str]:
    iu = card.intended_use
    assert iu is not None
    return ["### Tasks", "", *_bullets(iu.tasks), "", "### Scenarios", "", *_bullets(iu.scenarios)]


def _io_block(title: str, specs: tuple[IoSpec, ...]) -> list[str]:
    lines = [f"### {title}", ""]
    if not specs:
        return lines + ["_None declared._"]
    return lines + [f"- `{s.name}` ({_inline(s.type)}): {_inline(s.description)}" for s in specs]


def _quantum_volume(log2_qv: int) -> str:
    # exact integers stay readable up to 2^64
    return str(2**log2_qv) if log2_qv <= 64 else f"2^{log2_qv}"


def _usage_details(card: QuantumAlgorithmCard) -> list[str]:
    u = card.usage_details
    assert u is not None
    rows = [
        ("Qubits required", u.qubits_required),
        ("Circuit depth", u.circuit_depth),
        ("log2 quantum volume required", u.log2_qv_required),
        ("Quantum volume required", _quantum_volume(u.log2_qv_required)),
        ("Mid-circuit control", "yes" if u.uses_mid_circuit_control else "no"),
    ]
    if u.circuit_ref is not None:
        rows += [("Circuit", f"`{u.circuit_ref.path}`"), ("Circuit SHA-256", f"`{u.circuit_ref.sha256}`")]
    table = ["| Requirement | Value |", "| --- | --- |", *(f"| {_cell(k)} | {_cell(v)} |" for k, v in rows)]
    return [*_io_block("Inputs", u.inputs), "", *_io_block("Outputs", u.outputs), "", "### Requirements", "", *table]


def _performance_metrics(card: QuantumAlgorithmCard) -> list[str]:
    lines = ["| Metric | Direction | Threshold | Description |", "| --- | --- | --- | --- |"]
    for m in card.performance_metrics or ():
        threshold = "n/a" if m.threshold is None else repr(m.threshold)
        direction = m.direction.value.replace("_", " ")
        lines.append(f"| {_cell(m.name)} | {direction} | {threshold} | {_cell(m.description)} |")
    return lines


def _limitations(card: QuantumAlgorithmCard) -> list[str]:
    return [f"- **{_inline(x.scenario)}:** {_inline(x.failure_mode)}" for x in card.limitations or ()]


def _references(card: QuantumAlgorithmCard) -> list[str]:
    out = []
    for i, r in enumerate(card.references or (), start=1):
        line = f"{i}. {_inline(r.citation)}"
        if r.url:
            line += f" <{r.url}>"
        out.append(line)
    return out


def _caveats(card: QuantumAlgorithmCard) -> list[str]:
    return _bullets(card.caveats or ())


_RENDERERS = {
    "overview": _overview,
    "intended_use": _intended_use,
    "usage_details": _usage_details,
    "performance_metrics": _performance_metrics,
    "limitations": _limitations,
    "references": _references,
    "caveats": _caveats,
}


def render_markdown(card: QuantumAlgorithmCard, audience: Audience | str | None = None) -> str:
    """Render ``card`` as CommonMark.

    With an audience, the card must validate for it and exactly that
    audience's sections are emitted. Without one, every present section is
    emitted and only field-level errors block rendering.
    """
    aud = Audience(audience) if audience is not None else None
    report = validate_card(card, aud)
    if aud is not None and not report.valid:
        raise RenderError(f"card is not complete for audience {aud.value}", report)
    if aud is None and report.field_errors:
        raise RenderError("card has field errors", report)

    sections = audience_sections(aud) if aud is not None else card.present_sections()
    o = card.overview
    scope = f"{aud.value} ({aud.description})" if aud is not None else "all"
    lines = [
        f"# {_inline(o.name)} v{o.version}",
        "",
        f"_Quantum Algorithm Card, format {card.qac_version}. Audience: {scope}._",
    ]
    for s in sections:
        lines += ["", f"## {SECTION_TITLES[s]}", "", *_RENDERERS[s](card)]
    return "\n".join(lines) + "\n"
