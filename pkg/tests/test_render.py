import dataclasses

import pytest
from hypothesis import given

from helpers import CARD_DIR
from qact.card import SECTION_TITLES, Audience, Limitation, audience_sections, parse_card, validate_card
from qact.errors import RenderError
from qact.generator import scaffold_card
from qact.render import render_markdown
from test_card import cards

TABLE_ORDER = ["Overview", "Intended use", "Usage details", "Performance metrics", "Limitations", "References", "Caveats"]


def grover():
    return parse_card((CARD_DIR / "grover.json").read_text())


def headings(doc):
    return [line[3:] for line in doc.splitlines() if line.startswith("## ")]


def test_full_card_has_seven_headings_in_order():
    assert headings(render_markdown(grover())) == TABLE_ORDER


def test_developer_view():
    assert headings(render_markdown(grover(), Audience.D)) == ["Overview", "Usage details", "Limitations", "References", "Caveats"]


@pytest.mark.parametrize("audience", list(Audience))
def test_audience_heading_set(audience):
    expected = [SECTION_TITLES[s] for s in audience_sections(audience)]
    assert headings(render_markdown(grover(), audience)) == expected


def test_title_and_usage_table():
    doc = render_markdown(grover(), "O")
    assert doc.startswith("# grover-search v1.2.0\n")
    assert "| Qubits required | 2 |" in doc
    assert "| Circuit depth | 7 |" in doc
    assert "| log2 quantum volume required | 7 |" in doc
    assert "| Quantum volume required | 128 |" in doc
    assert doc.endswith("\n") and "\r" not in doc


def test_missing_caveats_blocks_developer_view():
    card = dataclasses.replace(grover(), caveats=None)
    with pytest.raises(RenderError) as info:
        render_markdown(card, Audience.D)
    assert info.value.report.missing_sections == ("caveats",)
    # other audiences do not need caveats
    render_markdown(card, Audience.T)


def test_no_audience_renders_present_sections_of_incomplete_card():
    doc = render_markdown(scaffold_card("x"))
    assert headings(doc) == ["Overview"]


def test_no_audience_still_rejects_field_errors():
    card = dataclasses.replace(grover(), limitations=(Limitation("", "x"),))
    with pytest.raises(RenderError) as info:
        render_markdown(card)
    assert info.value.report.field_errors[0][0] == "limitations[0].scenario"


def test_table_cells_escape_pipes_and_newlines():
    card = grover()
    metric = dataclasses.replace(card.performance_metrics[0], description="a | b\nc")
    doc = render_markdown(dataclasses.replace(card, performance_metrics=(metric,)), "T")
    assert "| a \\| b c |" in doc


def test_multiline_text_cannot_inject_headings():
    card = grover()
    card = dataclasses.replace(card, caveats=("first\n## Fake heading",))
    assert headings(render_markdown(card, "D")) == ["Overview", "Usage details", "Limitations", "References", "Caveats"]


@given(cards)
def test_render_deterministic_and_ordered(card):
    if validate_card(card).field_errors:
        return
    doc = render_markdown(card)
    assert doc == render_markdown(dataclasses.replace(card))
    assert headings(doc) == [SECTION_TITLES[s] for s in card.present_sections()]
    for a in Audience:
        if validate_card(card, a).valid:
            assert headings(render_markdown(card, a)) == [SECTION_TITLES[s] for s in audience_sections(a)]


def test_large_quantum_volume_uses_exponent_form():
    card = grover()
    card = dataclasses.replace(card, usage_details=dataclasses.replace(card.usage_details, log2_qv_required=14285))
    assert "| Quantum volume required | 2^14285 |" in render_markdown(card, "O")
