import dataclasses
import json

import pytest
from hypothesis import given

from helpers import CARD_DIR, QASM_DIR
from qact.analysis import analyze_source
from qact.card import Audience, parse_card, serialize_card, validate_card
from qact.errors import GeneratorError
from qact.generator import attach_circuit, changed_fields, scaffold_card, sha256_hex
from test_card import cards

BELL = analyze_source((QASM_DIR / "bell.qasm").read_text())
GROVER = analyze_source((QASM_DIR / "grover2.qasm").read_text())
EMPTY = analyze_source("OPENQASM 2.0;\nqreg q[2];\n")
SHA = "0" * 64


def test_scaffold_fields():
    card = scaffold_card("x")
    assert card.qac_version == "0.1"
    assert (card.overview.name, card.overview.version) == ("x", "0.1.0")
    assert {card.overview.provider, card.overview.maintainer, card.overview.description, card.overview.approach, card.overview.complexity} == {"TODO"}
    assert card.present_sections() == ["overview"]


def test_scaffold_reports_six_missing_sections():
    report = validate_card(scaffold_card("grover-search"))
    assert len(report.missing_sections) == 6
    assert report.field_errors == ()


def test_scaffold_matches_corpus_file():
    assert serialize_card(scaffold_card("grover-search")) == (CARD_DIR / "scaffold.json").read_text()


@pytest.mark.parametrize("name", ["", "   "])
def test_scaffold_rejects_empty_name(name):
    with pytest.raises(GeneratorError):
        scaffold_card(name)


def test_scaffold_round_trips():
    card = scaffold_card("grover-search")
    assert parse_card(serialize_card(card)) == card


def test_attach_bell_to_scaffold():
    card = attach_circuit(scaffold_card("bell"), BELL, "bell.qasm", SHA)
    u = card.usage_details
    assert (u.qubits_required, u.circuit_depth, u.log2_qv_required, u.uses_mid_circuit_control) == (2, 3, 3, False)
    assert (u.circuit_ref.path, u.circuit_ref.sha256) == ("bell.qasm", SHA)
    assert (u.inputs, u.outputs) == ((), ())


def _sections(card):
    doc = json.loads(serialize_card(card))
    doc.pop("usage_details", None)
    return doc


def test_attach_to_authored_card_changes_only_derived_fields():
    before = parse_card((CARD_DIR / "grover.json").read_text())
    stale = dataclasses.replace(before, usage_details=dataclasses.replace(before.usage_details, circuit_depth=99, qubits_required=9))
    after = attach_circuit(stale, GROVER, "grover2.qasm", SHA)
    assert _sections(after) == _sections(stale)
    assert after.usage_details.inputs == before.usage_details.inputs
    assert after.usage_details.outputs == before.usage_details.outputs
    assert (after.usage_details.qubits_required, after.usage_details.circuit_depth) == (2, 7)
    assert [p for p, _, _ in changed_fields(stale, after)] == [
        "usage_details.qubits_required",
        "usage_details.circuit_depth",
        "usage_details.circuit_ref",
    ]


def test_attach_rejects_empty_circuit():
    assert EMPTY.width == 0
    with pytest.raises(GeneratorError):
        attach_circuit(scaffold_card("x"), EMPTY, "e.qasm", SHA)


def test_sha256_hex():
    assert sha256_hex(b"") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"


@given(cards)
def test_attach_is_idempotent(card):
    once = attach_circuit(card, GROVER, "c.qasm", SHA)
    assert attach_circuit(once, GROVER, "c.qasm", SHA) == once
    assert changed_fields(once, attach_circuit(once, GROVER, "c.qasm", SHA)) == []


@given(cards)
def test_attach_does_not_touch_other_sections(card):
    assert _sections(attach_circuit(card, BELL, "c.qasm", SHA)) == _sections(card)


def test_attached_grover_card_is_complete():
    card = attach_circuit(parse_card((CARD_DIR / "grover.json").read_text()), GROVER, "g.qasm", SHA)
    assert all(validate_card(card, a).valid for a in Audience)
