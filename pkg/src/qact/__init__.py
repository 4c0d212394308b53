"""qact: Quantum Algorithm Cards toolkit.

Parse OpenQASM 2.0 circuits, derive resource metrics, keep them in a
card's usage details, validate and render cards per audience, and match
card requirements against hardware backend profiles.
"""

from qact.analysis import CircuitMetrics, analyze_source, compute_depth, compute_metrics, qv_requirement
from qact.card import (
    Audience,
    QuantumAlgorithmCard,
    ValidationReport,
    audience_sections,
    parse_card,
    serialize_card,
    validate_card,
)
from qact.generator import attach_circuit, scaffold_card
from qact.hardware import FitReport, HardwareProfile, match_card, parse_profiles, rank_backends
from qact.qasm import FlatCircuit, FlatOp, QasmProgram, eval_param_expr, flatten, parse_program
from qact.render import render_markdown

__version__ = "0.1.0"

__all__ = [
    "Audience",
    "CircuitMetrics",
    "FitReport",
    "FlatCircuit",
    "FlatOp",
    "HardwareProfile",
    "QasmProgram",
    "QuantumAlgorithmCard",
    "ValidationReport",
    "analyze_source",
    "attach_circuit",
    "audience_sections",
    "compute_depth",
    "compute_metrics",
    "eval_param_expr",
    "flatten",
    "match_card",
    "parse_card",
    "parse_profiles",
    "parse_program",
    "qv_requirement",
    "rank_backends",
    "render_markdown",
    "scaffold_card",
    "serialize_card",
    "validate_card",
]
