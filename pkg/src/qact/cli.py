"""``qact`` command line: analyze circuits and produce, check, render and match cards.

Exit codes: 0 success, 1 the card or circuit failed a domain check
(invalid card, nothing fits, empty circuit), 2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from qact.analysis import CircuitMetrics, compute_metrics
from qact.card import Audience, parse_card, serialize_card, validate_card
from qact.errors import GeneratorError, QactError, RenderError
from qact.generator import attach_circuit, changed_fields, scaffold_card, sha256_hex
from qact.hardware import parse_profiles, rank_backends
from qact.qasm import flatten, parse_program
from qact.render import render_markdown

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _read_text(path: str) -> str:
    return Path(path).read_bytes().decode("utf-8")


def _analyze_file(path: str) -> tuple[CircuitMetrics, bytes]:
    data = Path(path).read_bytes()
    return compute_metrics(flatten(parse_program(data.decode("utf-8")))), data


def _metrics_table(m: CircuitMetrics) -> str:
    hist = ", ".join(f"{k}:{v}" for k, v in sorted(m.gate_histogram.items())) or "-"
    arity = ", ".join(f"{k}q:{v}" for k, v in sorted(m.counts_by_arity.items())) or "-"
    rows = [
        ("width", f"{m.width} (declared {m.num_qubits})"),
        ("clbits", m.num_clbits),
        ("depth", m.depth),
        ("gates", hist),
        ("by arity", arity),
        ("two-qubit gates", m.two_qubit_gate_count),
        ("t-count", m.t_count),
        ("measure/reset", m.measure_count),
        ("opaque gates", "yes" if m.has_opaque else "no"),
        ("mid-circuit control", "yes" if m.uses_mid_circuit_control else "no"),
        ("log2 QV required", m.log2_qv_required),
    ]
    pad = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(pad)}  {v}" for k, v in rows)


def cmd_analyze(args: argparse.Namespace) -> int:
    metrics, _ = _analyze_file(args.circuit)
    if args.json:
        print(json.dumps(metrics.to_dict(), indent=2))
    else:
        print(_metrics_table(metrics))
    return EXIT_OK


def cmd_init(args: argparse.Namespace) -> int:
    out = Path(args.output)
    if out.exists() and not args.force:
        print(f"qact: {out} already exists (use --force to overwrite)", file=sys.stderr)
        return EXIT_USAGE
    out.write_text(serialize_card(scaffold_card(args.name)), encoding="utf-8")
    print(f"wrote {out}")
    return EXIT_OK


def _ref_path(card_path: Path, circuit_path: Path) -> str:
    """Circuit path as stored in the card: relative to the card's directory, POSIX separators."""
    rel = os.path.relpath(circuit_path.resolve(), card_path.resolve().parent)
    return Path(rel).as_posix()


def cmd_attach(args: argparse.Namespace) -> int:
    card_path = Path(args.card)
    card = parse_card(card_path.read_bytes())
    metrics, data = _analyze_file(args.circuit)
    try:
        updated = attach_circuit(card, metrics, _ref_path(card_path, Path(args.circuit)), sha256_hex(data))
    except GeneratorError as exc:
        print(f"qact: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    changes = changed_fields(card, updated)
    if not changes:
        print("no changes")
        return EXIT_OK
    card_path.write_text(serialize_card(updated), encoding="utf-8")
    for path, old, new in changes:
        print(f"{path}: {old} -> {new}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    card = parse_card(Path(args.card).read_bytes())
    report = validate_card(card, args.audience)
    print(json.dumps(report.to_dict(), indent=2) if args.json else report.format())
    return EXIT_OK if report.valid else EXIT_DOMAIN


def cmd_render(args: argparse.Namespace) -> int:
    card = parse_card(Path(args.card).read_bytes())
    try:
        text = render_markdown(card, args.audience)
    except RenderError as exc:
        print(f"qact: {exc}", file=sys.stderr)
        print(exc.report.format(), file=sys.stderr)
        return EXIT_DOMAIN
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _circuit_gates(card_path: Path, card) -> list[str] | None:
    """Gate names of the referenced circuit, if the file is present and unchanged."""
    ref = card.usage_details.circuit_ref if card.usage_details else None
    if ref is None:
        return None
    path = card_path.resolve().parent / ref.path
    if not path.is_file():
        print(f"qact: warning: referenced circuit {ref.path} not found; skipping gate-set notes", file=sys.stderr)
        return None
    metrics, data = _analyze_file(str(path))
    if sha256_hex(data) != ref.sha256:
        print(f"qact: warning: {ref.path} changed since it was attached; run `qact attach`", file=sys.stderr)
    return sorted(metrics.gate_histogram)


def cmd_match(args: argparse.Namespace) -> int:
    card_path = Path(args.card)
    card = parse_card(card_path.read_bytes())
    profiles = parse_profiles(_read_text(args.profiles))
    reports = rank_backends(card, profiles, args.shots, _circuit_gates(card_path, card))
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for rank, r in enumerate(reports, start=1):
            cost = "" if r.estimated_cost is None else f"  cost={r.estimated_cost:g}"
            print(f"{rank}. {r.backend}  {'FITS' if r.fits else 'does not fit'}{cost}")
            for c in r.checks:
                print(f"   {c.name}: required {c.required}, available {c.available}  {'ok' if c.passed else 'FAIL'}")
            for note in r.notes:
                print(f"   note: {note}")
    return EXIT_OK if any(r.fits for r in reports) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="qact", description="Quantum Algorithm Card toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    audiences = [a.value for a in Audience]

    p = sub.add_parser("analyze", help="print resource metrics of an OpenQASM 2.0 circuit")
    p.add_argument("circuit")
    p.add_argument("--json", action="store_true", help="emit metrics as JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("init", help="write a card scaffold")
    p.add_argument("name")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--force", action="store_true", help="overwrite an existing file")
    p.set_defaults(func=cmd_init)

    p = sub.add_parser("attach", help="analyze a circuit and record its metrics in the card (in place)")
    p.add_argument("card")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_attach)

    p = sub.add_parser("validate", help="check a card for completeness")
    p.add_argument("card")
    p.add_argument("--audience", choices=audiences)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="render a card as Markdown")
    p.add_argument("card")
    p.add_argument("--audience", choices=audiences)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("match", help="rank hardware backends for a card")
    p.add_argument("card")
    p.add_argument("profiles")
    p.add_argument("--shots", type=_positive_int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_match)
    return parser


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def run_cli(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"qact: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QactError as exc:
        print(f"qact: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
